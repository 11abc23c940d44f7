"""Finite-index sublattices of Z^2 in Hermite normal form.

Every sublattice of index n is uniquely ``Z(d, 0) + Z(a, m)`` with
``d * m = n`` and ``0 <= a < d``; here d is the order of (1, 0) in the
quotient Z^2 / L.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from .counting import divisors


class Vec2(NamedTuple):
    x: int
    y: int

    def __add__(self, other: object) -> Vec2:  # type: ignore[override]
        if not isinstance(other, tuple):
            return NotImplemented
        return Vec2(self.x + other[0], self.y + other[1])

    def __sub__(self, other: tuple[int, int]) -> Vec2:
        return Vec2(self.x - other[0], self.y - other[1])

    def scale(self, k: int) -> Vec2:
        return Vec2(k * self.x, k * self.y)


def cross(u: tuple[int, int], v: tuple[int, int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _ext_gcd(p: int, q: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*p + t*q = g = gcd(p, q) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while q:
        k, r = divmod(p, q)
        p, q = q, r
        s0, s1 = s1, s0 - k * s1
        t0, t1 = t1, t0 - k * t1
    if p < 0:
        p, s0, t0 = -p, -s0, -t0
    return p, s0, t0


@dataclass(frozen=True, order=True)
class Sublattice2:
    d: int
    a: int
    m: int

    def __post_init__(self) -> None:
        if self.d < 1 or self.m < 1 or not 0 <= self.a < self.d:
            raise ValueError(f"invalid HNF triple (d={self.d}, a={self.a}, m={self.m})")

    @property
    def index(self) -> int:
        return self.d * self.m

    @property
    def basis(self) -> tuple[Vec2, Vec2]:
        return Vec2(self.d, 0), Vec2(self.a, self.m)

    def to_json(self) -> dict[str, int]:
        return {"d": self.d, "a": self.a, "m": self.m}

    def __contains__(self, v: tuple[int, int]) -> bool:
        return contains(self, Vec2(*v))

    def __str__(self) -> str:
        return f"Z({self.d},0)+Z({self.a},{self.m})"


def enumerate_sublattices(n: int) -> list[Sublattice2]:
    return [Sublattice2(d, a, n // d) for d in divisors(n) for a in range(d)]


def contains(lat: Sublattice2, v: Vec2) -> bool:
    k, r = divmod(v.y, lat.m)
    return r == 0 and (v.x - k * lat.a) % lat.d == 0


def from_basis(u: Vec2, v: Vec2) -> Sublattice2:
    """HNF triple of ``Zu + Zv``.

    m is the gcd of the y-coordinates; d = |det| / m; a is the x-coordinate,
    reduced mod d, of any lattice vector with y = m.
    """
    D = abs(cross(u, v))
    if D == 0:
        raise ValueError(f"{u} and {v} are linearly dependent")
    m, s, t = _ext_gcd(u[1], v[1])
    d = D // m
    a = (s * u[0] + t * v[0]) % d
    return Sublattice2(d, a, m)


def order_in_quotient(lat: Sublattice2, v: Vec2) -> int:
    """Least k >= 1 with ``k * v`` in the lattice."""
    k0 = lat.m // gcd(lat.m, v.y)
    # k0 * v has y divisible by m; what is left is the x-residue modulo d
    residue = (k0 * v.x - (k0 * v.y // lat.m) * lat.a) % lat.d
    return k0 * (lat.d // gcd(lat.d, residue))


def omega_y(lat: Sublattice2) -> int:
    """Least positive y with (0, y) in the lattice."""
    return lat.m * (lat.d // gcd(lat.a, lat.d))
