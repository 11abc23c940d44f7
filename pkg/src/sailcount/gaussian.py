"""Solutions of ab + cd = z over the Gaussian integers with min(|a|,|b|) > max(|c|,|d|).

All modulus comparisons use exact squared norms.  Over Z the main problem
reads ab - cd = n; here the sign is absorbed by taking c = d = i*k, which
contributes -k^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np


@dataclass(frozen=True, order=True)
class GaussInt:
    re: int
    im: int = 0

    @classmethod
    def coerce(cls, x: GaussInt | int) -> GaussInt:
        return x if isinstance(x, GaussInt) else cls(int(x), 0)

    def __add__(self, other: GaussInt | int) -> GaussInt:
        o = GaussInt.coerce(other)
        return GaussInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: GaussInt | int) -> GaussInt:
        o = GaussInt.coerce(other)
        return GaussInt(self.re - o.re, self.im - o.im)

    def __neg__(self) -> GaussInt:
        return GaussInt(-self.re, -self.im)

    def __mul__(self, other: GaussInt | int) -> GaussInt:
        o = GaussInt.coerce(other)
        return GaussInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conj(self) -> GaussInt:
        return GaussInt(self.re, -self.im)

    @property
    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        return f"{self.re}{self.im:+d}i"


I = GaussInt(0, 1)


def gauss_mul(x: GaussInt, y: GaussInt) -> GaussInt:
    return x * y


def gauss_conj(x: GaussInt) -> GaussInt:
    return x.conj()


def gauss_norm(x: GaussInt) -> int:
    return x.norm


@dataclass(frozen=True, order=True)
class GaussSolution:
    a: GaussInt
    b: GaussInt
    c: GaussInt
    d: GaussInt
    z: GaussInt

    @property
    def entries(self) -> tuple[GaussInt, GaussInt, GaussInt, GaussInt]:
        return (self.a, self.b, self.c, self.d)

    def satisfies_equation(self) -> bool:
        return self.a * self.b + self.c * self.d == self.z

    def satisfies_inequality(self) -> bool:
        return min(self.a.norm, self.b.norm) > max(self.c.norm, self.d.norm)

    def is_valid(self) -> bool:
        return self.satisfies_equation() and self.satisfies_inequality()

    def swaps(self) -> list[GaussSolution]:
        a, b, c, d, z = self.a, self.b, self.c, self.d, self.z
        return [
            GaussSolution(a, b, c, d, z),
            GaussSolution(b, a, c, d, z),
            GaussSolution(a, b, d, c, z),
            GaussSolution(b, a, d, c, z),
        ]


# (3+19i)(-15+12i) - (7-18i)^2 = 2+3i, written with c = d = i(7-18i) = 18+7i.
EXAMPLE_2_PLUS_3I = GaussSolution(
    GaussInt(3, 19), GaussInt(-15, 12), GaussInt(18, 7), GaussInt(18, 7), GaussInt(2, 3)
)


def _box(bound: int) -> tuple[np.ndarray, np.ndarray]:
    r = np.arange(-bound, bound + 1, dtype=np.int64)
    re, im = np.meshgrid(r, r, indexing="ij")
    return re.ravel(), im.ravel()


def search_solutions(z: GaussInt, bound: int, canonical: bool = False) -> list[GaussSolution]:
    """Every solution with all real and imaginary parts in [-bound, bound].

    Meet in the middle: all products ab are matched against all products cd
    with value z - ab, sorted by (value, max(|c|^2, |d|^2)) so the strict
    norm condition is a range query.  With ``canonical`` only the largest
    member of each {a<->b, c<->d} swap class is kept.
    """
    z = GaussInt.coerce(z)
    if z == GaussInt(0, 0):
        raise ValueError("z must be non-zero")
    if bound < 1:
        raise ValueError("bound must be positive")
    re, im = _box(bound)
    norm = re * re + im * im
    k = re.size
    i1, i2 = np.meshgrid(np.arange(k), np.arange(k), indexing="ij")
    i1, i2 = i1.ravel(), i2.ravel()
    pre = re[i1] * re[i2] - im[i1] * im[i2]
    pim = re[i1] * im[i2] + im[i1] * re[i2]
    max_norm = np.maximum(norm[i1], norm[i2])
    min_norm = np.minimum(norm[i1], norm[i2])

    off = 2 * bound * bound + abs(z.re) + abs(z.im)
    width = 2 * off + 1
    slots = 2 * bound * bound + 2

    def encode(xr: np.ndarray, xi: np.ndarray) -> np.ndarray:
        return (xr + off) * width + (xi + off)

    cd_key = encode(pre, pim) * slots + max_norm
    order = np.argsort(cd_key, kind="stable")
    cd_sorted = cd_key[order]

    ab_ok = min_norm > 0
    ab_idx = np.nonzero(ab_ok)[0]
    target = encode(z.re - pre[ab_idx], z.im - pim[ab_idx]) * slots
    lo = np.searchsorted(cd_sorted, target, side="left")
    hi = np.searchsorted(cd_sorted, target + min_norm[ab_idx], side="left")
    counts = hi - lo
    ab_rep = np.repeat(ab_idx, counts)
    starts = np.repeat(lo - np.cumsum(counts) + counts, counts)
    cd_rep = order[starts + np.arange(counts.sum())]

    out = []
    for p, q in zip(ab_rep.tolist(), cd_rep.tolist()):
        a = GaussInt(int(re[i1[p]]), int(im[i1[p]]))
        b = GaussInt(int(re[i2[p]]), int(im[i2[p]]))
        c = GaussInt(int(re[i1[q]]), int(im[i1[q]]))
        d = GaussInt(int(re[i2[q]]), int(im[i2[q]]))
        sol = GaussSolution(a, b, c, d, z)
        assert sol.is_valid()
        out.append(sol)
    if canonical:
        out = [s for s in out if s == max(s.swaps())]
    return sorted(out)


def search_solutions_naive(z: GaussInt, bound: int) -> list[GaussSolution]:
    """Direct loop over a, c, d with b = (z - cd) / a; for cross-checking small bounds."""
    z = GaussInt.coerce(z)
    r = range(-bound, bound + 1)
    box = [GaussInt(x, y) for x in r for y in r]
    out = []
    for a in box:
        na = a.norm
        if na == 0:
            continue
        small = [c for c in box if c.norm < na]
        for c in small:
            for d in small:
                w = (z - c * d) * a.conj()
                if w.re % na or w.im % na:
                    continue
                b = GaussInt(w.re // na, w.im // na)
                if max(abs(b.re), abs(b.im)) > bound:
                    continue
                sol = GaussSolution(a, b, c, d, z)
                if sol.satisfies_inequality():
                    out.append(sol)
    return sorted(out)


# -- parametric families ------------------------------------------------------


def _checked(sol: GaussSolution) -> GaussSolution:
    if not sol.satisfies_equation():
        raise AssertionError(f"identity fails: {sol}")
    if not sol.satisfies_inequality():
        raise AssertionError(f"modulus inequality fails: {sol}")
    return sol


def odd_identity_solution(m: int, n: int) -> GaussSolution:
    """Solution for z = 2m + 1: a = 2n + (2n^2 - m - 1)i, b = conj(a), c = d = i(2n^2 - m)."""
    if m < 0 or n < 1:
        raise ValueError(f"need m >= 0 and n >= 1, got m={m}, n={n}")
    a = GaussInt(2 * n, 2 * n * n - m - 1)
    c = I * (2 * n * n - m)
    return _checked(GaussSolution(a, a.conj(), c, c, GaussInt(2 * m + 1)))


def even_identity_solution(m: int, n: int) -> GaussSolution:
    """Solution for z = 2m: a = (2n+1) + (2n^2 + 2n - m)i, b = conj(a), c = d = i(2n^2 + 2n - m + 1)."""
    if m < 1 or n < 1:
        raise ValueError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    a = GaussInt(2 * n + 1, 2 * n * n + 2 * n - m)
    c = I * (2 * n * n + 2 * n - m + 1)
    return _checked(GaussSolution(a, a.conj(), c, c, GaussInt(2 * m)))


def verify_identities(m_max: int, n_max: int) -> list[str]:
    """Run both families over the given ranges; return a description of each failure."""
    failures = []
    for n in range(1, n_max + 1):
        for m in range(0, m_max + 1):
            families = [("odd", odd_identity_solution)]
            if m >= 1:
                families.append(("even", even_identity_solution))
            for name, make in families:
                try:
                    make(m, n)
                except AssertionError as exc:
                    failures.append(f"{name} m={m} n={n}: {exc}")
    return failures


# -- maps between solution sets -----------------------------------------------

Symmetry = Literal["conj", "negate", "times_i", "times_minus_i"]


def symmetry_map(s: GaussSolution, which: Symmetry) -> GaussSolution:
    """Send a solution for z to one for conj(z), -z, iz or -iz; moduli are unchanged."""
    a, b, c, d, z = s.a, s.b, s.c, s.d, s.z
    if which == "conj":
        return GaussSolution(a.conj(), b.conj(), c.conj(), d.conj(), z.conj())
    unit = {"negate": GaussInt(-1), "times_i": I, "times_minus_i": GaussInt(0, -1)}.get(which)
    if unit is None:
        raise ValueError(f"unknown symmetry {which!r}")
    return GaussSolution(unit * a, b, unit * c, d, unit * z)


def scaling_map(sol: GaussSolution, s: GaussInt, t: GaussInt) -> GaussSolution:
    """(a, b, c, d) -> (st a, conj(s) t b, st c, conj(s) t d), a solution for s conj(s) t^2 z."""
    s, t = GaussInt.coerce(s), GaussInt.coerce(t)
    if s.norm == 0 or t.norm == 0:
        raise ValueError("scaling factors must be non-zero")
    left, right = s * t, s.conj() * t
    return GaussSolution(
        left * sol.a, right * sol.b, left * sol.c, right * sol.d, s * s.conj() * t * t * sol.z
    )
