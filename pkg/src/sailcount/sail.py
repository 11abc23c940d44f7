"""Sails of finite-index sublattices of Z^2 and the central-sailbasis bijection.

The sail is the part of the boundary of conv((L minus 0) in the closed first
quadrant) that faces the origin.  For a finite-index lattice it is a convex
polyline from (alpha_x, 0) to (0, omega_y).  ``Sail.points`` holds *every*
lattice point on that polyline, including points interior to an edge, so
that adjacent entries are exactly the consecutive pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .counting import divisors
from .enumeration import Solution
from .lattice import Sublattice2, Vec2, cross, enumerate_sublattices, from_basis, omega_y


@dataclass(frozen=True)
class Sail:
    lattice: Sublattice2
    points: tuple[Vec2, ...]  # x strictly decreasing, y strictly increasing

    @property
    def alpha_x(self) -> int:
        return self.points[0].x

    @property
    def omega_y(self) -> int:
        return self.points[-1].y


@dataclass(frozen=True)
class SailBasis:
    u: Vec2  # the member with larger x
    v: Vec2
    lattice: Sublattice2
    central: bool


def _staircase(lat: Sublattice2) -> list[Vec2]:
    """Pareto-minimal nonzero lattice points of the first quadrant, by increasing y.

    On row y = k*m the lattice points have x = k*a (mod d); the sail can only
    use the smallest such x, and only if it beats every lower row.
    """
    rows = omega_y(lat) // lat.m
    pts = [Vec2(lat.d, 0)]
    best = lat.d
    for k in range(1, rows + 1):
        x = (k * lat.a) % lat.d
        if x < best:
            pts.append(Vec2(x, k * lat.m))
            best = x
    return pts


def compute_sail(lat: Sublattice2) -> Sail:
    # Walk the staircase from the y-axis end (x increasing) and keep the lower
    # convex chain; collinear points stay since they are lattice points on the sail.
    stair = _staircase(lat)[::-1]
    chain: list[Vec2] = []
    for p in stair:
        while len(chain) >= 2 and cross(chain[-1] - chain[-2], p - chain[-2]) < 0:
            chain.pop()
        chain.append(p)
    return Sail(lat, tuple(reversed(chain)))


def consecutive_pairs(s: Sail) -> list[tuple[Vec2, Vec2]]:
    return list(zip(s.points, s.points[1:]))


def is_sailbasis(u: Vec2, v: Vec2) -> bool:
    """Whether u, v (first quadrant, independent) form a sailbasis of Zu + Zv."""
    if min(u.x, u.y, v.x, v.y) < 0:
        raise ValueError("vectors must lie in the closed first quadrant")
    if cross(u, v) == 0:
        raise ValueError(f"{u} and {v} are linearly dependent")
    return (v.y - u.y) * (v.x - u.x) < 0


def central_sailbasis(lat: Sublattice2) -> SailBasis | None:
    found = None
    for u, v in consecutive_pairs(compute_sail(lat)):
        if u.x > u.y and v.x < v.y:
            if found is not None:
                raise AssertionError(f"{lat} has two central sailbases")
            found = SailBasis(u, v, lat, central=True)
    return found


def is_bad(lat: Sublattice2) -> bool:
    return central_sailbasis(lat) is None


def diagonal_points(s: Sail) -> list[Vec2]:
    return [p for p in s.points if p.x == p.y]


def normalized_sailbasis(lat: Sublattice2) -> tuple[Vec2, Vec2]:
    """(diagonal sail point, its neighbour below the diagonal) for a bad lattice."""
    pts = compute_sail(lat).points
    for i, p in enumerate(pts):
        if p.x == p.y:
            # points are ordered by decreasing x, so the neighbour below the diagonal precedes p
            return p, pts[i - 1]
    raise ValueError(f"{lat} is not bad")


def enumerate_bad(n: int) -> list[Sublattice2]:
    """Bad sublattices of index n from their normalized sailbases u = (d, d), v = (n/d + a, a)."""
    out = []
    for d in divisors(n):
        e = n // d
        lo = 0 if d * d < n else d - e + 1
        for a in range(lo, d):
            out.append(from_basis(Vec2(d, d), Vec2(e + a, a)))
    return out


def central_lattices(n: int) -> list[tuple[Sublattice2, SailBasis]]:
    out = []
    for lat in enumerate_sublattices(n):
        sb = central_sailbasis(lat)
        if sb is not None:
            out.append((lat, sb))
    return out


def sailbasis_to_solution(sb: SailBasis) -> Solution:
    """u = (a, c) below the diagonal, v = (d, b) above it  ->  (a, b, c, d)."""
    if not sb.central:
        raise ValueError("sailbasis is not central")
    (a, c), (d, b) = sb.u, sb.v
    return Solution(a, b, c, d)


def solution_to_sailbasis(s: Solution) -> SailBasis:
    u, v = Vec2(s.a, s.c), Vec2(s.d, s.b)
    lat = from_basis(u, v)
    sb = central_sailbasis(lat)
    if sb is None or (sb.u, sb.v) != (u, v):
        raise AssertionError(f"{s} does not give the central sailbasis of {lat}")
    return sb


def adjacent_pairs_generate(lat: Sublattice2) -> bool:
    """Adjacent sail points form a basis of ``lat``; no other pair of sail points does."""
    pts = compute_sail(lat).points
    for i, u in enumerate(pts):
        for j in range(i + 1, len(pts)):
            v = pts[j]
            generates = abs(cross(u, v)) == lat.index and from_basis(u, v) == lat
            if generates != (j == i + 1):
                return False
    return True
