"""Solution quadruples (a, b, c, d) and their orbits under swapping a<->b and c<->d."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .counting import solutions_array
from .mat2 import Mat2, in_P, is_euclid_reduced


@dataclass(frozen=True, order=True)
class Solution:
    a: int
    b: int
    c: int
    d: int

    @property
    def n(self) -> int:
        return self.a * self.b - self.c * self.d

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def is_valid(self) -> bool:
        return min(self.entries) >= 0 and self.n > 0 and min(self.a, self.b) > max(self.c, self.d)

    def gcd(self) -> int:
        return gcd(gcd(self.a, self.b), gcd(self.c, self.d))

    def scaled(self, k: int) -> Solution:
        return Solution(k * self.a, k * self.b, k * self.c, k * self.d)

    def orbit_members(self) -> tuple[Solution, ...]:
        a, b, c, d = self.entries
        members = {Solution(a, b, c, d), Solution(b, a, c, d), Solution(a, b, d, c), Solution(b, a, d, c)}
        return tuple(sorted(members, reverse=True))


@dataclass(frozen=True)
class Orbit:
    representative: Solution  # lexicographically largest member
    members: tuple[Solution, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def enumerate_solutions(n: int) -> list[Solution]:
    """All solutions for ``n``, sorted lexicographically descending."""
    rows = solutions_array(n).tolist()
    return sorted((Solution(*r) for r in rows), reverse=True)


def enumerate_coprime(n: int) -> list[Solution]:
    return [s for s in enumerate_solutions(n) if s.gcd() == 1]


def solution_to_matrix(s: Solution) -> Mat2:
    """``(a, b, c, d) -> [[a, c], [d, b]]``."""
    return Mat2(s.a, s.c, s.d, s.b)


def matrix_to_solution(m: Mat2) -> Solution:
    if not in_P(m) or not is_euclid_reduced(m):
        raise ValueError(f"{m} is not Euclid-reduced")
    return Solution(m.a, m.d, m.b, m.c)


def orbits(solutions: list[Solution]) -> list[Orbit]:
    """Partition ``solutions`` into orbits, ordered by representative descending.

    Raises if the input is not closed under the swaps.
    """
    pool = set(solutions)
    out = []
    while pool:
        rep = max(pool)
        members = rep.orbit_members()
        missing = [m for m in members if m not in pool]
        if missing:
            raise ValueError(f"solution set is not closed under swaps: {missing[0]} missing")
        pool.difference_update(members)
        out.append(Orbit(rep, members))
    return out


def orbit_table(n: int) -> list[Orbit]:
    return orbits(enumerate_solutions(n))
