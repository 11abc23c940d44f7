from math import isqrt

import pytest

from sailcount.counting import count_coprime_formula, count_reduced_formula
from sailcount.enumeration import (
    Solution,
    enumerate_coprime,
    enumerate_solutions,
    matrix_to_solution,
    orbit_table,
    orbits,
    solution_to_matrix,
)
from sailcount.mat2 import Mat2, det, is_euclid_reduced

PRIMES_TO_50 = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def test_enumerate_small():
    assert enumerate_solutions(1) == [Solution(1, 1, 0, 0)]
    assert enumerate_solutions(2) == [Solution(2, 1, 0, 0), Solution(1, 2, 0, 0)]


def test_enumerate_11_representatives():
    reps = {o.representative for o in orbit_table(11)}
    assert Solution(11, 1, 0, 0) in reps and Solution(6, 6, 5, 5) in reps
    assert len(enumerate_solutions(11)) == 11


def test_enumeration_invariants():
    for n in range(1, 120):
        sols = enumerate_solutions(n)
        assert len(sols) == count_reduced_formula(n)
        assert sols == sorted(set(sols), reverse=True)
        for s in sols:
            assert s.is_valid() and s.n == n
            assert max(s.entries) <= n


@pytest.mark.parametrize(
    "s, m",
    [
        (Solution(6, 6, 5, 5), Mat2(6, 5, 5, 6)),
        (Solution(1, 1, 0, 0), Mat2(1, 0, 0, 1)),
        (Solution(11, 1, 0, 0), Mat2(11, 0, 0, 1)),
        (Solution(2, 1, 0, 0), Mat2(2, 0, 0, 1)),
    ],
)
def test_solution_matrix_maps(s, m):
    assert solution_to_matrix(s) == m
    assert matrix_to_solution(m) == s


def test_matrix_to_solution_rejects_unreduced():
    with pytest.raises(ValueError):
        matrix_to_solution(Mat2(3, 1, 1, 1))


def test_bijection_with_reduced_matrices():
    for n in range(1, 201):
        sols = enumerate_solutions(n)
        mats = [solution_to_matrix(s) for s in sols]
        assert len(set(mats)) == len(mats)
        for s, m in zip(sols, mats):
            assert is_euclid_reduced(m) and det(m) == n
            assert matrix_to_solution(m) == s


def test_orbit_partition():
    for n in range(1, 150):
        sols = enumerate_solutions(n)
        orbs = orbits(sols)
        covered = [m for o in orbs for m in o.members]
        assert sorted(covered) == sorted(sols)
        for o in orbs:
            r = o.representative
            assert o.size in (1, 2, 4)
            assert r == max(o.members)
            assert (o.size == 1) == (r.a == r.b and r.c == r.d)


def test_orbits_require_closed_set():
    with pytest.raises(ValueError):
        orbits([Solution(2, 1, 0, 0)])


def test_enumerate_coprime():
    assert len(enumerate_coprime(4)) == 4
    assert len(enumerate_coprime(9)) == 9
    for p in PRIMES_TO_50:
        assert enumerate_coprime(p) == enumerate_solutions(p)
    for n in range(1, 150):
        assert len(enumerate_coprime(n)) == count_coprime_formula(n)


def test_gcd_scaling_bijection():
    for n in range(1, 200):
        rebuilt = set()
        for d in range(1, isqrt(n) + 1):
            if n % (d * d) == 0:
                rebuilt.update(s.scaled(d) for s in enumerate_coprime(n // (d * d)))
        assert rebuilt == set(enumerate_solutions(n))
