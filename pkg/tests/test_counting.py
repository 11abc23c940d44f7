import itertools
from math import isqrt

import pytest

from sailcount import counting
from sailcount.counting import (
    DivisorProfile,
    bad_count_formula,
    count_coprime_bruteforce,
    count_coprime_formula,
    count_reduced_bruteforce,
    count_reduced_formula,
    divisors,
    format_bfile,
    formula_tables,
    moebius,
    q_binomial,
    reduced_summands,
    sequence,
    sublattice_count,
    sublattice_count_bruteforce_3d,
    sublattice_count_general,
)

REDUCED_20 = [1, 2, 3, 5, 5, 8, 7, 11, 10, 14, 11, 19, 13, 20, 18, 24, 17, 30, 19, 31]
COPRIME_20 = [1, 2, 3, 4, 5, 8, 7, 9, 9, 14, 11, 16, 13, 20, 18, 19, 17, 28, 19, 26]


def is_prime(n):
    return n >= 2 and all(n % p for p in range(2, isqrt(n) + 1))


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(11) == [1, 11]
    with pytest.raises(ValueError):
        divisors(0)


def test_divisors_against_definition():
    for n in range(1, 300):
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


def test_divisor_profile():
    p = DivisorProfile.of(360)
    assert p.prime_factorization == ((2, 3), (3, 2), (5, 1))
    assert list(p.divisors) == divisors(360)
    for n in range(1, 500):
        prof = DivisorProfile.of(n)
        prod = 1
        for q, e in prof.prime_factorization:
            assert is_prime(q)
            prod *= q**e
        assert prod == n


def test_moebius():
    assert moebius(1) == 1
    assert moebius(6) == 1
    assert moebius(12) == 0
    assert moebius(30) == -1
    with pytest.raises(ValueError):
        moebius(0)


def test_moebius_sums_to_zero_over_divisors():
    for n in range(2, 300):
        assert sum(moebius(d) for d in divisors(n)) == 0


@pytest.mark.parametrize("n, expected", [(1, 1), (12, 19), (4, 5), (15, 18), (14, 20)])
def test_count_reduced_formula(n, expected):
    assert count_reduced_formula(n) == expected


def test_reduced_summands_examples():
    assert reduced_summands(12) == [4 + 1 - 3, 6 + 1 - 2, 12 + 1 - 1]
    assert reduced_summands(14) == [7 + 1 - 2, 14 + 1 - 1]
    assert reduced_summands(15) == [5 + 1 - 3, 15 + 1 - 1]


@pytest.mark.parametrize("n, expected", [(2, 2), (11, 11), (14, 20)])
def test_count_reduced_bruteforce(n, expected):
    assert count_reduced_bruteforce(n) == expected


def naive_count(n, coprime=False):
    """Literal four-fold loop over {0..n}^4."""
    from math import gcd

    count = 0
    for a, b, c, d in itertools.product(range(n + 1), repeat=4):
        if a * b - c * d == n and min(a, b) > max(c, d):
            if not coprime or gcd(gcd(a, b), gcd(c, d)) == 1:
                count += 1
    return count


def test_bruteforce_matches_naive_loop():
    for n in range(1, 19):
        assert count_reduced_bruteforce(n) == naive_count(n)
        assert count_coprime_bruteforce(n) == naive_count(n, coprime=True)


@pytest.mark.parametrize("n, expected", [(8, 9), (4, 4), (11, 11)])
def test_count_coprime_formula(n, expected):
    assert count_coprime_formula(n) == expected


@pytest.mark.parametrize("n, expected", [(9, 9), (16, 19), (1, 1)])
def test_count_coprime_bruteforce(n, expected):
    assert count_coprime_bruteforce(n) == expected


def test_coprime_formula_vs_bruteforce():
    for n in range(1, 301):
        assert count_coprime_formula(n) == count_coprime_bruteforce(n), n


def test_gcd_decomposition_identity():
    for n in range(1, 501):
        total = sum(
            count_coprime_formula(n // (d * d)) for d in range(1, isqrt(n) + 1) if n % (d * d) == 0
        )
        assert total == count_reduced_formula(n)


def test_coprime_equals_all_iff_squarefree():
    for n in range(1, 300):
        assert (count_coprime_formula(n) == count_reduced_formula(n)) == (moebius(n) != 0)


def _subgroups_of_index_n(n):
    """Distinct subgroups of order n in (Z/n)^2, i.e. sublattices of index n containing nZ^2."""
    elems = [(x, y) for x in range(n) for y in range(n)]
    seen = set()
    for g1, g2 in itertools.combinations_with_replacement(elems, 2):
        group = {((i * g1[0] + j * g2[0]) % n, (i * g1[1] + j * g2[1]) % n) for i in range(n) for j in range(n)}
        if len(group) == n:
            seen.add(frozenset(group))
    return seen


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 3), (12, 28)])
def test_sublattice_count(n, expected):
    assert sublattice_count(n) == expected


def test_sublattice_count_against_subgroup_oracle():
    for n in range(1, 13):
        assert len(_subgroups_of_index_n(n)) == sublattice_count(n)


@pytest.mark.parametrize("n, expected", [(1, 0), (2, 1), (12, 9)])
def test_bad_count_formula(n, expected):
    assert bad_count_formula(n) == expected


def test_partition_identity():
    for n in range(1, 5000):
        assert sublattice_count(n) - bad_count_formula(n) == count_reduced_formula(n)


def test_lower_bound_and_equality_cases():
    for n in range(2, 2000):
        r = count_reduced_formula(n)
        assert r >= n
        assert (r == n) == is_prime(n)
        is_prime_square = isqrt(n) ** 2 == n and is_prime(isqrt(n))
        assert (r == n + 1) == is_prime_square


def test_summands_positive_and_last_is_n():
    for n in range(1, 2000):
        terms = reduced_summands(n)
        assert all(t > 0 for t in terms)
        assert terms[-1] == n


def q_binomial_pascal(m, k, q):
    if k == 0 or k == m:
        return 1
    return q_binomial_pascal(m - 1, k - 1, q) + q**k * q_binomial_pascal(m - 1, k, q)


def test_q_binomial_examples():
    assert q_binomial(1, 0, 2) == 1
    assert q_binomial(2, 1, 2) == 3
    assert q_binomial(3, 1, 3) == 13


def test_q_binomial_against_recurrence():
    for q in (2, 3, 5, 7):
        for m in range(0, 9):
            for k in range(m + 1):
                assert q_binomial(m, k, q) == q_binomial_pascal(m, k, q)


def test_q_binomial_rejects_bad_args():
    with pytest.raises(ValueError):
        q_binomial(2, 3, 2)
    with pytest.raises(ValueError):
        q_binomial(2, 1, 1)


def test_sublattice_count_general_examples():
    assert sublattice_count_general(2, 12) == 28
    assert sublattice_count_general(3, 2) == 7
    assert sublattice_count_general(3, 4) == 35
    assert sublattice_count_general(1, 30) == 1


def test_sublattice_count_general_3d():
    for n in range(1, 31):
        assert sublattice_count_general(3, n) == sublattice_count_bruteforce_3d(n)


def test_sublattice_count_general_2d_is_sigma():
    for n in range(1, 501):
        assert sublattice_count_general(2, n) == sublattice_count(n)


def test_sequences():
    assert sequence("reduced", 20) == REDUCED_20
    assert sequence("coprime", 20) == COPRIME_20
    assert sequence("reduced", 1) == [1]
    with pytest.raises(ValueError):
        sequence("other", 3)


def test_bfile_format():
    assert format_bfile([1, 2, 3]) == "1 1\n2 2\n3 3\n"


def test_formula_tables_match_per_n_functions():
    t = formula_tables(3000)
    for n in range(1, 3001):
        assert t["sigma"][n] == sublattice_count(n)
        assert t["reduced"][n] == count_reduced_formula(n)
        assert t["bad"][n] == bad_count_formula(n)


def test_formula_tables_spot_checks_near_million():
    t = formula_tables(10**6)
    for n in (999_983, 720_720, 1_000_000, 998_001, 524_288):
        assert t["reduced"][n] == count_reduced_formula(n)
        assert t["bad"][n] == bad_count_formula(n)
        assert t["sigma"][n] == sublattice_count(n)


def test_bruteforce_does_not_use_divisors(monkeypatch):
    def boom(n):
        raise AssertionError("oracle consulted divisors")

    monkeypatch.setattr(counting, "divisors", boom)
    assert count_reduced_bruteforce(12) == 19
