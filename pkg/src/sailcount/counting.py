"""Arithmetic functions and closed-form counts, each with a brute-force twin.

Closed forms::

    #R(n)   = sum_{d | n, d^2 >= n} (d + 1 - n/d)
    #R'(n)  = sum_{d^2 | n} mu(d) #R(n / d^2)
    #bad(n) = sum_{d | n, d^2 < n} d + sum_{d | n, d^2 >= n} (n/d - 1)
    sigma(n) = #R(n) + #bad(n)

The ``*_bruteforce`` functions never look at divisors of ``n``; they search
the solution set of ``n = ab - cd``, ``min(a, b) > max(c, d)`` directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, isqrt, prod
from typing import Literal

import numpy as np


def _check_positive(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"expected a positive integer, got {n!r}")


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization by trial division, as ``[(p, e), ...]`` with p ascending."""
    _check_positive(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def divisors(n: int) -> list[int]:
    _check_positive(n)
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    large = [n // d for d in reversed(small) if d * d != n]
    return small + large


@dataclass(frozen=True)
class DivisorProfile:
    n: int
    divisors: tuple[int, ...]
    prime_factorization: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, n: int) -> DivisorProfile:
        return cls(n, tuple(divisors(n)), tuple(factorize(n)))


def moebius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def sigma(n: int) -> int:
    return sum(divisors(n))


# -- closed forms -----------------------------------------------------------


def reduced_summands(n: int) -> list[int]:
    """The terms ``d + 1 - n/d`` over divisors with ``d^2 >= n``, d ascending."""
    return [d + 1 - n // d for d in divisors(n) if d * d >= n]


def count_reduced_formula(n: int) -> int:
    return sum(reduced_summands(n))


def count_coprime_formula(n: int) -> int:
    _check_positive(n)
    total = 0
    d = 1
    while d * d <= n:
        if n % (d * d) == 0:
            total += moebius(d) * count_reduced_formula(n // (d * d))
        d += 1
    return total


def sublattice_count(n: int) -> int:
    """Number of index-n sublattices of Z^2, i.e. sigma(n)."""
    return sigma(n)


def bad_count_formula(n: int) -> int:
    total = 0
    for d in divisors(n):
        total += d if d * d < n else n // d - 1
    return total


def q_binomial(m: int, k: int, q: int) -> int:
    """Gaussian binomial ``[m choose k]_q`` evaluated at an integer q >= 2."""
    if not 0 <= k <= m:
        raise ValueError(f"need 0 <= k <= m, got m={m}, k={k}")
    if q < 2:
        raise ValueError(f"need q >= 2, got {q}")
    num = prod(q ** (m - j) - 1 for j in range(k))
    den = prod(q ** (j + 1) - 1 for j in range(k))
    quot, rem = divmod(num, den)
    assert rem == 0
    return quot


def sublattice_count_general(dim: int, n: int) -> int:
    """Number of index-n sublattices of Z^dim, as a product of q-binomials over primes of n."""
    if dim < 1:
        raise ValueError(f"dimension must be >= 1, got {dim}")
    return prod(q_binomial(e + dim - 1, dim - 1, p) for p, e in factorize(n))


# -- brute force ------------------------------------------------------------


def _solutions_with_min_side(n: int, b: int) -> np.ndarray:
    """Solutions (a, b, c, d) of ab - cd = n with a >= b > max(c, d), for one value of b.

    From ab - n = cd <= (b - 1)^2 and ab >= n the range of a is
    ceil(n / b) .. floor((n + (b - 1)^2) / b).
    """
    lo = max(b, -(-n // b))
    hi = (n + (b - 1) ** 2) // b
    if lo > hi:
        return np.empty((0, 4), dtype=np.int64)
    a = np.arange(lo, hi + 1, dtype=np.int64)
    cs = np.arange(b, dtype=np.int64)
    target = a[:, None] * b - n  # = c * d
    # d is forced by c when c > 0; c = 0 requires target 0 and leaves d free.
    with np.errstate(divide="ignore", invalid="ignore"):
        dq, dr = np.divmod(target, np.where(cs == 0, 1, cs)[None, :])
    ok = (cs[None, :] > 0) & (dr == 0) & (dq < b) & (dq >= 0)
    ia, ic = np.nonzero(ok)
    parts = [np.stack([a[ia], np.full(ia.size, b), cs[ic], dq[ia, ic]], axis=1)]
    zero = np.nonzero(target[:, 0] == 0)[0]
    for i in zero:
        parts.append(np.stack([np.full(b, a[i]), np.full(b, b), np.zeros(b, np.int64), cs], axis=1))
    return np.concatenate(parts) if parts else np.empty((0, 4), dtype=np.int64)


def solutions_array(n: int) -> np.ndarray:
    """All (a, b, c, d) with ab - cd = n and min(a, b) > max(c, d), unordered, shape (k, 4)."""
    _check_positive(n)
    parts = []
    for b in range(1, n + 1):
        half = _solutions_with_min_side(n, b)
        if half.size == 0:
            continue
        parts.append(half)
        swapped = half[half[:, 0] != half[:, 1]][:, [1, 0, 2, 3]]
        parts.append(swapped)
    return np.concatenate(parts) if parts else np.empty((0, 4), dtype=np.int64)


def count_reduced_bruteforce(n: int) -> int:
    return int(solutions_array(n).shape[0])


def count_coprime_bruteforce(n: int) -> int:
    sols = solutions_array(n)
    g = np.gcd.reduce(sols, axis=1)
    return int(np.count_nonzero(g == 1))


def sublattice_count_bruteforce_3d(n: int) -> int:
    """Count upper-triangular HNF matrices in Z^3 with determinant n, by explicit listing.

    Diagonal (d1, d2, d3) with d1 d2 d3 = n; each above-diagonal entry ranges
    over the residues modulo the diagonal entry of its column.
    """
    _check_positive(n)
    count = 0
    for d1 in range(1, n + 1):
        for d2 in range(1, n + 1):
            if n % (d1 * d2):
                continue
            d3 = n // (d1 * d2)
            for _ in itertools.product(range(d2), range(d3), range(d3)):
                count += 1
    return count


# -- sequences and sweeps ---------------------------------------------------

Kind = Literal["reduced", "coprime"]


def sequence(kind: Kind, n_max: int) -> list[int]:
    _check_positive(n_max)
    if kind == "reduced":
        f = count_reduced_formula
    elif kind == "coprime":
        f = count_coprime_formula
    else:
        raise ValueError(f"unknown sequence kind {kind!r}")
    return [f(n) for n in range(1, n_max + 1)]


def format_bfile(terms: list[int], offset: int = 1) -> str:
    return "".join(f"{i} {t}\n" for i, t in enumerate(terms, start=offset))


def formula_tables(n_max: int) -> dict[str, np.ndarray]:
    """sigma, #R and #bad for every n <= n_max at once, indexed by n (slot 0 unused).

    Evaluates the same divisor sums as the per-n functions by walking all
    pairs (d, e) with d * e = n; each pair is visited from its smaller member,
    so the loop runs only sqrt(n_max) times.
    """
    _check_positive(n_max)
    sig = np.zeros(n_max + 1, dtype=np.int64)
    red = np.zeros(n_max + 1, dtype=np.int64)
    bad = np.zeros(n_max + 1, dtype=np.int64)
    for s in range(1, isqrt(n_max) + 1):
        t = np.arange(s, n_max // s + 1, dtype=np.int64)
        n = s * t
        # pair (d, e) = (t, s): d = t >= s = e so d^2 >= n
        np.add.at(sig, n, t)
        np.add.at(red, n, t + 1 - s)
        np.add.at(bad, n, s - 1)
        # pair (d, e) = (s, t) with s < t: d^2 < n
        t2 = t[t > s]
        n2 = s * t2
        np.add.at(sig, n2, s)
        np.add.at(bad, n2, s)
    return {"sigma": sig, "reduced": red, "bad": bad}



def gcd4(a: int, b: int, c: int, d: int) -> int:
    return gcd(gcd(a, b), gcd(c, d))
