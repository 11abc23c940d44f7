"""Cross-checks of every closed form against its independent route, up to a bound.

Functions are looked up through their modules at call time so a test can
patch one (e.g. an off-by-one in the reduced count) and watch the suite fail.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import counting, enumeration, gaussian, lattice, sail


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _first_failure(ns: range, ok: Callable[[int], bool]) -> str:
    for n in ns:
        if not ok(n):
            return f"fails at n={n}"
    return ""


def check_formula_vs_bruteforce(n_max: int) -> str:
    return _first_failure(
        range(1, n_max + 1),
        lambda n: counting.count_reduced_formula(n) == counting.count_reduced_bruteforce(n),
    )


def check_coprime(n_max: int) -> str:
    return _first_failure(
        range(1, n_max + 1),
        lambda n: counting.count_coprime_formula(n) == counting.count_coprime_bruteforce(n),
    )


def check_sublattice_partition(n_max: int) -> str:
    return _first_failure(
        range(1, n_max + 1),
        lambda n: counting.sublattice_count(n) - counting.bad_count_formula(n)
        == counting.count_reduced_formula(n),
    )


def check_sublattice_enumeration(n_max: int) -> str:
    def ok(n: int) -> bool:
        lats = lattice.enumerate_sublattices(n)
        return len(set(lats)) == len(lats) == counting.sublattice_count(n)

    return _first_failure(range(1, n_max + 1), ok)


def check_sail_partition(n_max: int) -> str:
    def ok(n: int) -> bool:
        central = sail.central_lattices(n)
        bad = sail.enumerate_bad(n)
        by_sail = {lat for lat in lattice.enumerate_sublattices(n) if sail.is_bad(lat)}
        return (
            len(central) == counting.count_reduced_formula(n)
            and len(bad) == counting.bad_count_formula(n)
            and set(bad) == by_sail
            and len(central) + len(bad) == counting.sublattice_count(n)
        )

    return _first_failure(range(1, n_max + 1), ok)


def check_bijection(n_max: int) -> str:
    def ok(n: int) -> bool:
        sols = enumeration.enumerate_solutions(n)
        if len(sols) != counting.count_reduced_formula(n):
            return False
        seen = set()
        for s in sols:
            sb = sail.solution_to_sailbasis(s)
            if sail.sailbasis_to_solution(sb) != s:
                return False
            m = enumeration.solution_to_matrix(s)
            if enumeration.matrix_to_solution(m) != s:
                return False
            seen.add(sb.lattice)
        return len(seen) == len(sols)

    return _first_failure(range(1, n_max + 1), ok)


def check_adjacent_bases(n_max: int) -> str:
    return _first_failure(
        range(1, n_max + 1),
        lambda n: all(sail.adjacent_pairs_generate(lat) for lat in lattice.enumerate_sublattices(n)),
    )


def check_gaussian(n_max: int) -> str:
    bound = min(n_max, 200)
    failures = gaussian.verify_identities(bound, bound)
    if failures:
        return failures[0]
    ex = gaussian.EXAMPLE_2_PLUS_3I
    if not ex.satisfies_equation():
        return "2+3i example identity fails"
    return ""


CHECKS: dict[str, Callable[[int], str]] = {
    "formula_vs_bruteforce": check_formula_vs_bruteforce,
    "coprime_formula_vs_bruteforce": check_coprime,
    "sublattice_enumeration": check_sublattice_enumeration,
    "sigma_minus_bad": check_sublattice_partition,
    "sail_partition": check_sail_partition,
    "solution_sailbasis_bijection": check_bijection,
    "consecutive_sail_bases": check_adjacent_bases,
    "gaussian_identities": check_gaussian,
}


def run_all(n_max: int) -> list[CheckResult]:
    if n_max < 1:
        raise ValueError("n_max must be positive")
    results = []
    for name, check in CHECKS.items():
        try:
            detail = check(n_max)
        except (AssertionError, ValueError) as exc:
            detail = f"raised {type(exc).__name__}: {exc}"
        results.append(CheckResult(name, not detail, detail))
    return results
