"""2x2 non-negative integer matrices and their Euclidean reduction.

An elementary reduction subtracts one row (or column) from the other.  A
matrix with non-negative entries and positive determinant is Euclid-reduced
when no elementary reduction keeps it in that set; for ``[[a, b], [c, d]]``
this happens exactly when ``min(a, d) > max(b, c)``.

Python integers are unbounded, so determinants never wrap around.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence


class ReductionKind(enum.Enum):
    LEFT_E = "LeftE"  # row1 <- row1 - row2   (E M)
    LEFT_ET = "LeftEt"  # row2 <- row2 - row1   (E^t M)
    RIGHT_E = "RightE"  # col2 <- col2 - col1   (M E)
    RIGHT_ET = "RightEt"  # col1 <- col1 - col2   (M E^t)


REDUCTION_ORDER = (
    ReductionKind.LEFT_E,
    ReductionKind.LEFT_ET,
    ReductionKind.RIGHT_E,
    ReductionKind.RIGHT_ET,
)


@dataclass(frozen=True, order=True)
class Mat2:
    """Row-major 2x2 integer matrix ``[[a, b], [c, d]]``.

    Entries are not forced to be non-negative so that blocked reductions can
    still be represented; use :func:`in_P` for membership in the positive set.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"entry {name} must be an int, got {value!r}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> Mat2:
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError(f"expected a 2x2 array of rows, got {rows!r}")
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    @property
    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def is_nonnegative(self) -> bool:
        return min(self.entries) >= 0

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


def det(m: Mat2) -> int:
    return m.a * m.d - m.b * m.c


def in_P(m: Mat2) -> bool:
    """Non-negative entries and strictly positive determinant."""
    return m.is_nonnegative() and det(m) > 0


def apply_reduction(m: Mat2, kind: ReductionKind) -> Mat2:
    a, b, c, d = m.entries
    if kind is ReductionKind.LEFT_E:
        return Mat2(a - c, b - d, c, d)
    if kind is ReductionKind.LEFT_ET:
        return Mat2(a, b, c - a, d - b)
    if kind is ReductionKind.RIGHT_E:
        return Mat2(a, b - a, c, d - c)
    if kind is ReductionKind.RIGHT_ET:
        return Mat2(a - b, b, c - d, d)
    raise ValueError(f"unknown reduction {kind!r}")


class Reduction(NamedTuple):
    kind: ReductionKind
    image: Mat2
    in_p: bool


def elementary_reductions(m: Mat2) -> list[Reduction]:
    """All four images of ``m``, in the fixed order LeftE, LeftEt, RightE, RightEt."""
    out = []
    for kind in REDUCTION_ORDER:
        image = apply_reduction(m, kind)
        out.append(Reduction(kind, image, in_P(image)))
    return out


def _require_P(m: Mat2) -> None:
    if not in_P(m):
        raise ValueError(f"{m} is not a non-negative matrix with positive determinant")


def is_euclid_reduced(m: Mat2) -> bool:
    _require_P(m)
    return min(m.a, m.d) > max(m.b, m.c)


@dataclass(frozen=True)
class ReductionTrace:
    start: Mat2
    steps: tuple[tuple[ReductionKind, Mat2], ...] = field(default=())

    @property
    def result(self) -> Mat2:
        return self.steps[-1][1] if self.steps else self.start

    def replay(self) -> Mat2:
        """Re-apply every recorded move and check it lands on the recorded matrix."""
        cur = self.start
        for kind, expected in self.steps:
            cur = apply_reduction(cur, kind)
            if cur != expected or not in_P(cur):
                raise AssertionError(f"trace does not replay at {kind.value}: {cur} != {expected}")
        return cur


def _first_move(a: int, b: int, c: int, d: int) -> ReductionKind | None:
    # det > 0 is preserved by every move, so only the sign of entries matters.
    if a >= c and b >= d:
        return ReductionKind.LEFT_E
    if c >= a and d >= b:
        return ReductionKind.LEFT_ET
    if b >= a and d >= c:
        return ReductionKind.RIGHT_E
    if a >= b and c >= d:
        return ReductionKind.RIGHT_ET
    return None


def reduce(m: Mat2) -> ReductionTrace:
    """Reduce ``m`` by always taking the first admissible move in REDUCTION_ORDER.

    Each move strictly lowers the entry sum, so there are at most
    ``a + b + c + d`` steps.
    """
    _require_P(m)
    steps = []
    cur = m
    while (kind := _first_move(*cur.entries)) is not None:
        cur = apply_reduction(cur, kind)
        steps.append((kind, cur))
    return ReductionTrace(m, tuple(steps))


def all_normal_forms(m: Mat2) -> set[Mat2]:
    """Every Euclid-reduced matrix reachable from ``m`` by moves that stay in P."""
    _require_P(m)
    seen = {m}
    stack = [m]
    found = set()
    while stack:
        cur = stack.pop()
        moved = False
        for _, image, ok in elementary_reductions(cur):
            if not ok:
                continue
            moved = True
            if image not in seen:
                seen.add(image)
                stack.append(image)
        if not moved:
            found.add(cur)
    return found


# -- rectangular matrices ----------------------------------------------------

MatGeneral = tuple[tuple[int, ...], ...]


def as_general(rows: Sequence[Sequence[int]]) -> MatGeneral:
    grid = tuple(tuple(int(x) for x in row) for row in rows)
    if not grid or len({len(r) for r in grid}) != 1:
        raise ValueError("matrix rows must be non-empty and of equal length")
    if any(x < 0 for row in grid for x in row):
        raise ValueError("entries must be non-negative")
    return grid


def _line_moves(lines: MatGeneral) -> Iterator[tuple[int, ...]]:
    for i, src in enumerate(lines):
        if not any(src):
            continue  # subtracting a zero line is the identity, not a move
        for j, dst in enumerate(lines):
            if i != j:
                yield tuple(y - x for x, y in zip(src, dst))


def is_general_reduced(rows: Sequence[Sequence[int]]) -> bool:
    """True iff every subtraction of one row/column from another creates a negative entry.

    Subtracting an all-zero row or column changes nothing and is not counted
    as a move.
    """
    grid = as_general(rows)
    cols = tuple(zip(*grid))
    for lines in (grid, cols):
        for result in _line_moves(lines):
            if min(result) >= 0:
                return False
    return True


def det3(rows: Sequence[Sequence[int]]) -> int:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def family_3x3(x: int) -> MatGeneral:
    """Determinant-one 3x3 matrix that is reduced for every x >= 0."""
    return (
        (4 + x, 2 + x, 1 + x),
        (x, 1 + x, 3 + x),
        (1 + x, 1 + x, 2 + x),
    )


def family_2x3(n: int) -> MatGeneral:
    """Reduced 2x3 matrix whose columns generate Z^2 (n >= 5, n % 5 != 4)."""
    return ((n, 3, 2), (1, 2, 3))


def columns_generate_z2(rows: Sequence[Sequence[int]]) -> bool:
    """Whether the columns of a 2xk integer matrix span Z^2 (gcd of 2x2 minors is 1)."""
    from math import gcd

    (top, bottom) = rows
    g = 0
    k = len(top)
    for i in range(k):
        for j in range(i + 1, k):
            g = gcd(g, top[i] * bottom[j] - top[j] * bottom[i])
    return g == 1


# -- determinant zero -------------------------------------------------------


@dataclass(frozen=True)
class Det0Classification:
    terminal: Mat2
    value: int
    position: tuple[int, int] | None  # 1-based (row, col); None for the zero matrix

    @property
    def degenerate(self) -> bool:
        return self.position is None


def _strip(x: tuple[int, int], y: tuple[int, int]) -> tuple[tuple[int, int], tuple[int, int]]:
    # Subtract the dominated vector from the dominating one until one of them is zero.
    while any(x) and any(y):
        if x[0] >= y[0] and x[1] >= y[1]:
            k = min(x[i] // y[i] for i in (0, 1) if y[i])
            x = (x[0] - k * y[0], x[1] - k * y[1])
        elif y[0] >= x[0] and y[1] >= x[1]:
            k = min(y[i] // x[i] for i in (0, 1) if x[i])
            y = (y[0] - k * x[0], y[1] - k * x[1])
        else:
            raise ValueError("rows are not comparable; determinant is not zero")
    return x, y


def classify_det0(m: Mat2) -> Det0Classification:
    """Reduce a determinant-zero matrix (rows first, then columns) to a single non-zero entry."""
    if det(m) != 0:
        raise ValueError(f"{m} has non-zero determinant {det(m)}")
    if not m.is_nonnegative():
        raise ValueError(f"{m} has negative entries")
    r1, r2 = _strip((m.a, m.b), (m.c, m.d))
    c1, c2 = _strip((r1[0], r2[0]), (r1[1], r2[1]))
    terminal = Mat2(c1[0], c2[0], c1[1], c2[1])
    nonzero = [(i // 2 + 1, i % 2 + 1, v) for i, v in enumerate(terminal.entries) if v]
    if not nonzero:
        return Det0Classification(terminal, 0, None)
    if len(nonzero) != 1:
        raise AssertionError(f"det-0 reduction ended at {terminal}")
    row, col, value = nonzero[0]
    return Det0Classification(terminal, value, (row, col))


def is_det0_reduced(m: Mat2) -> bool:
    """Reducedness for det-0 matrices: no non-trivial row/column subtraction stays non-negative."""
    return is_general_reduced(m.rows)
