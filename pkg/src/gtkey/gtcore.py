"""Gelfand-Tsetlin patterns, weights, and the bijection with tableaux.

A triangular pattern is stored bottom-to-top: rows[0] is the single bottom
entry and rows[n-1] is the top row (the partition the polytope is attached
to).  Row r (1-based, bottom-up) has r entries x_{r,1} >= ... >= x_{r,r} and
interlaces the row above it:

    x_{r+1,j} >= x_{r,j} >= x_{r+1,j+1}.

A skew pattern has n+1 rows of constant length m, rows[0] being the inner
shape and rows[n] the outer shape, with the same interlacing condition and
all entries non-negative.

The weight of a pattern lists consecutive row-sum differences bottom-up, so
weight(p)[i-1] counts the entries equal to i in the corresponding tableau.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .combinat import check_partition, pad


@dataclass(frozen=True)
class GTPattern:
    """Triangular integer array, rows bottom-to-top."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ValueError("pattern needs at least one row")
        for i, row in enumerate(rows):
            if len(row) != i + 1:
                raise ValueError(f"row {i + 1} (bottom-up) must have {i + 1} entries")

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def top(self) -> tuple[int, ...]:
        return self.rows[-1]

    def flat(self) -> tuple[int, ...]:
        """Entries concatenated top row first; the canonical sort key."""
        return tuple(x for row in reversed(self.rows) for x in row)

    def __str__(self) -> str:
        width = max(len(str(x)) for row in self.rows for x in row)
        lines = []
        for depth, row in enumerate(reversed(self.rows)):
            pad_ = " " * (depth * (width + 1) // 2)
            lines.append(pad_ + " ".join(str(x).rjust(width) for x in row))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "GTPattern":
        return cls(tuple(tuple(r) for r in obj["rows"]))


@dataclass(frozen=True)
class SkewGTPattern:
    """Parallelogram integer array: n+1 rows of equal length, bottom-to-top."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) < 2:
            raise ValueError("skew pattern needs at least two rows")
        m = len(rows[0])
        if any(len(r) != m for r in rows):
            raise ValueError("all rows of a skew pattern must have equal length")

    @property
    def n(self) -> int:
        return len(self.rows) - 1

    @property
    def m(self) -> int:
        return len(self.rows[0])

    @property
    def top(self) -> tuple[int, ...]:
        return self.rows[-1]

    @property
    def bottom(self) -> tuple[int, ...]:
        return self.rows[0]

    def flat(self) -> tuple[int, ...]:
        return tuple(x for row in reversed(self.rows) for x in row)

    def __str__(self) -> str:
        width = max(len(str(x)) for row in self.rows for x in row)
        lines = []
        for depth, row in enumerate(reversed(self.rows)):
            pad_ = " " * (depth * (width + 1) // 2)
            lines.append(pad_ + " ".join(str(x).rjust(width) for x in row))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "SkewGTPattern":
        return cls(tuple(tuple(r) for r in obj["rows"]))


Pattern = Union[GTPattern, SkewGTPattern]


def validate_pattern(p: Pattern) -> bool:
    """True iff every interlacing inequality holds (and rows weakly decrease)."""
    rows = p.rows
    if isinstance(p, SkewGTPattern) and any(x < 0 for row in rows for x in row):
        return False
    for lower, upper in zip(rows, rows[1:]):
        # upper[j] >= lower[j] and lower[j] >= upper[j+1]
        for j, x in enumerate(lower):
            if upper[j] < x:
                return False
            if j + 1 < len(upper) and x < upper[j + 1]:
                return False
    # weak decrease along rows is implied; keep as a redundant safety check
    for row in rows:
        if any(row[j] < row[j + 1] for j in range(len(row) - 1)):
            return False
    return True


def weight(p: Pattern) -> tuple[int, ...]:
    """Consecutive row-sum differences, bottom-up.

    For a triangular pattern the (absent) row 0 counts as empty; for a skew
    pattern the bottom row is row 0.  Component i-1 equals the multiplicity
    of the value i in the associated tableau.
    """
    sums = [sum(r) for r in p.rows]
    if isinstance(p, GTPattern):
        sums = [0] + sums
    return tuple(sums[i + 1] - sums[i] for i in range(len(sums) - 1))


# --- semistandard tableaux --------------------------------------------------

@dataclass(frozen=True)
class SSYT:
    """Semistandard Young tableau: rows weakly increase, columns strictly."""

    shape: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        shape = check_partition(self.shape)
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "rows", rows)
        if len(rows) != len(shape) or any(
            len(r) != s for r, s in zip(rows, shape)
        ):
            raise ValueError("tableau rows do not match shape")
        for r in rows:
            if any(r[j] > r[j + 1] for j in range(len(r) - 1)):
                raise ValueError("tableau rows must weakly increase")
        for i in range(len(rows) - 1):
            for j in range(len(rows[i + 1])):
                if rows[i][j] >= rows[i + 1][j]:
                    raise ValueError("tableau columns must strictly increase")
        if any(x < 1 for r in rows for x in r):
            raise ValueError("tableau entries must be positive")

    def content(self, n: int) -> tuple[int, ...]:
        counts = [0] * n
        for r in self.rows:
            for x in r:
                counts[x - 1] += 1
        return tuple(counts)

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "SSYT":
        return cls(tuple(obj["shape"]), tuple(tuple(r) for r in obj["rows"]))


@dataclass(frozen=True)
class SkewSSYT:
    """Semistandard filling of a skew diagram outer/inner."""

    outer: tuple[int, ...]
    inner: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]  # entries of row r, columns inner_r+1..outer_r

    def __post_init__(self):
        outer = check_partition(self.outer)
        inner = pad(check_partition(self.inner), len(outer))
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "rows", rows)
        if any(i > o for i, o in zip(inner, outer)):
            raise ValueError("inner shape must fit inside outer shape")
        if len(rows) != len(outer) or any(
            len(r) != o - i for r, o, i in zip(rows, outer, inner)
        ):
            raise ValueError("tableau rows do not match skew shape")
        for r in rows:
            if any(r[j] > r[j + 1] for j in range(len(r) - 1)):
                raise ValueError("tableau rows must weakly increase")
        # column strictness, accounting for the row offsets
        for i in range(len(rows) - 1):
            for col in range(inner[i + 1], outer[i + 1]):
                if col >= inner[i]:
                    if rows[i][col - inner[i]] >= rows[i + 1][col - inner[i + 1]]:
                        raise ValueError("tableau columns must strictly increase")
        if any(x < 1 for r in rows for x in r):
            raise ValueError("tableau entries must be positive")

    def content(self, n: int) -> tuple[int, ...]:
        counts = [0] * n
        for r in self.rows:
            for x in r:
                counts[x - 1] += 1
        return tuple(counts)

    def to_json(self) -> dict:
        return {
            "outer": list(self.outer),
            "inner": list(self.inner),
            "rows": [list(r) for r in self.rows],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SkewSSYT":
        return cls(
            tuple(obj["outer"]), tuple(obj["inner"]), tuple(tuple(r) for r in obj["rows"])
        )


# --- bijection --------------------------------------------------------------

def pattern_to_tableau(p: GTPattern) -> SSYT:
    """Row r of the pattern is the shape of the entries <= r in the tableau."""
    if not validate_pattern(p):
        raise ValueError("invalid pattern")
    n = p.n
    shape = p.top
    rows: list[list[int]] = [[] for _ in shape]
    prev = (0,) * n
    for value in range(1, n + 1):
        cur = pad(p.rows[value - 1], n)
        for r in range(n):
            rows[r].extend([value] * (cur[r] - prev[r]))
        prev = cur
    return SSYT(shape, tuple(tuple(r) for r in rows))


def tableau_to_pattern(t: SSYT, n: int) -> GTPattern:
    """Inverse of pattern_to_tableau; entries of t must lie in 1..n."""
    if any(x > n for row in t.rows for x in row):
        raise ValueError(f"tableau entries exceed {n}")
    if len([s for s in t.shape if s > 0]) > n:
        raise ValueError("tableau has more rows than the pattern admits")
    rows = []
    for value in range(1, n + 1):
        row = tuple(
            sum(1 for x in t.rows[r] if x <= value) if r < len(t.rows) else 0
            for r in range(value)
        )
        rows.append(row)
    return GTPattern(tuple(rows))


def skew_pattern_to_tableau(p: SkewGTPattern) -> SkewSSYT:
    """Entries equal to r fill the horizontal strip rows[r] / rows[r-1]."""
    if not validate_pattern(p):
        raise ValueError("invalid pattern")
    outer, inner = p.top, p.bottom
    rows: list[list[int]] = [[] for _ in outer]
    for value in range(1, p.n + 1):
        prev, cur = p.rows[value - 1], p.rows[value]
        for r in range(p.m):
            rows[r].extend([value] * (cur[r] - prev[r]))
    return SkewSSYT(outer, inner, tuple(tuple(r) for r in rows))


def skew_tableau_to_pattern(t: SkewSSYT, n: int) -> SkewGTPattern:
    if any(x > n for row in t.rows for x in row):
        raise ValueError(f"tableau entries exceed {n}")
    m = len(t.outer)
    rows = [t.inner]
    for value in range(1, n + 1):
        rows.append(
            tuple(
                t.inner[r] + sum(1 for x in t.rows[r] if x <= value) for r in range(m)
            )
        )
    return SkewGTPattern(tuple(rows))
