"""Lattice points of Gelfand-Tsetlin polytopes and their dilations.

Patterns are generated row by row from the fixed top row downwards; each
entry of the next row ranges over an interval determined by the row above
(and, for skew patterns, by the fixed bottom row).  A weight filter fixes
every intermediate row sum, so infeasible branches are cut by running
partial-sum bounds instead of post-filtering.

Enumeration order is lexicographic on the entries read top row first - the
canonical order used everywhere downstream.  Counting shares the same
recursion but memoizes on (level, row), which collapses the search tree to
its distinct consecutive-row transitions.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterator, Mapping, Optional

from .combinat import check_partition, contains, pad
from .gtcore import GTPattern, Pattern, SkewGTPattern

# Forced equalities are given as cells (i, j), 1 <= j <= i, meaning
# x_{i,j} = x_{i+1,j} (rows numbered bottom-up as in gtcore).
Cells = frozenset


@dataclass(frozen=True)
class PolytopeSpec:
    """A GT polytope: triangular GT(lambda) or skew GT(lambda/mu), with an
    optional weight filter selecting patterns of fixed weight."""

    kind: str  # "triangular" | "skew"
    top: tuple[int, ...]
    bottom: Optional[tuple[int, ...]] = None
    weight: Optional[tuple[int, ...]] = None
    n: int = 0

    def __post_init__(self):
        if self.kind not in ("triangular", "skew"):
            raise ValueError(f"unknown kind {self.kind!r}")
        object.__setattr__(self, "top", check_partition(self.top))
        if self.kind == "triangular":
            if self.bottom is not None:
                raise ValueError("triangular specs take no bottom row")
            object.__setattr__(self, "n", len(self.top))
        else:
            if self.bottom is None:
                raise ValueError("skew specs need a bottom row")
            bottom = pad(check_partition(self.bottom), len(self.top))
            object.__setattr__(self, "bottom", bottom)
            if not contains(self.top, bottom):
                raise ValueError("bottom row must fit inside the top row")
            if self.n <= 0:
                object.__setattr__(self, "n", len(self.top))
        if self.weight is not None:
            w = tuple(self.weight)
            if len(w) != self.n or any(x < 0 for x in w):
                raise ValueError(f"weight must be {self.n} non-negative integers")
            object.__setattr__(self, "weight", w)

    @property
    def m(self) -> int:
        return len(self.top)

    def dilate(self, k: int) -> "PolytopeSpec":
        if k < 0:
            raise ValueError("dilation factor must be >= 0")
        return replace(
            self,
            top=tuple(k * x for x in self.top),
            bottom=None if self.bottom is None else tuple(k * x for x in self.bottom),
            weight=None if self.weight is None else tuple(k * x for x in self.weight),
        )

    def describe(self) -> dict:
        desc = {"kind": self.kind, "top": list(self.top)}
        if self.bottom is not None:
            desc["bottom"] = list(self.bottom)
        if self.weight is not None:
            desc["weight"] = list(self.weight)
        desc["n"] = self.n
        return desc


def gt_spec(lam, weight=None, n: int | None = None) -> PolytopeSpec:
    lam = check_partition(lam)
    if n is not None:
        lam = pad(lam, n)
    return PolytopeSpec("triangular", lam, weight=None if weight is None else tuple(weight))


def skew_spec(lam, mu=(), weight=None, n: int | None = None) -> PolytopeSpec:
    lam = check_partition(lam)
    mu = pad(check_partition(mu), len(lam))
    return PolytopeSpec(
        "skew",
        lam,
        bottom=mu,
        weight=None if weight is None else tuple(weight),
        n=n if n is not None else len(lam),
    )


# --- row generation kernel ---------------------------------------------------

def _iter_rows(ranges: list[tuple[int, int]], target: Optional[int]) -> Iterator[tuple[int, ...]]:
    """All tuples with entry j in ranges[j], optionally of prescribed sum,
    in ascending lexicographic order."""
    k = len(ranges)
    if target is None:
        def rec(j: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
            if j == k:
                yield acc
                return
            lo, hi = ranges[j]
            for v in range(lo, hi + 1):
                yield from rec(j + 1, acc + (v,))

        yield from rec(0, ())
        return

    lo_suffix = [0] * (k + 1)
    hi_suffix = [0] * (k + 1)
    for j in range(k - 1, -1, -1):
        lo_suffix[j] = lo_suffix[j + 1] + ranges[j][0]
        hi_suffix[j] = hi_suffix[j + 1] + ranges[j][1]

    def rec_sum(j: int, acc: tuple[int, ...], remaining: int) -> Iterator[tuple[int, ...]]:
        if j == k:
            if remaining == 0:
                yield acc
            return
        lo, hi = ranges[j]
        lo = max(lo, remaining - hi_suffix[j + 1])
        hi = min(hi, remaining - lo_suffix[j + 1])
        for v in range(lo, hi + 1):
            yield from rec_sum(j + 1, acc + (v,), remaining - v)

    yield from rec_sum(0, (), target)


def _triangular_ranges(
    upper: tuple[int, ...], level: int, equalities: Optional[Mapping[int, set[int]]]
) -> list[tuple[int, int]]:
    """Entry ranges for the row of length `level` below `upper`."""
    ranges = []
    forced = equalities.get(level) if equalities else None
    for j in range(level):
        lo, hi = upper[j + 1], upper[j]
        if forced and (j + 1) in forced:
            lo = hi
        ranges.append((lo, hi))
    return ranges


def _skew_ranges(
    upper: tuple[int, ...], bottom: tuple[int, ...], level: int
) -> list[tuple[int, int]]:
    """Entry ranges for skew row `level` (1-based) below `upper`; row 1 is
    additionally pinched by the fixed bottom row."""
    m = len(upper)
    ranges = []
    for j in range(m):
        lo = upper[j + 1] if j + 1 < m else 0
        hi = upper[j]
        if level == 1:
            lo = max(lo, bottom[j])
            if j >= 1:
                hi = min(hi, bottom[j - 1])
        ranges.append((lo, hi))
    return ranges


def _row_targets(spec: PolytopeSpec) -> Optional[dict[int, int]]:
    """Prescribed row sums per level implied by a weight filter, or None."""
    if spec.weight is None:
        return None
    if spec.kind == "triangular":
        base = 0
    else:
        base = sum(spec.bottom)
    targets = {}
    acc = base
    for i, w in enumerate(spec.weight, start=1):
        acc += w
        targets[i] = acc
    return targets


def enumerate_points(
    spec: PolytopeSpec,
    k: int = 1,
    equalities: Cells | None = None,
) -> Iterator[Pattern]:
    """Yield each integral pattern of the k-th dilate exactly once, in
    canonical order.  `equalities` restricts to a face of a triangular
    polytope (cells as in the kogan module)."""
    dspec = spec.dilate(k)
    if equalities and spec.kind != "triangular":
        raise ValueError("equalities only apply to triangular polytopes")
    eq_by_level: Optional[dict[int, set[int]]] = None
    if equalities:
        eq_by_level = {}
        for (i, j) in equalities:
            eq_by_level.setdefault(i, set()).add(j)

    targets = _row_targets(dspec)
    if targets is not None and targets[dspec.n] != sum(dspec.top):
        return  # weight incompatible with the top row: empty

    if dspec.kind == "triangular":
        n = dspec.n
        rows: list[tuple[int, ...]] = [()] * n
        rows[n - 1] = dspec.top

        def rec(level: int) -> Iterator[GTPattern]:
            if level == 0:
                yield GTPattern(tuple(rows))
                return
            ranges = _triangular_ranges(rows[level], level, eq_by_level)
            target = targets.get(level) if targets else None
            for row in _iter_rows(ranges, target):
                rows[level - 1] = row
                yield from rec(level - 1)

        yield from rec(n - 1)
    else:
        n = dspec.n
        rows = [()] * (n + 1)
        rows[n] = dspec.top
        rows[0] = dspec.bottom

        def rec_skew(level: int) -> Iterator[SkewGTPattern]:
            if level == 0:
                yield SkewGTPattern(tuple(rows))
                return
            ranges = _skew_ranges(rows[level + 1], dspec.bottom, level)
            target = targets.get(level) if targets else None
            for row in _iter_rows(ranges, target):
                rows[level] = row
                yield from rec_skew(level - 1)

        if n == 1:
            # single free-less case: top must interlace directly with bottom
            ranges = _skew_ranges(dspec.top, dspec.bottom, 1)
            ok = all(lo <= b <= hi for (lo, hi), b in zip(ranges, dspec.bottom))
            if ok and (targets is None or targets[1] == sum(dspec.top)):
                yield SkewGTPattern((dspec.bottom, dspec.top))
            return
        yield from rec_skew(n - 1)


def count_points(
    spec: PolytopeSpec,
    k: int = 1,
    equalities: Cells | None = None,
) -> int:
    """|k.P intersect Z^d|, by dynamic programming over consecutive rows."""
    dspec = spec.dilate(k)
    if equalities and spec.kind != "triangular":
        raise ValueError("equalities only apply to triangular polytopes")
    eq_by_level: Optional[dict[int, set[int]]] = None
    if equalities:
        eq_by_level = {}
        for (i, j) in equalities:
            eq_by_level.setdefault(i, set()).add(j)

    targets = _row_targets(dspec)
    if targets is not None and targets[dspec.n] != sum(dspec.top):
        return 0

    memo: dict[tuple[int, tuple[int, ...]], int] = {}

    if dspec.kind == "triangular":
        def count_below(level: int, upper: tuple[int, ...]) -> int:
            # completions of rows `level`..1 given row level+1 = upper
            if level == 0:
                return 1
            key = (level, upper)
            hit = memo.get(key)
            if hit is not None:
                return hit
            ranges = _triangular_ranges(upper, level, eq_by_level)
            target = targets.get(level) if targets else None
            total = 0
            for row in _iter_rows(ranges, target):
                total += count_below(level - 1, row)
            memo[key] = total
            return total

        return count_below(dspec.n - 1, dspec.top)

    def count_below_skew(level: int, upper: tuple[int, ...]) -> int:
        if level == 0:
            return 1
        key = (level, upper)
        hit = memo.get(key)
        if hit is not None:
            return hit
        ranges = _skew_ranges(upper, dspec.bottom, level)
        target = targets.get(level) if targets else None
        total = 0
        for row in _iter_rows(ranges, target):
            total += count_below_skew(level - 1, row)
        memo[key] = total
        return total

    if dspec.n == 1:
        ranges = _skew_ranges(dspec.top, dspec.bottom, 1)
        ok = all(lo <= b <= hi for (lo, hi), b in zip(ranges, dspec.bottom))
        if not ok:
            return 0
        if targets is not None and targets[1] != sum(dspec.top):
            return 0
        return 1
    return count_below_skew(dspec.n - 1, dspec.top)
