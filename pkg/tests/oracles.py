"""Independent brute-force oracles used to freeze expected test values.

Everything here is deliberately naive and shares no code path with the
library: tableaux are built cell by cell, permutations are composed as
explicit maps, and lattice points are grid-filtered.
"""

from __future__ import annotations

import itertools


def compose_word(word, n):
    """Product of adjacent transpositions, first letter acting first."""

    def s(i):
        def f(x):
            if x == i:
                return i + 1
            if x == i + 1:
                return i
            return x

        return f

    maps = [s(i) for i in word]

    def apply(x):
        for f in maps:
            x = f(x)
        return x

    return tuple(apply(x) for x in range(1, n + 1))


def inversions(perm):
    n = len(perm)
    return sum(
        1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
    )


def ssyt_fillings(shape, n, content=None):
    """All semistandard fillings of a straight shape with entries <= n,
    optionally of fixed content, built cell by cell."""
    shape = tuple(s for s in shape if s > 0)
    cells = [(r, c) for r, row_len in enumerate(shape) for c in range(row_len)]
    results = []
    grid = {}

    def ok(r, c, v):
        if c > 0 and grid[(r, c - 1)] > v:
            return False
        if r > 0 and (r - 1, c) in grid and grid[(r - 1, c)] >= v:
            return False
        return True

    def rec(idx, counts):
        if idx == len(cells):
            if content is None or tuple(counts) == tuple(content):
                results.append(
                    tuple(
                        tuple(grid[(r, c)] for c in range(shape[r]))
                        for r in range(len(shape))
                    )
                )
            return
        r, c = cells[idx]
        for v in range(1, n + 1):
            if content is not None and counts[v - 1] >= content[v - 1]:
                continue
            if not ok(r, c, v):
                continue
            grid[(r, c)] = v
            counts[v - 1] += 1
            rec(idx + 1, counts)
            counts[v - 1] -= 1
            del grid[(r, c)]

    rec(0, [0] * n)
    return results


def grid_filter_patterns(lam):
    """Integral triangular patterns below lam by filtering the full box."""
    n = len(lam)
    hi = lam[0] if lam else 0
    coords = [(i, j) for i in range(1, n) for j in range(1, i + 1)]
    points = []
    for values in itertools.product(range(hi + 1), repeat=len(coords)):
        entry = dict(zip(coords, values))
        for j in range(1, n + 1):
            entry[(n, j)] = lam[j - 1]
        valid = True
        for i in range(1, n):
            for j in range(1, i + 1):
                if entry[(i + 1, j)] < entry[(i, j)]:
                    valid = False
                if entry[(i, j)] < entry[(i + 1, j + 1)]:
                    valid = False
        if valid:
            rows = tuple(
                tuple(entry[(i, j)] for j in range(1, i + 1)) for i in range(1, n + 1)
            )
            points.append(rows)
    return sorted(points)
