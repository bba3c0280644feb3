"""Kogan faces of triangular GT polytopes and the key polytopal complex.

A face is a set of cells (i, j) with 1 <= j <= i <= n-1; the cell imposes
the equality x_{i,j} = x_{i+1,j} between consecutive rows (bottom-up
numbering as in gtcore).  Cell (i, j) carries the letter n - i + j - 1, and
the face's word reads the cells bottom row first, left to right.  A face is
reduced when its word is reduced; its type is the word's permutation.

The key complex of (lambda, sigma) is the union of all reduced faces whose
type is w_0 * sigma (w_0 acting first, i.e. the reverse of sigma's one-line
notation).  Its lattice points, summed by weight monomials, give the key
polynomial; this is the combinatorial counterpart of the Demazure operator
construction in polyops and the two are cross-checked in the test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import lattice
from .combinat import (
    check_partition,
    check_permutation,
    is_reduced,
    longest_element,
    multiply,
    pad,
    perm_length,
    word_to_perm,
)
from .gtcore import GTPattern
from .gtcore import weight as pattern_weight
from .polyops import MultiPoly


@dataclass(frozen=True)
class KoganFace:
    n: int
    cells: frozenset[tuple[int, int]]

    def __post_init__(self):
        cells = frozenset((int(i), int(j)) for i, j in self.cells)
        object.__setattr__(self, "cells", cells)
        for i, j in cells:
            if not 1 <= j <= i <= self.n - 1:
                raise ValueError(f"cell {(i, j)} out of range for n={self.n}")

    def sorted_cells(self) -> list[tuple[int, int]]:
        return sorted(self.cells)

    def to_json(self) -> dict:
        return {"n": self.n, "cells": [list(c) for c in self.sorted_cells()]}

    @classmethod
    def from_json(cls, obj: dict) -> "KoganFace":
        return cls(obj["n"], frozenset(tuple(c) for c in obj["cells"]))


def cell_letter(n: int, i: int, j: int) -> int:
    """Simple-transposition letter attached to cell (i, j)."""
    return n - i + j - 1


def all_cells(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n) for j in range(1, i + 1)]


def face_word(face: KoganFace) -> tuple[int, ...]:
    """Letters of the face, bottom row of cells first, left to right."""
    return tuple(cell_letter(face.n, i, j) for i, j in face.sorted_cells())


def face_is_reduced(face: KoganFace) -> bool:
    return is_reduced(face_word(face), face.n)


def face_type(face: KoganFace) -> tuple[int, ...] | None:
    """The word's permutation, or None when the word is not reduced."""
    word = face_word(face)
    perm = word_to_perm(word, face.n)
    if perm_length(perm) != len(word):
        return None
    return perm


def pattern_on_face(p: GTPattern, face: KoganFace) -> bool:
    """Does the pattern satisfy every equality of the face?"""
    if p.n != face.n:
        raise ValueError("pattern and face sizes differ")
    return all(p.rows[i - 1][j - 1] == p.rows[i][j - 1] for i, j in face.cells)


def enumerate_reduced_faces(n: int, tau) -> tuple[KoganFace, ...]:
    """All reduced Kogan faces of the given type, in deterministic order.

    A reduced face of type tau uses exactly length(tau) cells, so the scan
    only visits subsets of that size.
    """
    return _reduced_faces(n, check_permutation(tau))


@lru_cache(maxsize=None)
def _reduced_faces(n: int, tau: tuple[int, ...]) -> tuple[KoganFace, ...]:
    if len(tau) != n:
        raise ValueError("type size must equal n")
    length = perm_length(tau)
    grid = all_cells(n)
    found = []
    for combo in itertools.combinations(grid, length):
        face = KoganFace(n, frozenset(combo))
        if face_type(face) == tau:
            found.append(face)
    return tuple(found)


def key_faces(n: int, sigma) -> tuple[KoganFace, ...]:
    """Reduced faces whose union carries the key polynomial of sigma."""
    sigma = check_permutation(sigma)
    tau = multiply(longest_element(n), sigma)
    return enumerate_reduced_faces(n, tau)


def face_points(lam, face: KoganFace, k: int = 1) -> list[GTPattern]:
    """Lattice points of the k-th dilate of GT(lambda) lying on the face."""
    spec = lattice.gt_spec(pad(check_partition(lam), face.n))
    return list(lattice.enumerate_points(spec, k, equalities=face.cells))


def face_count(lam, face: KoganFace, k: int = 1) -> int:
    spec = lattice.gt_spec(pad(check_partition(lam), face.n))
    return lattice.count_points(spec, k, equalities=face.cells)


def complex_points(lam, sigma, k: int = 1) -> list[GTPattern]:
    """De-duplicated union of the face lattice points, canonical order."""
    sigma = check_permutation(sigma)
    n = len(sigma)
    lam = pad(check_partition(lam), n)
    spec = lattice.gt_spec(lam)
    seen: set[GTPattern] = set()
    for face in key_faces(n, sigma):
        seen.update(lattice.enumerate_points(spec, k, equalities=face.cells))
    return sorted(seen, key=GTPattern.flat)


def _union_terms(faces: tuple[KoganFace, ...]) -> list[tuple[frozenset, int]]:
    """Inclusion-exclusion terms over the faces, collapsed by equal cell
    unions: list of (cells, net sign) with zero-sign terms dropped."""
    signs: dict[frozenset, int] = {}
    for r in range(1, len(faces) + 1):
        sign = 1 if r % 2 else -1
        for combo in itertools.combinations(faces, r):
            cells = frozenset().union(*(f.cells for f in combo))
            signs[cells] = signs.get(cells, 0) + sign
    return [(cells, s) for cells, s in signs.items() if s != 0]


def complex_count(lam, sigma, k: int = 1) -> int:
    """Number of lattice points of the key complex at dilation k.

    Single-face complexes count directly; unions go through inclusion-
    exclusion over intersections (which are again equality sets), so no
    point set is ever materialized.
    """
    sigma = check_permutation(sigma)
    n = len(sigma)
    lam = pad(check_partition(lam), n)
    faces = key_faces(n, sigma)
    spec = lattice.gt_spec(lam)
    if len(faces) == 1:
        return lattice.count_points(spec, k, equalities=faces[0].cells)
    if 2 ** len(faces) > 4096:
        return len(complex_points(lam, sigma, k))
    total = 0
    for cells, sign in _union_terms(faces):
        total += sign * lattice.count_points(spec, k, equalities=cells)
    return total


def key_via_faces(lam, sigma) -> MultiPoly:
    """Key polynomial as the weight generating sum over the key complex."""
    sigma = check_permutation(sigma)
    n = len(sigma)
    terms: dict[tuple[int, ...], int] = {}
    for p in complex_points(lam, sigma, 1):
        exp = pattern_weight(p)
        terms[exp] = terms.get(exp, 0) + 1
    return MultiPoly(n, terms)
