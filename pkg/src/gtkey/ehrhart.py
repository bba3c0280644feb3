"""Exact Ehrhart polynomials: interpolation, closed formulas, and scans.

Counting functions are sampled at k = 0..D for a conservative degree bound
D, interpolated with exact rational arithmetic, then re-checked at two
extra dilations.  Two verification points are used deliberately: a single
extra point cannot distinguish a period-2 quasi-polynomial from an honest
polynomial.  A verification mismatch never raises; it is recorded on the
result and surfaced by scans and the CLI.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterator, Optional, Sequence

from . import kogan, lattice
from .combinat import (
    avoids_pattern,
    check_partition,
    check_permutation,
    longest_element,
    multiply,
    pad,
    partitions_in_box,
    partitions_of,
    perm_length,
)


class UniPoly:
    """Dense univariate polynomial over the rationals, low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Fraction | int] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, value) -> "UniPoly":
        return cls((value,))

    @classmethod
    def linear(cls, constant, slope) -> "UniPoly":
        return cls((constant, slope))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def __call__(self, k) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * k + c
        return acc

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def nonneg(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def coeff_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_coeff_strings(cls, items: Sequence[str]) -> "UniPoly":
        return cls([Fraction(s) for s in items])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            if power == 0:
                term = str(abs(c))
            else:
                mag = abs(c)
                head = "" if mag == 1 else f"{mag}*"
                term = f"{head}k" if power == 1 else f"{head}k^{power}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({self})"


def interpolate(samples: Sequence[tuple[int, int]]) -> UniPoly:
    """Unique polynomial of degree < len(samples) through the samples.

    Newton's divided differences over exact rationals.  Duplicate
    evaluation points are an input error.
    """
    if not samples:
        raise ValueError("need at least one sample")
    xs = [Fraction(k) for k, _ in samples]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate evaluation points")
    ys = [Fraction(v) for _, v in samples]
    # divided difference coefficients
    coef = list(ys)
    for level in range(1, len(xs)):
        for i in range(len(xs) - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    # Horner expansion of the Newton form
    poly = UniPoly.constant(0)
    for i in range(len(xs) - 1, -1, -1):
        poly = poly * UniPoly.linear(-xs[i], 1) + UniPoly.constant(coef[i])
    return poly


def ehrhart_gt_product(lam: Sequence[int], n: int | None = None) -> UniPoly:
    """Closed product formula for the Ehrhart polynomial of GT(lambda)."""
    lam = check_partition(lam)
    if n is not None:
        lam = pad(lam, n)
    n = len(lam)
    poly = UniPoly.constant(1)
    denom = 1
    for i in range(n):
        for j in range(i + 1, n):
            poly = poly * UniPoly.linear(j - i, lam[i] - lam[j])
            denom *= j - i
    return poly * Fraction(1, denom)


def binomial_poly(arg: UniPoly, r: int) -> UniPoly:
    """Falling-factorial binomial coefficient of a linear argument:
    arg*(arg-1)*...*(arg-r+1)/r!, zero when r < 0, one when r = 0."""
    if r < 0:
        return UniPoly()
    out = UniPoly.constant(1)
    for t in range(r):
        out = out * (arg - UniPoly.constant(t))
    return out * Fraction(1, factorial(r))


def poly_det(matrix: list[list[UniPoly]]) -> UniPoly:
    """Determinant by cofactor expansion along the first column."""
    size = len(matrix)
    if size == 0:
        return UniPoly.constant(1)
    if size == 1:
        return matrix[0][0]
    total = UniPoly()
    for r in range(size):
        entry = matrix[r][0]
        if entry.is_zero():
            continue
        minor = [row[1:] for i, row in enumerate(matrix) if i != r]
        term = entry * poly_det(minor)
        total = total + term if r % 2 == 0 else total - term
    return total


# --- counted objects ----------------------------------------------------------

@dataclass(frozen=True)
class CountedObject:
    """A lattice-point counting family with a dilation parameter."""

    desc: dict
    counter: Callable[[int], int]
    bound: int

    def count(self, k: int) -> int:
        return self.counter(k)

    def degree_bound(self) -> int:
        return self.bound

    def key(self) -> str:
        return json.dumps(self.desc, sort_keys=True, separators=(",", ":"))


def gt_object(lam) -> CountedObject:
    lam = check_partition(lam)
    spec = lattice.gt_spec(lam)
    n = len(lam)
    return CountedObject(
        {"family": "gt", "lambda": list(lam)},
        lambda k: lattice.count_points(spec, k),
        n * (n - 1) // 2,
    )


def skew_object(lam, mu=(), n: int | None = None) -> CountedObject:
    spec = lattice.skew_spec(lam, mu, n=n)
    return CountedObject(
        {"family": "skew", "lambda": list(spec.top), "mu": list(spec.bottom), "n": spec.n},
        lambda k: lattice.count_points(spec, k),
        spec.n * spec.m,
    )


def gt_weight_object(lam, mu) -> CountedObject:
    n = max(len(lam), len(mu), 1)
    lam, mu = pad(check_partition(lam), n), pad(tuple(mu), n)
    spec = lattice.gt_spec(lam, weight=mu)
    return CountedObject(
        {"family": "gt_weight", "lambda": list(lam), "mu": list(mu)},
        lambda k: lattice.count_points(spec, k),
        n * (n - 1) // 2 - (n - 1),
    )


def skew_weight_object(lam, mu, nu, n: int | None = None) -> CountedObject:
    if n is None:
        n = len(nu) if nu else len(lam)
    spec = lattice.skew_spec(lam, mu, weight=pad(tuple(nu), n), n=n)
    return CountedObject(
        {
            "family": "skew_weight",
            "lambda": list(spec.top),
            "mu": list(spec.bottom),
            "nu": list(spec.weight),
            "n": n,
        },
        lambda k: lattice.count_points(spec, k),
        spec.n * spec.m - spec.n,
    )


def key_complex_object(lam, sigma) -> CountedObject:
    sigma = check_permutation(sigma)
    n = len(sigma)
    lam = pad(check_partition(lam), n)
    codim = perm_length(multiply(longest_element(n), sigma))
    return CountedObject(
        {"family": "key_complex", "lambda": list(lam), "sigma": list(sigma)},
        lambda k: kogan.complex_count(lam, sigma, k),
        n * (n - 1) // 2 - codim,
    )


def kogan_face_object(lam, face: kogan.KoganFace) -> CountedObject:
    lam = pad(check_partition(lam), face.n)
    n = face.n
    return CountedObject(
        {"family": "kogan_face", "lambda": list(lam), "cells": [list(c) for c in face.sorted_cells()]},
        lambda k: kogan.face_count(lam, face, k),
        n * (n - 1) // 2 - len(face.cells),
    )


# --- interpolation with verification ------------------------------------------

@dataclass
class EhrhartResult:
    object: dict
    degree_bound: int
    samples: list[tuple[int, int]]
    poly: UniPoly
    verify_points: list[tuple[int, int, bool]]
    nonneg: bool
    empty: bool = False

    @property
    def valid(self) -> bool:
        return all(ok for _, _, ok in self.verify_points)

    def to_json(self) -> dict:
        return {
            "object": self.object,
            "degree_bound": self.degree_bound,
            "samples": [[k, str(v)] for k, v in self.samples],
            "poly": self.poly.coeff_strings(),
            "poly_str": str(self.poly),
            "verify_points": [[k, str(v), ok] for k, v, ok in self.verify_points],
            "nonneg": self.nonneg,
            "valid": self.valid,
            "empty": self.empty,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "EhrhartResult":
        return cls(
            object=obj["object"],
            degree_bound=obj["degree_bound"],
            samples=[(int(k), int(v)) for k, v in obj["samples"]],
            poly=UniPoly.from_coeff_strings(obj["poly"]),
            verify_points=[(int(k), int(v), bool(ok)) for k, v, ok in obj["verify_points"]],
            nonneg=obj["nonneg"],
            empty=obj.get("empty", False),
        )


class ResultCache:
    """Append-only JSON-lines store keyed by the canonical object descriptor."""

    def __init__(self, path):
        self.path = path
        self.entries: dict[str, dict] = {}
        try:
            with open(path, "r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    obj = json.loads(line)
                    self.entries[self._key(obj)] = obj
        except FileNotFoundError:
            pass

    @staticmethod
    def _key(obj: dict) -> str:
        return json.dumps(
            {"object": obj["object"], "degree_bound": obj["degree_bound"]},
            sort_keys=True,
            separators=(",", ":"),
        )

    def get(self, desc: dict, degree_bound: int) -> Optional[EhrhartResult]:
        key = self._key({"object": desc, "degree_bound": degree_bound})
        hit = self.entries.get(key)
        return EhrhartResult.from_json(hit) if hit else None

    def put(self, result: EhrhartResult) -> None:
        obj = result.to_json()
        key = self._key(obj)
        if key in self.entries:
            return
        self.entries[key] = obj
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(obj, sort_keys=True) + "\n")


def ehrhart_of(
    obj: CountedObject,
    degree_bound: int | None = None,
    cache: ResultCache | None = None,
) -> EhrhartResult:
    """Sample, interpolate and verify the Ehrhart polynomial of a family.

    The k = 0 sample of a dilated specification is always the single zero
    pattern, so an empty polytope (possible only for weight-filtered
    families) would poison the fit; if every sample and verification count
    at k >= 1 vanishes the honest answer is the zero polynomial and the
    object is marked empty.
    """
    D = obj.degree_bound() if degree_bound is None else degree_bound
    if D < 0:
        raise ValueError("degree bound must be >= 0")
    if cache is not None:
        hit = cache.get(obj.desc, D)
        if hit is not None:
            return hit
    samples = [(k, obj.count(k)) for k in range(D + 1)]
    verify_ks = (D + 1, D + 2)
    verify_counts = [obj.count(k) for k in verify_ks]
    if all(v == 0 for _, v in samples[1:]) and all(v == 0 for v in verify_counts):
        poly = UniPoly()
        result = EhrhartResult(
            object=obj.desc,
            degree_bound=D,
            samples=samples,
            poly=poly,
            verify_points=[(k, v, True) for k, v in zip(verify_ks, verify_counts)],
            nonneg=True,
            empty=True,
        )
    else:
        poly = interpolate(samples)
        verify = [(k, v, poly(k) == v) for k, v in zip(verify_ks, verify_counts)]
        result = EhrhartResult(
            object=obj.desc,
            degree_bound=D,
            samples=samples,
            poly=poly,
            verify_points=verify,
            nonneg=poly.nonneg(),
        )
    if cache is not None:
        cache.put(result)
    return result


# --- determinant formula and flag sequences ------------------------------------

def flag_sequences(n: int) -> list[tuple[int, ...]]:
    """Nondecreasing b_1 <= ... <= b_n <= n with b_i >= i; Catalan many."""
    out = []

    def rec(i: int, prev: int, acc: tuple[int, ...]):
        if i > n:
            out.append(acc)
            return
        for b in range(max(prev, i), n + 1):
            rec(i + 1, b, acc + (b,))

    rec(1, 1, ())
    return out


def check_flag(b: Sequence[int], n: int) -> tuple[int, ...]:
    b = tuple(b)
    if len(b) != n:
        raise ValueError("flag length must equal n")
    if any(b[i] < i + 1 or b[i] > n for i in range(n)):
        raise ValueError(f"flag {b!r} out of range")
    if any(b[i] > b[i + 1] for i in range(n - 1)):
        raise ValueError(f"flag {b!r} must be nondecreasing")
    return b


def determinant_formula(lam: Sequence[int], b: Sequence[int]) -> UniPoly:
    """det( binom(k*lam_i + b_i - i, b_i - j) ) over exact polynomials in k."""
    lam = check_partition(lam)
    n = len(lam)
    b = check_flag(b, n)
    matrix = []
    for i in range(1, n + 1):
        arg = UniPoly.linear(b[i - 1] - i, lam[i - 1])
        matrix.append([binomial_poly(arg, b[i - 1] - j) for j in range(1, n + 1)])
    return poly_det(matrix)


def flag_match(
    lam: Sequence[int], sigma: Sequence[int], cache: ResultCache | None = None
) -> Optional[tuple[int, ...]]:
    """Search the flag sequences for one whose determinant polynomial equals
    the interpolated Ehrhart polynomial of the key complex; None reports a
    failed search (which would contradict the flagged-Schur correspondence
    and deserves attention, so callers should not swallow it)."""
    sigma = check_permutation(sigma)
    if not avoids_pattern(sigma, (2, 3, 1)):
        raise ValueError("flag matching applies to 231-avoiding permutations")
    lam = pad(check_partition(lam), len(sigma))
    target = ehrhart_of(key_complex_object(lam, sigma), cache=cache).poly
    for b in flag_sequences(len(sigma)):
        if determinant_formula(lam, b) == target:
            return b
    return None


# --- power-sum face --------------------------------------------------------

def faulhaber_sum(ell: int, k: int) -> int:
    """Direct big-integer power sum 1^ell + 2^ell + ... + (k+1)^ell."""
    return sum(j**ell for j in range(1, k + 2))


def faulhaber_face(ell: int) -> UniPoly:
    """The degree ell+1 polynomial in k equal to the power sum above.

    This is the Ehrhart polynomial of a chain-of-diamonds face of a GT
    polytope; for ell = 20 some coefficient is negative, the classical
    counterexample to coefficient positivity for arbitrary faces.
    """
    if ell < 0:
        raise ValueError("ell must be >= 0")
    samples = [(k, faulhaber_sum(ell, k)) for k in range(ell + 2)]
    return interpolate(samples)


# --- conjecture scans --------------------------------------------------------

@dataclass
class ScanEntry:
    result: EhrhartResult

    @property
    def ok(self) -> bool:
        return self.result.valid and (self.result.nonneg or self.result.empty)


@dataclass
class ScanReport:
    family: str
    ranges: dict
    entries: list[ScanEntry] = field(default_factory=list)

    @property
    def violations(self) -> list[EhrhartResult]:
        return [e.result for e in self.entries if e.result.valid and not e.result.nonneg]

    @property
    def failures(self) -> list[EhrhartResult]:
        return [e.result for e in self.entries if not e.result.valid]

    @property
    def status(self) -> int:
        return 2 if (self.violations or self.failures) else 0

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "ranges": self.ranges,
            "checked": len(self.entries),
            "violations": [r.to_json() for r in self.violations],
            "verification_failures": [r.to_json() for r in self.failures],
            "results": [e.result.to_json() for e in self.entries],
        }


def scan_objects(family: str, ranges: dict) -> Iterator[CountedObject]:
    """Enumerate the counted objects of a scan family over bounded ranges."""
    if family == "skew_gt":
        shape = tuple(ranges.get("max_shape", (3, 2, 1)))
        n = int(ranges.get("n", len(shape)))
        for lam in partitions_in_box(shape):
            if not any(lam):
                continue
            for mu in partitions_in_box(lam):
                yield skew_object(pad(lam, n), pad(mu, n), n=n)
    elif family == "skew_kostka":
        shape = tuple(ranges.get("max_shape", (3, 2, 1)))
        n = int(ranges.get("n", len(shape)))
        for lam in partitions_in_box(shape):
            if not any(lam):
                continue
            for mu in partitions_in_box(lam):
                size = sum(lam) - sum(mu)
                for nu in compositions(size, n):
                    yield skew_weight_object(pad(lam, n), pad(mu, n), nu, n=n)
    elif family == "stretched_kostka":
        max_size = int(ranges.get("max_size", 6))
        max_rows = int(ranges.get("max_rows", 4))
        for m in range(1, max_size + 1):
            parts = list(partitions_of(m, max_rows))
            for lam in parts:
                for mu in parts:
                    yield gt_weight_object(lam, mu)
    elif family == "key_complex":
        n = int(ranges.get("n", 4))
        max_part = int(ranges.get("max_part", 3))
        for lam in partitions_in_box((max_part,) * n):
            for sigma in itertools.permutations(range(1, n + 1)):
                yield key_complex_object(lam, sigma)
    else:
        raise ValueError(f"unknown scan family {family!r}")


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of total into the given number of parts."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for head in range(total + 1):
        for rest in compositions(total - head, parts - 1):
            yield (head,) + rest


def scan(family: str, ranges: dict | None = None, cache: ResultCache | None = None) -> ScanReport:
    """Run ehrhart_of over a family grid and report negativity/verification."""
    ranges = dict(ranges or {})
    report = ScanReport(family=family, ranges=ranges)
    for obj in scan_objects(family, ranges):
        result = ehrhart_of(obj, cache=cache)
        report.entries.append(ScanEntry(result))
    return report
