"""Exact sparse multivariate polynomials and Demazure operators.

Coefficients are arbitrary-precision rationals throughout; no floating
point enters anywhere.  The divided difference is computed monomial-wise
through the closed geometric-sum form, so no polynomial division is ever
performed and exactness is structural.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from . import lattice
from .combinat import canonical_reduced_word, check_partition, check_permutation, pad
from .gtcore import weight as pattern_weight

Scalar = Union[int, Fraction]


class MultiPoly:
    """Sparse polynomial in z_1..z_n over the rationals.

    Immutable by convention: operations return fresh instances and the term
    map is never mutated after construction.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], Scalar] | None = None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exp, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff == 0:
                    continue
                exp = tuple(exp)
                if len(exp) != nvars or any(e < 0 for e in exp):
                    raise ValueError(f"bad exponent vector {exp!r} for {nvars} variables")
                clean[exp] = coeff
        self.terms = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: Scalar) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: Scalar = 1) -> "MultiPoly":
        exp = tuple(exp)
        return cls(len(exp), {exp: coeff})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "MultiPoly":
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls(nvars, {tuple(exp): 1})

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            new = terms.get(exp, 0) + c
            if new == 0:
                terms.pop(exp, None)
            else:
                terms[exp] = new
        return MultiPoly(self.nvars, terms)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                new = out.get(exp, 0) + c1 * c2
                if new == 0:
                    out.pop(exp, None)
                else:
                    out[exp] = new
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def _check(self, other: "MultiPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Graded lexicographic order, z_1 > ... > z_n, largest first."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, coeff in self.sorted_terms():
            factors = [
                f"z{i + 1}" if e == 1 else f"z{i + 1}^{e}"
                for i, e in enumerate(exp)
                if e
            ]
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            elif coeff == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{coeff}*" + "*".join(factors))
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def to_json(self) -> list[dict]:
        return [
            {"coeff": str(c), "exp": list(e)} for e, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, nvars: int, items: Iterable[dict]) -> "MultiPoly":
        return cls(nvars, {tuple(t["exp"]): Fraction(t["coeff"]) for t in items})


# --- operators ---------------------------------------------------------------

def swap_vars(f: MultiPoly, i: int) -> MultiPoly:
    """Exchange z_i and z_{i+1}."""
    if not 1 <= i <= f.nvars - 1:
        raise ValueError(f"swap index {i} out of range")
    out: dict[tuple[int, ...], Fraction] = {}
    for exp, c in f.terms.items():
        e = list(exp)
        e[i - 1], e[i] = e[i], e[i - 1]
        out[tuple(e)] = c
    return MultiPoly(f.nvars, out)


def _add_strip(
    out: dict[tuple[int, ...], Fraction],
    base: list[int],
    i: int,
    a: int,
    b: int,
    coeff: Fraction,
) -> None:
    # contribute coeff * sum_{t=lo}^{hi} z_i^t z_{i+1}^{a+b-1-t}
    if a == b:
        return
    sign = 1 if a > b else -1
    lo, hi = (b, a - 1) if a > b else (a, b - 1)
    for t in range(lo, hi + 1):
        base[i - 1], base[i] = t, a + b - 1 - t
        exp = tuple(base)
        new = out.get(exp, 0) + sign * coeff
        if new == 0:
            out.pop(exp, None)
        else:
            out[exp] = new


def divided_difference(f: MultiPoly, i: int) -> MultiPoly:
    """(f - s_i f) / (z_i - z_{i+1}), exact and division-free.

    Each monomial m * z_i^a z_{i+1}^b (m free of z_i, z_{i+1}) contributes a
    geometric strip m * sum z_i^t z_{i+1}^{a+b-1-t}: t = b..a-1 when a > b,
    the negated mirror when a < b, nothing when a = b.  The result is
    symmetric in z_i, z_{i+1}.
    """
    if not 1 <= i <= f.nvars - 1:
        raise ValueError(f"operator index {i} out of range")
    out: dict[tuple[int, ...], Fraction] = {}
    for exp, c in f.terms.items():
        base = list(exp)
        _add_strip(out, base, i, exp[i - 1], exp[i], c)
    return MultiPoly(f.nvars, out)


def pi_op(f: MultiPoly, i: int) -> MultiPoly:
    """Demazure operator: divided_difference(z_i * f, i).  Degree-preserving."""
    if not 1 <= i <= f.nvars - 1:
        raise ValueError(f"operator index {i} out of range")
    out: dict[tuple[int, ...], Fraction] = {}
    for exp, c in f.terms.items():
        base = list(exp)
        _add_strip(out, base, i, exp[i - 1] + 1, exp[i], c)
    return MultiPoly(f.nvars, out)


def apply_pi_word(f: MultiPoly, word: Sequence[int]) -> MultiPoly:
    """Compose Demazure operators along a word, rightmost letter first."""
    for letter in reversed(word):
        f = pi_op(f, letter)
    return f


def key_via_operators(lam: Sequence[int], sigma: Sequence[int]) -> MultiPoly:
    """Key polynomial: the word of sigma applied to the monomial z^lambda."""
    sigma = check_permutation(sigma)
    n = len(sigma)
    lam = pad(check_partition(lam), n)
    word = canonical_reduced_word(sigma)
    out = apply_pi_word(MultiPoly.monomial(lam), word)
    if any(c < 0 or c.denominator != 1 for c in out.terms.values()):
        raise AssertionError("key polynomial produced a non-natural coefficient")
    return out


# --- tableau generating polynomials ------------------------------------------

def _weight_sum(points, n: int) -> MultiPoly:
    terms: dict[tuple[int, ...], Fraction] = {}
    for p in points:
        exp = pattern_weight(p)
        terms[exp] = terms.get(exp, 0) + 1
    poly = MultiPoly(n, terms)
    if any(c < 0 or c.denominator != 1 for c in poly.terms.values()):
        raise AssertionError("generating sum produced a non-natural coefficient")
    return poly


def schur(lam: Sequence[int], n: int) -> MultiPoly:
    """Schur polynomial as the weight generating sum over GT(lambda)."""
    spec = lattice.gt_spec(pad(check_partition(lam), n))
    return _weight_sum(lattice.enumerate_points(spec), n)


def skew_schur(lam: Sequence[int], mu: Sequence[int], n: int) -> MultiPoly:
    """Skew Schur polynomial over the parallelogram patterns of GT(lambda/mu)."""
    spec = lattice.skew_spec(lam, mu, n=n)
    return _weight_sum(lattice.enumerate_points(spec), n)


def eval_ones(f: MultiPoly) -> int | Fraction:
    """Substitute z_i = 1 for all i; returns an int whenever the value is integral."""
    total = sum(f.terms.values(), Fraction(0))
    return int(total) if total.denominator == 1 else total


def kostka(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape lam and content mu."""
    n = max(len(lam), len(mu), 1)
    spec = lattice.gt_spec(pad(check_partition(lam), n), weight=pad(tuple(mu), n))
    return lattice.count_points(spec)


def skew_kostka(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    n = len(nu) if nu else len(lam)
    spec = lattice.skew_spec(lam, mu, weight=pad(tuple(nu), n), n=n)
    return lattice.count_points(spec)


# --- exact division (used by the bundled reference expressions) --------------

def divide_by_difference(f: MultiPoly, i: int, j: int) -> MultiPoly:
    """Exact quotient f / (z_i - z_j); raises if the division is not exact."""
    if i == j:
        raise ValueError("need two distinct variables")
    num = dict(f.terms)
    out: dict[tuple[int, ...], Fraction] = {}
    while num:
        exp = max(num, key=lambda e: (e[i - 1], e))
        coeff = num.pop(exp)
        if exp[i - 1] == 0:
            raise ValueError("polynomial is not divisible by the difference")
        q = list(exp)
        q[i - 1] -= 1
        qexp = tuple(q)
        out[qexp] = out.get(qexp, 0) + coeff
        q[j - 1] += 1
        rexp = tuple(q)
        new = num.get(rexp, 0) + coeff
        if new == 0:
            num.pop(rexp, None)
        else:
            num[rexp] = new
    return MultiPoly(f.nvars, out)
