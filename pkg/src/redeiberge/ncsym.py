"""Exact arithmetic on symmetric functions in noncommuting variables.

Elements are finite rational linear combinations of the monomial (M),
power-sum (P) or elementary (E) basis, indexed by set partitions of one
fixed degree.  Rationals appear because converting between P and E divides
by a Mobius value; final digraph invariants are nevertheless integral,
which callers assert rather than assume.

Basis change formulas (each validated against the word-expansion oracle
in the test suite):

    p_pi = sum of m_sigma over sigma >= pi
    m_pi = sum of mu(pi, sigma) p_sigma over sigma >= pi
    p_pi = (1 / mu(0, pi)) * sum of mu(sigma, pi) e_sigma over sigma <= pi
    e_pi = sum of mu(0, sigma) p_sigma over sigma <= pi

All other routes compose through P.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DegreeMismatchError
from .setpart import (
    IntPartition,
    SetPartition,
    apply_perm,
    coarsenings,
    factorial_weight,
    insert_last,
    lambda_of,
    mobius,
    mobius_from_bottom,
    multiplicity_weight,
    parse_set_partition,
    refinements,
)

NC_BASES = ("M", "P", "E")
C_BASES = ("m", "p", "e")

Word = tuple[int, ...]


def _normalize(degree: int, terms: Mapping[SetPartition, object]) -> dict[SetPartition, Fraction]:
    out: dict[SetPartition, Fraction] = {}
    for key, coeff in terms.items():
        if key.n != degree:
            raise DegreeMismatchError(f"key {key} has ground size {key.n}, element degree {degree}")
        c = Fraction(coeff)
        if c:
            out[key] = c
    return out


class NCSymElement:
    """A homogeneous element, stored as a mapping basis-key -> coefficient."""

    __slots__ = ("degree", "basis", "terms")

    def __init__(self, degree: int, basis: str, terms: Mapping[SetPartition, object]):
        if basis not in NC_BASES:
            raise ValueError(f"basis must be one of {NC_BASES}, got {basis!r}")
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "terms", _normalize(degree, terms))

    def __setattr__(self, name, value):
        raise AttributeError("NCSymElement is immutable")

    @classmethod
    def basis_element(cls, basis: str, pi: SetPartition, coeff=1) -> "NCSymElement":
        return cls(pi.n, basis, {pi: coeff})

    @classmethod
    def zero(cls, degree: int, basis: str = "P") -> "NCSymElement":
        return cls(degree, basis, {})

    @classmethod
    def one(cls, basis: str = "P") -> "NCSymElement":
        """The empty product: degree 0, coefficient 1."""
        return cls(0, basis, {SetPartition([]): 1})

    def coefficient(self, pi: SetPartition) -> Fraction:
        return self.terms.get(pi, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def __eq__(self, other):
        return (
            isinstance(other, NCSymElement)
            and self.degree == other.degree
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __repr__(self):
        if not self.terms:
            return f"<0 (degree {self.degree}, {self.basis} basis)>"
        bits = []
        for pi in sorted(self.terms):
            c = self.terms[pi]
            bits.append(f"{c}*{self.basis.lower()}[{pi}]")
        return "<" + " + ".join(bits) + ">"

    def __add__(self, other: "NCSymElement") -> "NCSymElement":
        if not isinstance(other, NCSymElement):
            return NotImplemented
        if self.degree != other.degree:
            raise DegreeMismatchError(f"degrees differ: {self.degree} vs {other.degree}")
        other = other.to_basis(self.basis)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, Fraction(0)) + c
        return NCSymElement(self.degree, self.basis, terms)

    def __neg__(self) -> "NCSymElement":
        return self.scale(-1)

    def __sub__(self, other: "NCSymElement") -> "NCSymElement":
        return self + (-other)

    def scale(self, c) -> "NCSymElement":
        c = Fraction(c)
        return NCSymElement(self.degree, self.basis, {k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c) -> "NCSymElement":
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other) -> "NCSymElement":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, NCSymElement):
            return NotImplemented
        return multiply(self, other)

    def to_basis(self, target: str) -> "NCSymElement":
        """Rewrite in the target basis; conversions route through P."""
        if target not in NC_BASES:
            raise ValueError(f"basis must be one of {NC_BASES}, got {target!r}")
        if target == self.basis:
            return self
        if self.basis == "M":
            return self._from_m().to_basis(target)
        if self.basis == "E":
            return self._from_e().to_basis(target)
        # now in P
        if target == "M":
            return self._p_to_m()
        if target == "E":
            return self._p_to_e()
        return self

    def _from_m(self) -> "NCSymElement":
        # m_pi = sum_{sigma >= pi} mu(pi, sigma) p_sigma
        out: dict[SetPartition, Fraction] = {}
        for pi, c in self.terms.items():
            for sigma in coarsenings(pi):
                out[sigma] = out.get(sigma, Fraction(0)) + c * mobius(pi, sigma)
        return NCSymElement(self.degree, "P", out)

    def _from_e(self) -> "NCSymElement":
        # e_pi = sum_{sigma <= pi} mu(0, sigma) p_sigma
        out: dict[SetPartition, Fraction] = {}
        for pi, c in self.terms.items():
            for sigma in refinements(pi):
                out[sigma] = out.get(sigma, Fraction(0)) + c * mobius_from_bottom(sigma)
        return NCSymElement(self.degree, "P", out)

    def _p_to_m(self) -> "NCSymElement":
        # p_pi = sum_{sigma >= pi} m_sigma
        out: dict[SetPartition, Fraction] = {}
        for pi, c in self.terms.items():
            for sigma in coarsenings(pi):
                out[sigma] = out.get(sigma, Fraction(0)) + c
        return NCSymElement(self.degree, "M", out)

    def _p_to_e(self) -> "NCSymElement":
        # p_pi = (1 / mu(0, pi)) sum_{sigma <= pi} mu(sigma, pi) e_sigma
        out: dict[SetPartition, Fraction] = {}
        for pi, c in self.terms.items():
            scale = Fraction(1, mobius_from_bottom(pi))
            for sigma in refinements(pi):
                out[sigma] = out.get(sigma, Fraction(0)) + c * scale * mobius(sigma, pi)
        return NCSymElement(self.degree, "E", out)

    def induct(self) -> "NCSymElement":
        """Double the last variable: degree rises by one, n+1 joins the block of n."""
        if self.degree < 1:
            raise ValueError("induction undefined in degree 0: no last variable")
        x = self.to_basis("P") if self.basis == "E" else self
        terms = {insert_last(pi): c for pi, c in x.terms.items()}
        return NCSymElement(self.degree + 1, x.basis, terms)

    def act(self, delta: Sequence[int]) -> "NCSymElement":
        """Permute variable positions: basis key pi goes to delta(pi)."""
        if len(delta) != self.degree:
            raise DegreeMismatchError(f"permutation of [{len(delta)}] acting in degree {self.degree}")
        x = self.to_basis("P") if self.basis == "E" else self
        terms = {apply_perm(delta, pi): c for pi, c in x.terms.items()}
        return NCSymElement(self.degree, x.basis, terms)

    def commutative_image(self) -> "CSymElement":
        """Let the variables commute.

        Keys collapse to their block-size partitions; the coefficient picks up
        the multiplicity factor |pi| in the M basis, pi! in the E basis, and
        nothing in the P basis.
        """
        out: dict[IntPartition, Fraction] = {}
        for pi, c in self.terms.items():
            lam = lambda_of(pi)
            if self.basis == "M":
                c = c * multiplicity_weight(pi)
            elif self.basis == "E":
                c = c * factorial_weight(pi)
            out[lam] = out.get(lam, Fraction(0)) + c
        return CSymElement(self.degree, self.basis.lower(), out)

    def expand(self, k: int) -> dict[Word, Fraction]:
        """Exact coefficients of all words over the alphabet {1..k}.

        Ground-truth oracle: a word contributes to m_pi when its equality
        pattern is exactly pi, to p_pi when letters agree on every block, and
        to e_pi when letters are pairwise distinct inside every block.
        Exponential in the degree; meant for testing, not production paths.
        """
        if k < 1:
            raise ValueError("need at least one variable")
        out: dict[Word, Fraction] = {}
        for word in itertools.product(range(1, k + 1), repeat=self.degree):
            total = Fraction(0)
            for pi, c in self.terms.items():
                if _word_matches(word, pi, self.basis):
                    total += c
            if total:
                out[word] = total
        return out

    def to_json_dict(self) -> dict:
        """Serialized form with deterministic term order (canonical key order)."""
        return {
            "degree": self.degree,
            "basis": self.basis,
            "terms": [
                {"blocks": str(pi), "coeff": _coeff_str(self.terms[pi])}
                for pi in sorted(self.terms)
            ],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "NCSymElement":
        terms = {
            parse_set_partition(t["blocks"]): Fraction(t["coeff"])
            for t in data["terms"]
        }
        return cls(data["degree"], data["basis"], terms)


def _coeff_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _word_matches(word: Word, pi: SetPartition, basis: str) -> bool:
    if basis == "M":
        positions: dict[int, list[int]] = {}
        for pos, letter in enumerate(word, start=1):
            positions.setdefault(letter, []).append(pos)
        pattern = tuple(sorted(tuple(v) for v in positions.values()))
        return pattern == pi.blocks
    if basis == "P":
        return all(len({word[x - 1] for x in b}) <= 1 for b in pi.blocks)
    # E: letters pairwise distinct within each block
    return all(len({word[x - 1] for x in b}) == len(b) for b in pi.blocks)


def multiply(x: NCSymElement, y: NCSymElement) -> NCSymElement:
    """Product of power series in noncommuting variables, computed in the P basis.

    p_pi * p_rho = p over the union of pi with rho shifted past deg(x); the
    rule is validated against the word-expansion oracle in the test suite.
    """
    xp = x.to_basis("P")
    yp = y.to_basis("P")
    offset = x.degree
    terms: dict[SetPartition, Fraction] = {}
    for pi, a in xp.terms.items():
        for rho, b in yp.terms.items():
            shifted = tuple(tuple(v + offset for v in block) for block in rho.blocks)
            key = SetPartition(pi.blocks + shifted)
            terms[key] = terms.get(key, Fraction(0)) + a * b
    return NCSymElement(x.degree + y.degree, "P", terms)


class CSymElement:
    """A commutative symmetric function of one degree in a named basis."""

    __slots__ = ("degree", "basis", "terms")

    def __init__(self, degree: int, basis: str, terms: Mapping[IntPartition, object]):
        if basis not in C_BASES:
            raise ValueError(f"basis must be one of {C_BASES}, got {basis!r}")
        out: dict[IntPartition, Fraction] = {}
        for lam, coeff in terms.items():
            if lam.size != degree:
                raise DegreeMismatchError(f"partition {lam} does not have size {degree}")
            c = Fraction(coeff)
            if c:
                out[lam] = c
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "terms", out)

    def __setattr__(self, name, value):
        raise AttributeError("CSymElement is immutable")

    def coefficient(self, lam: IntPartition) -> Fraction:
        return self.terms.get(lam, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, CSymElement)
            and self.degree == other.degree
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __repr__(self):
        if not self.terms:
            return f"<0 (degree {self.degree}, {self.basis} basis)>"
        bits = [f"{self.terms[lam]}*{self.basis}{lam}" for lam in sorted(self.terms, reverse=True)]
        return "<" + " + ".join(bits) + ">"

    def __add__(self, other: "CSymElement") -> "CSymElement":
        if not isinstance(other, CSymElement):
            return NotImplemented
        if self.degree != other.degree or self.basis != other.basis:
            raise DegreeMismatchError("can only add commutative elements of equal degree and basis")
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            terms[lam] = terms.get(lam, Fraction(0)) + c
        return CSymElement(self.degree, self.basis, terms)

    def __sub__(self, other: "CSymElement") -> "CSymElement":
        return self + other.scale(-1)

    def scale(self, c) -> "CSymElement":
        c = Fraction(c)
        return CSymElement(self.degree, self.basis, {k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c) -> "CSymElement":
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other) -> "CSymElement":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, CSymElement):
            return NotImplemented
        if self.basis != "p" or other.basis != "p":
            raise ValueError("commutative products are implemented in the p basis only")
        terms: dict[IntPartition, Fraction] = {}
        for lam, a in self.terms.items():
            for mu, b in other.terms.items():
                key = IntPartition(tuple(lam) + tuple(mu))
                terms[key] = terms.get(key, Fraction(0)) + a * b
        return CSymElement(self.degree + other.degree, "p", terms)

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "basis": self.basis,
            "commutative": True,
            "terms": [
                {"parts": list(lam), "coeff": _coeff_str(self.terms[lam])}
                for lam in sorted(self.terms, reverse=True)
            ],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "CSymElement":
        terms = {IntPartition(t["parts"]): Fraction(t["coeff"]) for t in data["terms"]}
        return cls(data["degree"], data["basis"], terms)
