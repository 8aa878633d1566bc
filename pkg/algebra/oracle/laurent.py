"""Truncated Laurent series over F_q, a model of the local field F with uniformizer X.

An element is a dict {exponent: coefficient} of nonzero coefficients together
with an absolute precision: the series is known modulo X^prec. prec None
means the element is exact (a Laurent polynomial).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from algebra.errors import DomainError, ParameterMismatchError, PrecisionError
from algebra.finite_field import FiniteField, FqElement


@dataclass(frozen=True, eq=False)
class LaurentScalar:
    fq: FiniteField
    terms: dict[int, FqElement]
    prec: int | None = None

    @classmethod
    def make(cls, fq: FiniteField, terms: dict[int, FqElement], prec: int | None = None) -> "LaurentScalar":
        kept = {e: c for e, c in terms.items() if not c.is_zero() and (prec is None or e < prec)}
        return cls(fq, kept, prec)

    @classmethod
    def zero(cls, fq: FiniteField) -> "LaurentScalar":
        return cls(fq, {})

    @classmethod
    def constant(cls, fq: FiniteField, c: FqElement) -> "LaurentScalar":
        return cls.monomial(fq, c, 0)

    @classmethod
    def one(cls, fq: FiniteField) -> "LaurentScalar":
        return cls.constant(fq, fq.one())

    @classmethod
    def monomial(cls, fq: FiniteField, c: FqElement, exponent: int) -> "LaurentScalar":
        return cls.make(fq, {exponent: c})

    @classmethod
    def uniformizer(cls, fq: FiniteField, power: int = 1) -> "LaurentScalar":
        return cls.monomial(fq, fq.one(), power)

    def _check(self, other: "LaurentScalar") -> None:
        if self.fq is not other.fq:
            raise ParameterMismatchError("Laurent series over different residue fields")

    def is_exact(self) -> bool:
        return self.prec is None

    def is_exact_zero(self) -> bool:
        return self.prec is None and not self.terms

    def is_zero_to_precision(self) -> bool:
        return not self.terms

    def valuation(self) -> int | float:
        """Lowest exponent with a nonzero coefficient; inf for exact zero."""
        if self.terms:
            return min(self.terms)
        if self.prec is None:
            return math.inf
        raise PrecisionError(f"valuation undetermined below X^{self.prec}")

    def _valuation_bound(self) -> int | float:
        if self.terms:
            return min(self.terms)
        return math.inf if self.prec is None else self.prec

    def leading(self) -> FqElement:
        return self.terms[self.valuation()]

    def is_monomial(self) -> bool:
        return self.prec is None and len(self.terms) == 1

    # Ring operations

    def __add__(self, other: "LaurentScalar") -> "LaurentScalar":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return LaurentScalar.make(self.fq, terms, _min_prec(self.prec, other.prec))

    def __neg__(self) -> "LaurentScalar":
        return LaurentScalar(self.fq, {e: -c for e, c in self.terms.items()}, self.prec)

    def __sub__(self, other: "LaurentScalar") -> "LaurentScalar":
        return self + (-other)

    def __mul__(self, other: "LaurentScalar") -> "LaurentScalar":
        self._check(other)
        if self.is_exact_zero() or other.is_exact_zero():
            return LaurentScalar.zero(self.fq)
        prec = None
        if self.prec is not None:
            prec = self.prec + other._valuation_bound()
        if other.prec is not None:
            prec = _min_prec(prec, other.prec + self._valuation_bound())
        terms: dict[int, FqElement] = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                e = a + b
                if prec is not None and e >= prec:
                    continue
                terms[e] = terms[e] + x * y if e in terms else x * y
        return LaurentScalar.make(self.fq, terms, prec)

    def inverse(self, relative_precision: int) -> "LaurentScalar":
        """1/self, exact for monomials and known to relative_precision digits otherwise."""
        if self.is_exact_zero():
            raise DomainError("division by zero")
        v = self.valuation()
        lead_inv = self.leading().inverse()
        if self.is_monomial():
            return LaurentScalar.monomial(self.fq, lead_inv, -v)
        known = relative_precision if self.prec is None else min(relative_precision, self.prec - v)
        # self = lead X^v (1 + h)
        h = {k - v: c * lead_inv for k, c in self.terms.items() if k != v}
        series = [self.fq.one()]
        for n in range(1, known):
            total = self.fq.zero()
            for k in range(1, n + 1):
                if k in h:
                    total = total + h[k] * series[n - k]
            series.append(-total)
        terms = {n - v: c * lead_inv for n, c in enumerate(series)}
        return LaurentScalar.make(self.fq, terms, known - v)

    def agrees_with(self, other: "LaurentScalar") -> bool:
        """Equality modulo the joint precision."""
        return (self - other).is_zero_to_precision()

    def __repr__(self) -> str:
        body = " + ".join(f"{list(c.coeffs)}X^{e}" for e, c in sorted(self.terms.items())) or "0"
        return body if self.prec is None else f"{body} + O(X^{self.prec})"


def _min_prec(a: int | None, b: int | float | None) -> int | None:
    if a is None:
        return None if b is None or b == math.inf else int(b)
    if b is None or b == math.inf:
        return a
    return int(min(a, b))
