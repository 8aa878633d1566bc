"""Exact arithmetic in Z[1/q][zeta][pi] with pi^r = q and zeta a primitive (q-1)-th root of unity.

An element is stored in canonical form sum_{i<r} a_i pi^i where each a_i
is a CycInt q^{-e} * sum_j c_j zeta^j reduced modulo the cyclotomic
polynomial Phi_{q-1}.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache

import sympy
from sympy.abc import x as _x

from algebra.errors import DomainError, ParameterMismatchError, PreconditionError
from algebra.finite_field import FiniteField, FqElement, get_field


logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def cyclotomic_modulus(n: int) -> tuple[int, ...]:
    """Phi_n by exact division of x^n - 1 by Phi_e for the proper divisors e of n; low-to-high."""
    poly = sympy.Poly(_x ** n - 1, _x)
    for e in sympy.divisors(n)[:-1]:
        factor = sympy.Poly(list(reversed(cyclotomic_modulus(e))), _x)
        poly, remainder = poly.div(factor)
        if not remainder.is_zero:
            raise PreconditionError(f"Phi_{e} does not divide x^{n} - 1")
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@dataclass(frozen=True, eq=False)
class ScalarContext:
    """Read-only parameters (p, f, r) shared by all scalars of one computation."""
    p: int
    f: int
    r: int
    cyclotomic: tuple[int, ...]
    fq: FiniteField = field(repr=False)

    @property
    def q(self) -> int:
        return self.p ** self.f

    @property
    def phi(self) -> int:
        return len(self.cyclotomic) - 1

    def key(self) -> tuple[int, int, int]:
        return self.p, self.f, self.r

    def __eq__(self, other) -> bool:
        return isinstance(other, ScalarContext) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def reduce_poly(self, coeffs: list[int]) -> tuple[int, ...]:
        out = list(coeffs) + [0] * max(0, self.phi - len(coeffs))
        phi, modulus = self.phi, self.cyclotomic
        for k in range(len(out) - 1, phi - 1, -1):
            c = out[k]
            if c:
                for j in range(phi + 1):
                    out[k - phi + j] -= c * modulus[j]
        return tuple(out[:phi])

    @lru_cache(maxsize=None)
    def zeta_power(self, j: int) -> tuple[int, ...]:
        exponent = j % (self.q - 1)
        return self.reduce_poly([0] * exponent + [1])


@lru_cache(maxsize=None)
def get_context(q: int, r: int) -> ScalarContext:
    if r < 1:
        raise PreconditionError(f"amplitude must be positive, got {r}")
    fq = get_field(q)
    return ScalarContext(fq.p, fq.f, r, cyclotomic_modulus(q - 1), fq)


def _q_content(coeffs: tuple[int, ...], q: int) -> int:
    content = math.gcd(*coeffs)
    k = 0
    while content and content % q == 0:
        content //= q
        k += 1
    return k


@dataclass(frozen=True)
class CycInt:
    """q^{-q_exp} * sum_j coeffs[j] zeta^j, normalized so q_exp is minimal and >= 0."""
    ctx: ScalarContext = field(compare=False, repr=False)
    coeffs: tuple[int, ...]
    q_exp: int = 0

    @classmethod
    def make(cls, ctx: ScalarContext, coeffs, q_exp: int = 0) -> "CycInt":
        coeffs = tuple(coeffs)
        q = ctx.q
        if not any(coeffs):
            return cls(ctx, (0,) * ctx.phi, 0)
        if q_exp < 0:
            coeffs = tuple(c * q ** -q_exp for c in coeffs)
            q_exp = 0
        while q_exp > 0 and all(c % q == 0 for c in coeffs):
            coeffs = tuple(c // q for c in coeffs)
            q_exp -= 1
        return cls(ctx, coeffs, q_exp)

    @classmethod
    def zeta(cls, ctx: ScalarContext, j: int) -> "CycInt":
        return cls.make(ctx, ctx.zeta_power(j))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def scale_q(self, k: int) -> "CycInt":
        return CycInt.make(self.ctx, self.coeffs, self.q_exp - k)

    def __add__(self, other: "CycInt") -> "CycInt":
        q = self.ctx.q
        e = max(self.q_exp, other.q_exp)
        left = (c * q ** (e - self.q_exp) for c in self.coeffs)
        right = (c * q ** (e - other.q_exp) for c in other.coeffs)
        return CycInt.make(self.ctx, (a + b for a, b in zip(left, right)), e)

    def __neg__(self) -> "CycInt":
        return CycInt(self.ctx, tuple(-c for c in self.coeffs), self.q_exp)

    def __mul__(self, other: "CycInt") -> "CycInt":
        if self.is_zero() or other.is_zero():
            return CycInt.make(self.ctx, ())
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        return CycInt.make(self.ctx, self.ctx.reduce_poly(product), self.q_exp + other.q_exp)

    def q_valuation(self) -> int:
        """q-adic content exponent minus the denominator exponent."""
        return _q_content(self.coeffs, self.ctx.q) - self.q_exp


@dataclass(frozen=True, eq=False)
class Scalar:
    """sum_{i<r} parts[i] * pi^i."""
    ctx: ScalarContext
    parts: tuple[CycInt, ...]

    # Construction

    @classmethod
    def zero(cls, ctx: ScalarContext) -> "Scalar":
        empty = CycInt.make(ctx, ())
        return cls(ctx, (empty,) * ctx.r)

    @classmethod
    def from_int(cls, ctx: ScalarContext, n: int) -> "Scalar":
        return cls.monomial(ctx, 0, 0).scale_int(n)

    @classmethod
    def one(cls, ctx: ScalarContext) -> "Scalar":
        return cls.monomial(ctx, 0, 0)

    @classmethod
    def monomial(cls, ctx: ScalarContext, unit_exp: int, pi_exp: int) -> "Scalar":
        """zeta^unit_exp * pi^pi_exp for any integer pi_exp."""
        q_power, degree = divmod(pi_exp, ctx.r)
        parts = [CycInt.make(ctx, ())] * ctx.r
        parts[degree] = CycInt.zeta(ctx, unit_exp).scale_q(q_power)
        return cls(ctx, tuple(parts))

    @classmethod
    def pi(cls, ctx: ScalarContext, power: int = 1) -> "Scalar":
        return cls.monomial(ctx, 0, power)

    @classmethod
    def zeta(cls, ctx: ScalarContext, power: int = 1) -> "Scalar":
        return cls.monomial(ctx, power, 0)

    # Ring operations

    def _check(self, other: "Scalar") -> None:
        if self.ctx != other.ctx:
            raise ParameterMismatchError(f"scalars over {self.ctx.key()} and {other.ctx.key()}")

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.ctx, tuple(a + b for a, b in zip(self.parts, other.parts)))

    def __neg__(self) -> "Scalar":
        return Scalar(self.ctx, tuple(-a for a in self.parts))

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        r = self.ctx.r
        parts = [CycInt.make(self.ctx, ())] * r
        for i, a in enumerate(self.parts):
            if a.is_zero():
                continue
            for j, b in enumerate(other.parts):
                if b.is_zero():
                    continue
                term = a * b
                degree = i + j
                if degree >= r:
                    degree -= r
                    term = term.scale_q(1)
                parts[degree] = parts[degree] + term
        return Scalar(self.ctx, tuple(parts))

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            raise DomainError("negative powers are only defined for monomials; use Scalar.monomial")
        result = Scalar.one(self.ctx)
        for _ in range(k):
            result = result * self
        return result

    def scale_int(self, n: int) -> "Scalar":
        return Scalar(self.ctx, tuple(CycInt.make(self.ctx, (c * n for c in a.coeffs), a.q_exp) for a in self.parts))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.ctx == other.ctx and self.parts == other.parts

    def __hash__(self) -> int:
        return hash((self.ctx.key(), self.parts))

    def __repr__(self) -> str:
        terms = [f"({list(a.coeffs)}/q^{a.q_exp})pi^{i}" for i, a in enumerate(self.parts) if not a.is_zero()]
        return "Scalar(" + (" + ".join(terms) or "0") + ")"

    # Valuation and reduction

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.parts)

    def is_integral(self) -> bool:
        return all(a.q_exp == 0 for a in self.parts)

    def valuation_floor(self) -> float:
        if self.is_zero():
            return math.inf
        r = self.ctx.r
        return min(i + r * a.q_valuation() for i, a in enumerate(self.parts) if not a.is_zero())

    def reduce_mod_pi(self) -> FqElement:
        if not self.is_integral():
            raise PreconditionError(f"cannot reduce non-integral {self!r}")
        fq = self.ctx.fq
        result = fq.zero()
        for j, c in enumerate(self.parts[0].coeffs):
            if c:
                result = result + fq.from_int(c) * fq.gen_power(j)
        return result


def is_integral(a: Scalar) -> bool:
    return a.is_integral()


def valuation_floor(a: Scalar) -> float:
    return a.valuation_floor()


def reduce_mod_pi(a: Scalar) -> FqElement:
    return a.reduce_mod_pi()


def teichmuller(ctx: ScalarContext, x: FqElement) -> Scalar:
    """The root of unity zeta^j reducing to x."""
    if x.is_zero():
        raise DomainError("zero has no Teichmuller lift")
    return Scalar.zeta(ctx, ctx.fq.log(x))


def character_sum(ctx: ScalarContext, j: int) -> Scalar:
    """sum over a in F_q^x of zeta^{j dlog a}."""
    total = Scalar.zero(ctx)
    for k in range(ctx.q - 1):
        total = total + Scalar.zeta(ctx, j * k)
    return total
