"""The residue field F_q with a fixed modulus, generator and discrete-log tables."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache

import sympy
from sympy.abc import x as _x

from config import settings
from algebra.errors import DomainError, ParameterMismatchError, PreconditionError, ResourceBoundError


logger = logging.getLogger(__name__)


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, f) with q = p^f, or raise."""
    if q < 2:
        raise PreconditionError(f"q={q} is not a prime power")
    factors = sympy.factorint(q)
    if len(factors) != 1:
        raise PreconditionError(f"q={q} is not a prime power")
    (p, f), = factors.items()
    return int(p), int(f)


def _decode(value: int, p: int, f: int) -> tuple[int, ...]:
    digits = []
    for _ in range(f):
        value, digit = divmod(value, p)
        digits.append(digit)
    return tuple(digits)


def least_irreducible(p: int, f: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree f over F_p, low-to-high coefficients."""
    for value in range(p ** f):
        lower = _decode(value, p, f)
        coeffs = lower + (1,)
        poly = sympy.Poly(list(reversed(coeffs)), _x, modulus=p)
        if poly.is_irreducible:
            return coeffs
    raise PreconditionError(f"no irreducible polynomial of degree {f} over F_{p}")


@dataclass(frozen=True, eq=False)
class FiniteField:
    """F_q = F_p[x]/(modulus) with the least primitive element as generator."""
    p: int
    f: int
    modulus: tuple[int, ...]
    _exp: list = field(default_factory=list, repr=False)
    _log: dict = field(default_factory=dict, repr=False)

    @property
    def q(self) -> int:
        return self.p ** self.f

    def __post_init__(self):
        for value in range(1, self.q):
            candidate = _decode(value, self.p, self.f)
            powers = [self._one()]
            current = candidate
            while current != self._one():
                powers.append(current)
                current = self._raw_mul(current, candidate)
                if len(powers) > self.q:
                    break
            if len(powers) == self.q - 1:
                self._exp.extend(powers)
                self._log.update({power: k for k, power in enumerate(powers)})
                logger.debug("F_%d generator %s", self.q, candidate)
                return
        raise PreconditionError(f"no primitive element found in F_{self.q}")

    def _one(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.f - 1)

    def _raw_mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p, f = self.p, self.f
        product = [0] * (2 * f - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    product[i + j] += ai * bj
        for k in range(len(product) - 1, f - 1, -1):
            c = product[k] % p
            if c:
                for j in range(f + 1):
                    product[k - f + j] -= c * self.modulus[j]
        return tuple(c % p for c in product[:f])

    def element(self, coeffs) -> "FqElement":
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) != self.f:
            raise PreconditionError(f"F_{self.q} elements need {self.f} coefficients, got {len(coeffs)}")
        return FqElement(self, coeffs)

    def from_int(self, n: int) -> "FqElement":
        return FqElement(self, (n % self.p,) + (0,) * (self.f - 1))

    def zero(self) -> "FqElement":
        return self.from_int(0)

    def one(self) -> "FqElement":
        return self.from_int(1)

    def generator(self) -> "FqElement":
        return self.gen_power(1)

    def gen_power(self, k: int) -> "FqElement":
        return FqElement(self, self._exp[k % (self.q - 1)])

    def log(self, a: "FqElement") -> int:
        if a.is_zero():
            raise DomainError("discrete log of zero")
        return self._log[a.coeffs]

    def elements(self) -> list["FqElement"]:
        return [FqElement(self, _decode(v, self.p, self.f)) for v in range(self.q)]

    def units(self) -> list["FqElement"]:
        return [self.gen_power(k) for k in range(self.q - 1)]


@dataclass(frozen=True)
class FqElement:
    """A polynomial over F_p reduced modulo the field's modulus."""
    fq: FiniteField = field(compare=False)
    coeffs: tuple[int, ...]

    def _check(self, other: "FqElement") -> None:
        if self.fq is not other.fq:
            raise ParameterMismatchError("elements of different residue fields")

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "FqElement") -> "FqElement":
        self._check(other)
        p = self.fq.p
        return FqElement(self.fq, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FqElement") -> "FqElement":
        return self + (-other)

    def __neg__(self) -> "FqElement":
        p = self.fq.p
        return FqElement(self.fq, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other: "FqElement") -> "FqElement":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return self.fq.zero()
        return self.fq.gen_power(self.fq.log(self) + self.fq.log(other))

    def inverse(self) -> "FqElement":
        return self.fq.gen_power(-self.fq.log(self))

    def __pow__(self, k: int) -> "FqElement":
        if self.is_zero():
            if k <= 0:
                raise DomainError("non-positive power of zero")
            return self
        return self.fq.gen_power(self.fq.log(self) * k)

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"FqElement({list(self.coeffs)})"


@lru_cache(maxsize=None)
def get_field(q: int) -> FiniteField:
    if q > settings.MAX_FIELD_SIZE:
        raise ResourceBoundError(f"q={q} exceeds MAX_FIELD_SIZE={settings.MAX_FIELD_SIZE}")
    p, f = prime_power(q)
    return FiniteField(p, f, least_irreducible(p, f))
