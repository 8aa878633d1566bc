"""Hecke operators on the Iwahori-fixed vectors of a tamely ramified principal series.

Matrices are indexed by W in the order of coxeter.enumerate_w; entry [v][w]
is the coefficient of f_v in T(f_w).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Callable

from config.constants import GeneratorKind
from algebra.character import CharacterData
from algebra.coxeter import Permutation, enumerate_w, simple_reflection, ubar
from algebra.errors import PreconditionError, SizeMismatchError
from algebra.matrices import Matrix, zero_matrix
from algebra.nabla import NablaFunction
from algebra.scalars import Scalar


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Generator:
    """A Hecke operator generator; index for T_s, digit logs for T_t."""
    kind: str
    index: int | None = None
    digits: tuple[int, ...] | None = None

    def label(self) -> str:
        if self.kind == GeneratorKind.S:
            return f"T_s({self.index})"
        if self.kind == GeneratorKind.TORUS:
            return f"T_t({','.join(str(e) for e in self.digits)})"
        return self.kind

    @classmethod
    def s(cls, i: int) -> "Generator":
        return cls(GeneratorKind.S, index=i)

    @classmethod
    def u(cls) -> "Generator":
        return cls(GeneratorKind.U)

    @classmethod
    def u_inv(cls) -> "Generator":
        return cls(GeneratorKind.U_INV)

    @classmethod
    def torus(cls, digits) -> "Generator":
        return cls(GeneratorKind.TORUS, digits=tuple(digits))


def torus_basis(d: int) -> list[Generator]:
    """T_t for t with digit g in one slot and 1 elsewhere."""
    return [Generator.torus(tuple(1 if k == slot else 0 for k in range(d + 1))) for slot in range(d + 1)]


def generating_set(d: int) -> list[Generator]:
    """T_t basis, T_{u^{-1}}, T_u and T_{s_d}; these generate the algebra."""
    return torus_basis(d) + [Generator.u_inv(), Generator.u(), Generator.s(d)]


def validate_generator(d: int, generator: Generator) -> None:
    if generator.kind not in GeneratorKind.ALL:
        raise PreconditionError(f"unknown generator kind {generator.kind!r}")
    if generator.kind == GeneratorKind.S and not (generator.index and 1 <= generator.index <= d):
        raise PreconditionError(f"T_s index must lie in 1..{d}, got {generator.index}")
    if generator.kind == GeneratorKind.TORUS and (generator.digits is None or len(generator.digits) != d + 1):
        raise PreconditionError(f"T_t needs {d + 1} digits")


@dataclass
class HeckeModule:
    """Generator matrices in the basis {f_w} or {g_w}, built on demand and cached."""
    d: int
    basis: list[Permutation]
    zero: Any
    one: Any
    builder: Callable[[Generator], Matrix]
    basis_name: str = "f"
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def size(self) -> int:
        return len(self.basis)

    def position(self, w: Permutation) -> int:
        return self._positions()[w]

    def _positions(self) -> dict[Permutation, int]:
        if "_positions" not in self._cache:
            self._cache["_positions"] = {w: k for k, w in enumerate(self.basis)}
        return self._cache["_positions"]

    def matrix(self, generator: Generator) -> Matrix:
        validate_generator(self.d, generator)
        if generator not in self._cache:
            self._cache[generator] = self.builder(generator)
        return self._cache[generator]

    def s_matrix(self, i: int) -> Matrix:
        return self.matrix(Generator.s(i))

    def u_matrix(self) -> Matrix:
        return self.matrix(Generator.u())

    def u_inv_matrix(self) -> Matrix:
        return self.matrix(Generator.u_inv())

    def torus_matrix(self, digits) -> Matrix:
        return self.matrix(Generator.torus(digits))


@dataclass(frozen=True)
class StabilityCheck:
    """Outcome of is_lattice_stable."""
    ok: bool
    witness: dict = field(default_factory=dict)


def operator_matrix(c: CharacterData, generator: Generator) -> Matrix:
    """The matrix of a generator in the basis {f_w}."""
    d, ctx = c.d, c.ctx
    validate_generator(d, generator)
    basis = enumerate_w(d)
    position = {w: k for k, w in enumerate(basis)}
    matrix = zero_matrix(len(basis), Scalar.zero(ctx))
    kind = generator.kind

    if kind == GeneratorKind.S:
        i = generator.index
        s = simple_reflection(d, i)
        q = Scalar.from_int(ctx, c.q)
        for w in basis:
            ws = w * s
            col = position[w]
            if w.has_ascent(i):
                matrix[position[ws]][col] = Scalar.one(ctx)
                continue
            matrix[position[ws]][col] = q
            if not c.is_regular(w, i):
                kappa = Scalar.zeta(ctx, c.kappa_exponent(ws, i))
                matrix[col][col] = kappa.scale_int(c.q - 1)
    elif kind == GeneratorKind.U_INV:
        step = ubar(d, -1)
        for w in basis:
            matrix[position[w * step]][position[w]] = c.theta_t(w)
    elif kind == GeneratorKind.U:
        step = ubar(d, 1)
        for w in basis:
            matrix[position[w * step]][position[w]] = c.theta_t_inverse(w * step)
    else:
        for w in basis:
            matrix[position[w]][position[w]] = Scalar.zeta(ctx, c.torus_exponent(w, generator.digits))
    return matrix


def build_hecke_module(c: CharacterData) -> HeckeModule:
    ctx = c.ctx
    return HeckeModule(
        d=c.d,
        basis=enumerate_w(c.d),
        zero=Scalar.zero(ctx),
        one=Scalar.one(ctx),
        builder=lambda generator: operator_matrix(c, generator),
    )


def rebase_to_lattice(module: HeckeModule, nabla: NablaFunction) -> HeckeModule:
    """Rewrite the matrices in the basis g_w = pi^{nabla(w)} f_w."""
    if nabla.d != module.d:
        raise SizeMismatchError(f"nabla on rank {nabla.d} against module on rank {module.d}")
    ctx = module.zero.ctx
    exponents = [nabla(w) for w in module.basis]

    def build(generator: Generator) -> Matrix:
        source = module.matrix(generator)
        size = len(source)
        rebased = zero_matrix(size, module.zero)
        for v in range(size):
            for w in range(size):
                entry = source[v][w]
                if not entry.is_zero():
                    rebased[v][w] = entry * Scalar.pi(ctx, exponents[w] - exponents[v])
        return rebased

    return HeckeModule(module.d, module.basis, module.zero, module.one, build, basis_name="g")


def is_lattice_stable(c: CharacterData, nabla: NablaFunction) -> StabilityCheck:
    """True iff every rebased generator matrix is integral."""
    lattice = rebase_to_lattice(build_hecke_module(c), nabla)
    for generator in generating_set(c.d):
        matrix = lattice.matrix(generator)
        for v, row in enumerate(matrix):
            for w, entry in enumerate(row):
                if not entry.is_integral():
                    return StabilityCheck(False, {
                        "generator": generator.label(),
                        "row": str(lattice.basis[v]),
                        "col": str(lattice.basis[w]),
                        "valuation": entry.valuation_floor(),
                    })
    return StabilityCheck(True)
