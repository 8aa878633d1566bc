"""Mod-p modules of W-type M(theta, sigma, eps) and the reduction of stable lattices."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping, Sequence

from config.constants import GeneratorKind, Relation
from algebra.character import CharacterData
from algebra.coxeter import Permutation, enumerate_w, simple_reflection, ubar
from algebra.errors import InvariantError, PreconditionError, SizeMismatchError
from algebra.finite_field import FqElement, get_field
from algebra.matrices import Matrix, first_difference, map_entries, zero_matrix
from algebra.nabla import NablaFunction, SigmaFunction, sigma_from_nabla
from algebra.psmod import (
    Generator,
    HeckeModule,
    build_hecke_module,
    generating_set,
    is_lattice_stable,
    rebase_to_lattice,
)
from algebra.relations import RelationReport, check_relations, conjugated_s


logger = logging.getLogger(__name__)


@dataclass
class WTypeModule:
    """Generator matrices over F_q for the T_t basis, T_u, T_{u^{-1}} and T_{s_d}.

    T_{s_i} for i < d is not part of the data; s_matrix returns the
    conjugate (T_{u^{-1}})^{d-i} T_{s_d} (T_u)^{d-i}.
    """
    d: int
    q: int
    theta_exp: tuple[int, ...]
    sigma: SigmaFunction
    eps: dict[Permutation, FqElement]
    operators: HeckeModule

    @property
    def zero(self) -> FqElement:
        return self.operators.zero

    @property
    def one(self) -> FqElement:
        return self.operators.one

    @property
    def size(self) -> int:
        return self.operators.size

    @property
    def basis(self) -> list[Permutation]:
        return self.operators.basis

    def matrix(self, generator: Generator) -> Matrix:
        return self.operators.matrix(generator)

    def s_matrix(self, i: int) -> Matrix:
        if i == self.d:
            return self.operators.s_matrix(i)
        return conjugated_s(self, i)

    def u_matrix(self) -> Matrix:
        return self.operators.u_matrix()

    def u_inv_matrix(self) -> Matrix:
        return self.operators.u_inv_matrix()

    def torus_matrix(self, digits) -> Matrix:
        return self.operators.torus_matrix(digits)


def _theta_power(theta_exp: Sequence[int], q: int, w: Permutation, digits: Sequence[int]) -> int:
    return -sum(theta_exp[w(k)] * e for k, e in enumerate(digits)) % (q - 1)


def make_wtype_module(theta_exp: Sequence[int], sigma: SigmaFunction,
                      eps: Mapping[Permutation, FqElement], q: int) -> WTypeModule:
    """Build the matrices case by case from the defining formulas."""
    d = sigma.d
    if len(theta_exp) != d + 1:
        raise SizeMismatchError(f"theta has {len(theta_exp)} components, expected {d + 1}")
    basis = enumerate_w(d)
    domain = {w for w in basis if w.has_ascent(d)}
    if set(sigma.values) != domain:
        raise PreconditionError("sigma must be defined exactly on W^{s_d}")
    if any(value not in (-1, 0, 1) for value in sigma.values.values()):
        raise PreconditionError("sigma takes values in {-1, 0, 1}")
    if set(eps) != set(basis) or any(e.is_zero() for e in eps.values()):
        raise PreconditionError("eps must be a nonzero value for every w")

    fq = get_field(q)
    position = {w: k for k, w in enumerate(basis)}
    s_d = simple_reflection(d, d)
    theta_exp = tuple(theta_exp)

    def sigma_is(w: Permutation, *values: int) -> bool:
        return w in domain and sigma(w) in values

    def build(generator: Generator) -> Matrix:
        matrix = zero_matrix(len(basis), fq.zero())
        if generator.kind == GeneratorKind.TORUS:
            for w in basis:
                matrix[position[w]][position[w]] = fq.gen_power(_theta_power(theta_exp, q, w, generator.digits))
        elif generator.kind == GeneratorKind.U_INV:
            step = ubar(d, -1)
            for w in basis:
                matrix[position[w * step]][position[w]] = eps[w]
        elif generator.kind == GeneratorKind.U:
            step = ubar(d, 1)
            for w in basis:
                matrix[position[w * step]][position[w]] = eps[w * step].inverse()
        elif generator.index == d:
            for w in basis:
                ws = w * s_d
                col = position[w]
                regular = (theta_exp[w(d - 1)] - theta_exp[w(d)]) % (q - 1) != 0
                kappa = fq.gen_power(theta_exp[w(d)] * (q - 1) // 2) if q % 2 else fq.one()
                if (sigma_is(ws, -1) and regular) or sigma_is(w, 1):
                    matrix[position[ws]][col] = fq.one()
                elif sigma_is(ws, 0, 1) and not regular:
                    matrix[col][col] = -kappa
                elif sigma_is(ws, -1) and not regular:
                    matrix[position[ws]][col] = fq.one()
                    matrix[col][col] = -kappa
        else:
            raise PreconditionError("only T_{s_d} is part of the defining data")
        return matrix

    operators = HeckeModule(d, basis, fq.zero(), fq.one(), build, basis_name="g")
    return WTypeModule(d, q, theta_exp, sigma, dict(eps), operators)


def epsilon_from_character(c: CharacterData) -> dict[Permutation, FqElement]:
    """eps_w = reduction of the unit part zeta^{u_j} of Theta(t_w)."""
    fq = get_field(c.q)
    return {w: fq.gen_power(c.t_unit(w)) for w in enumerate_w(c.d)}


def reduce_lattice(c: CharacterData, nabla: NablaFunction) -> WTypeModule:
    """Reduce L_nabla modulo pi, cross-checked against the direct construction."""
    stability = is_lattice_stable(c, nabla)
    if not stability.ok:
        raise PreconditionError(f"lattice is not stable: {stability.witness}")

    lattice = rebase_to_lattice(build_hecke_module(c), nabla)
    direct = make_wtype_module(c.theta_exp, sigma_from_nabla(nabla, c.r), epsilon_from_character(c), c.q)
    for generator in generating_set(c.d):
        reduced = map_entries(lattice.matrix(generator), lambda entry: entry.reduce_mod_pi())
        spot = first_difference(reduced, direct.matrix(generator))
        if spot is not None:
            row, col = spot
            raise InvariantError(
                f"reduction differs from the direct construction for {generator.label()} "
                f"at ({direct.basis[row]}, {direct.basis[col]})"
            )
    return direct


def validate_action(module: WTypeModule) -> RelationReport:
    """Necessary relations over F_q; T_{s_i} for i < d are the conjugates of T_{s_d}."""
    return check_relations(module, Relation.MOD_P)


def modules_equal(a: WTypeModule, b: WTypeModule) -> dict | None:
    """Compare structure constants on the generating set; returns the first difference or None."""
    if a.d != b.d or a.q != b.q:
        return {"reason": "shape", "d": [a.d, b.d], "q": [a.q, b.q]}
    for generator in generating_set(a.d):
        spot = first_difference(a.matrix(generator), b.matrix(generator))
        if spot is not None:
            return {"generator": generator.label(), "row": str(a.basis[spot[0]]), "col": str(a.basis[spot[1]])}
    return None
