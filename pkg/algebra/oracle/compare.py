"""Brute-force Hecke operators as coset sums, compared with the closed-form matrices."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from config import settings
from config.constants import GeneratorKind
from algebra.character import CharacterData
from algebra.coxeter import Permutation, enumerate_w
from algebra.errors import ResourceBoundError
from algebra.oracle.decompose import evaluate_f
from algebra.oracle.group import (
    GroupElement,
    constant,
    nu,
    perm_matrix,
    s_element,
    torus_element,
    u_element,
    u_inverse_element,
)
from algebra.oracle.laurent import LaurentScalar
from algebra.psmod import Generator, generating_set, operator_matrix
from algebra.scalars import Scalar


logger = logging.getLogger(__name__)


@dataclass
class CompareReport:
    matches: int = 0
    mismatches: list[dict] = field(default_factory=list)
    precision: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches


def coset_representatives(c: CharacterData, generator: Generator) -> list[GroupElement]:
    """g_j with T_g f = sum_j f(. g_j)."""
    fq, d = c.ctx.fq, c.d
    kind = generator.kind
    if kind == GeneratorKind.S:
        s = s_element(fq, d, generator.index)
        lifts = [LaurentScalar.zero(fq)] + [constant(fq, a) for a in fq.units()]
        return [nu(fq, d, generator.index, a) * s for a in lifts]
    if kind == GeneratorKind.U_INV:
        return [u_element(fq, d)]
    if kind == GeneratorKind.U:
        return [u_inverse_element(fq, d)]
    return [torus_element(fq, d, [-e for e in generator.digits])]


def _check_budget(c: CharacterData) -> None:
    if c.d > settings.ORACLE_MAX_RANK or c.q > settings.ORACLE_MAX_FIELD_SIZE:
        raise ResourceBoundError(
            f"oracle limited to d <= {settings.ORACLE_MAX_RANK}, q <= {settings.ORACLE_MAX_FIELD_SIZE}"
        )


def hecke_bruteforce(c: CharacterData, generator: Generator, w: Permutation,
                     precision: int | None = None) -> dict[Permutation, Scalar]:
    """(T f_w)(v) for every v in W."""
    _check_budget(c)
    fq = c.ctx.fq
    representatives = coset_representatives(c, generator)
    column: dict[Permutation, Scalar] = {}
    for v in enumerate_w(c.d):
        start = perm_matrix(fq, v)
        total = Scalar.zero(c.ctx)
        for g in representatives:
            total = total + evaluate_f(c, w, start * g, precision)
        column[v] = total
    return column


def oracle_generators(d: int) -> list[Generator]:
    """The generating set plus every T_{s_i}."""
    generators = generating_set(d)
    return generators + [Generator.s(i) for i in range(1, d)]


def compare_closed_form(c: CharacterData, precision: int | None = None) -> CompareReport:
    """Column by column equality of brute force and operator_matrix; matches counts agreeing columns."""
    _check_budget(c)
    precision = precision or settings.DEFAULT_PRECISION
    report = CompareReport(precision=precision)
    basis = enumerate_w(c.d)
    for generator in oracle_generators(c.d):
        closed = operator_matrix(c, generator)
        for col, w in enumerate(basis):
            brute = hecke_bruteforce(c, generator, w, precision)
            differences = [
                {
                    "generator": generator.label(),
                    "w": str(w),
                    "v": str(v),
                    "expected": repr(closed[row][col]),
                    "got": repr(brute[v]),
                }
                for row, v in enumerate(basis)
                if brute[v] != closed[row][col]
            ]
            if differences:
                report.mismatches.extend(differences)
            else:
                report.matches += 1
    if report.mismatches:
        logger.warning("closed form disagrees with brute force in %d entries", len(report.mismatches))
    return report
