"""Relation checks for modules given by generator matrices.

Operators act on column vectors, so composition is the matrix product.
In this convention the conjugation relation reads
T_{s_i} = (T_{u^{-1}})^{d-i} T_{s_d} (T_u)^{d-i} and the torus exchange
reads T_t T_{s_d} = T_{s_d} T_{s_d t s_d}.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Protocol

from config.constants import Relation
from algebra.matrices import Matrix, chain, first_difference, identity_matrix, matmul


logger = logging.getLogger(__name__)


class OperatorModule(Protocol):
    d: int
    zero: object
    one: object

    @property
    def size(self) -> int: ...

    def s_matrix(self, i: int) -> Matrix: ...

    def u_matrix(self) -> Matrix: ...

    def u_inv_matrix(self) -> Matrix: ...

    def torus_matrix(self, digits) -> Matrix: ...


@dataclass(frozen=True)
class RelationResult:
    """One checked relation instance."""
    relation: str
    instance: str
    ok: bool
    detail: dict = field(default_factory=dict)


@dataclass
class RelationReport:
    """All checked instances; ok iff every instance holds."""
    results: list[RelationResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(result.ok for result in self.results)

    def failures(self) -> list[RelationResult]:
        return [result for result in self.results if not result.ok]

    def passed(self, relation: str) -> bool:
        return all(result.ok for result in self.results if result.relation == relation)

    def add(self, relation: str, instance: str, left: Matrix, right: Matrix) -> None:
        spot = first_difference(left, right)
        detail = {} if spot is None else {"row": spot[0], "col": spot[1]}
        if spot is not None:
            logger.info("%s fails at %s, entry %s", relation, instance, spot)
        self.results.append(RelationResult(relation, instance, spot is None, detail))


def conjugated_s(module: OperatorModule, i: int) -> Matrix:
    """(T_{u^{-1}})^{d-i} T_{s_d} (T_u)^{d-i}."""
    k = module.d - i
    return chain(
        [module.u_inv_matrix()] * k + [module.s_matrix(module.d)] + [module.u_matrix()] * k,
        module.zero, module.one,
    )


def _swap_last(digits: tuple[int, ...]) -> tuple[int, ...]:
    swapped = list(digits)
    swapped[-2], swapped[-1] = swapped[-1], swapped[-2]
    return tuple(swapped)


def _unit_digits(d: int, slot: int) -> tuple[int, ...]:
    return tuple(1 if k == slot else 0 for k in range(d + 1))


def check_relations(module: OperatorModule, relations=Relation.ALL, s_matrix=None) -> RelationReport:
    """Check the requested relations; s_matrix overrides how T_{s_i} is obtained."""
    d, zero, one = module.d, module.zero, module.one
    s_of = s_matrix or module.s_matrix
    report = RelationReport()

    def product(*matrices: Matrix) -> Matrix:
        return chain(list(matrices), zero, one)

    if Relation.COMMUTE in relations:
        for i in range(1, d + 1):
            for j in range(i + 2, d + 1):
                report.add(Relation.COMMUTE, f"s{i},s{j}",
                           product(s_of(i), s_of(j)), product(s_of(j), s_of(i)))

    if Relation.BRAID in relations:
        for i in range(1, d):
            a, b = s_of(i), s_of(i + 1)
            report.add(Relation.BRAID, f"s{i},s{i + 1}", product(a, b, a), product(b, a, b))

    if Relation.U_INVERSE in relations:
        ident = identity_matrix(module.size, zero, one)
        u, u_inv = module.u_matrix(), module.u_inv_matrix()
        report.add(Relation.U_INVERSE, "u*u_inv", matmul(u, u_inv, zero), ident)
        report.add(Relation.U_INVERSE, "u_inv*u", matmul(u_inv, u, zero), ident)

    if Relation.CONJUGATION in relations:
        for i in range(1, d):
            report.add(Relation.CONJUGATION, f"s{i}", module.s_matrix(i), conjugated_s(module, i))

    if Relation.TORUS_PRODUCT in relations:
        for a in range(d + 1):
            for b in range(a, d + 1):
                left, right = _unit_digits(d, a), _unit_digits(d, b)
                combined = tuple(x + y for x, y in zip(left, right))
                report.add(Relation.TORUS_PRODUCT, f"t{a},t{b}",
                           matmul(module.torus_matrix(left), module.torus_matrix(right), zero),
                           module.torus_matrix(combined))

    if Relation.TORUS_EXCHANGE in relations:
        s_d = s_of(d)
        for slot in range(d + 1):
            digits = _unit_digits(d, slot)
            report.add(Relation.TORUS_EXCHANGE, f"t{slot}",
                       matmul(module.torus_matrix(digits), s_d, zero),
                       matmul(s_d, module.torus_matrix(_swap_last(digits)), zero))

    logger.debug("checked %d relation instances, %d failed", len(report.results), len(report.failures()))
    return report
