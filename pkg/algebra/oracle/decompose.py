"""The decomposition G = disjoint union of P w I_0, computed by row reduction.

Left multiplication by upper triangular matrices only adds lower rows into
higher ones and rescales rows. Working from the bottom row up, each row is
cleared at the pivot columns of the rows below it and scaled so that its
leftmost entry of minimal valuation becomes 1. The reduced matrix is then
w * i with i in I_0, and w sends the pivot column of row rho to rho.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from config import settings
from algebra.character import CharacterData
from algebra.coxeter import Permutation
from algebra.errors import DomainError, PrecisionError
from algebra.oracle.group import GroupElement, from_entries, identity_element, perm_matrix
from algebra.oracle.laurent import LaurentScalar
from algebra.scalars import Scalar


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Decomposition:
    """x = p * w * i with p upper triangular and i in I_0."""
    p: GroupElement
    w: Permutation
    i: GroupElement
    precision: int

    def recompose(self) -> GroupElement:
        return self.p * perm_matrix(self.p.fq, self.w) * self.i


def _pivot_column(row: list[LaurentScalar], taken: set[int]) -> int:
    best, best_val = None, None
    for col, entry in enumerate(row):
        if col in taken or entry.is_zero_to_precision():
            continue
        v = entry.valuation()
        if best_val is None or v < best_val:
            best, best_val = col, v
    if best is None:
        if all(entry.is_exact_zero() for entry in row):
            raise DomainError("matrix is singular")
        raise PrecisionError("row vanishes to working precision")
    # an undetermined entry might still undercut the pivot
    for col, entry in enumerate(row):
        if col not in taken and entry.is_zero_to_precision() and not entry.is_exact_zero() \
                and entry.prec <= best_val:
            raise PrecisionError(f"pivot valuation {best_val} not separated at column {col}")
    return best


def iwasawa_decompose(x: GroupElement, precision: int | None = None) -> Decomposition:
    precision = precision or settings.DEFAULT_PRECISION
    fq, size = x.fq, x.d + 1
    zero = LaurentScalar.zero(fq)
    m = [list(row) for row in x.rows]
    p = [list(row) for row in identity_element(fq, x.d).rows]
    pivots: dict[int, int] = {}

    for rho in range(size - 1, -1, -1):
        for b in range(size - 1, rho, -1):
            col = pivots[b]
            c = m[rho][col]
            if c.is_exact_zero():
                continue
            # row_rho -= c * row_b, so column b of p gains c * column rho
            for k in range(size):
                if not m[b][k].is_exact_zero():
                    m[rho][k] = m[rho][k] - c * m[b][k]
                if not p[k][rho].is_exact_zero():
                    p[k][b] = p[k][b] + c * p[k][rho]
            m[rho][col] = zero
        col = _pivot_column(m[rho], set(pivots.values()))
        pivot = m[rho][col]
        scale = pivot.inverse(precision)
        m[rho] = [entry if entry.is_exact_zero() else entry * scale for entry in m[rho]]
        m[rho][col] = LaurentScalar.one(fq)
        for k in range(size):
            if not p[k][rho].is_exact_zero():
                p[k][rho] = p[k][rho] * pivot
        pivots[rho] = col

    w = Permutation(tuple(rho for _, rho in sorted((col, rho) for rho, col in pivots.items())))
    i = from_entries(fq, [m[w(k)] for k in range(size)])
    return Decomposition(from_entries(fq, p), w, i, precision)


def decompose_with_retry(x: GroupElement, precision: int | None = None) -> Decomposition:
    """Retry at doubled precision when the first attempt cannot separate valuations."""
    precision = max(precision or settings.DEFAULT_PRECISION, settings.MIN_PRECISION)
    for attempt in range(settings.PRECISION_RETRIES + 1):
        try:
            return iwasawa_decompose(x, precision)
        except PrecisionError:
            if attempt == settings.PRECISION_RETRIES:
                raise
            logger.info("precision %d exhausted, retrying at %d", precision, 2 * precision)
            precision *= 2
    raise PrecisionError("unreachable")


def theta_of_diagonal(c: CharacterData, p: GroupElement) -> Scalar:
    """Theta on the diagonal of an upper triangular p."""
    valuations, leading_logs = [], []
    for slot in range(p.d + 1):
        entry = p[slot, slot]
        valuations.append(entry.valuation())
        leading_logs.append(p.fq.log(entry.leading()))
    return c.diagonal_value(valuations, leading_logs)


def evaluate_f(c: CharacterData, w: Permutation, x: GroupElement, precision: int | None = None) -> Scalar:
    """f_w(x): Theta(p) when x lies in P w I_0, else 0."""
    found = decompose_with_retry(x, precision)
    if found.w != w:
        return Scalar.zero(c.ctx)
    return theta_of_diagonal(c, found.p)
