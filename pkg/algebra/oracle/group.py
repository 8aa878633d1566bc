"""Elements of GL_{d+1}(F) as matrices of truncated Laurent series."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from algebra.coxeter import Permutation, iter_w, length, simple_reflection, ubar
from algebra.errors import SizeMismatchError
from algebra.finite_field import FiniteField, FqElement
from algebra.oracle.laurent import LaurentScalar


@dataclass(frozen=True, eq=False)
class GroupElement:
    fq: FiniteField
    rows: tuple[tuple[LaurentScalar, ...], ...]

    @property
    def d(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, position: tuple[int, int]) -> LaurentScalar:
        row, col = position
        return self.rows[row][col]

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if self.d != other.d:
            raise SizeMismatchError(f"cannot multiply {self.d + 1}x{self.d + 1} by {other.d + 1}x{other.d + 1}")
        size = self.d + 1
        rows = []
        for i in range(size):
            row = []
            for j in range(size):
                total = LaurentScalar.zero(self.fq)
                for k in range(size):
                    a, b = self.rows[i][k], other.rows[k][j]
                    if not (a.is_exact_zero() or b.is_exact_zero()):
                        total = total + a * b
                row.append(total)
            rows.append(tuple(row))
        return GroupElement(self.fq, tuple(rows))

    def determinant(self) -> LaurentScalar:
        """Leibniz expansion; exact when the entries are."""
        total = LaurentScalar.zero(self.fq)
        minus_one = LaurentScalar.constant(self.fq, -self.fq.one())
        for w in iter_w(self.d):
            term = minus_one if length(w) % 2 else LaurentScalar.one(self.fq)
            for col in range(self.d + 1):
                term = term * self.rows[w(col)][col]
            total = total + term
        return total

    def agrees_with(self, other: "GroupElement") -> bool:
        return all(
            a.agrees_with(b)
            for row_a, row_b in zip(self.rows, other.rows)
            for a, b in zip(row_a, row_b)
        )

    def is_upper_triangular(self) -> bool:
        return all(
            self.rows[i][j].is_zero_to_precision()
            for i in range(self.d + 1)
            for j in range(i)
        )

    def is_upper_unipotent(self) -> bool:
        one = LaurentScalar.one(self.fq)
        return self.is_upper_triangular() and all(self.rows[i][i].agrees_with(one) for i in range(self.d + 1))

    def in_pro_p_iwahori(self) -> bool:
        """Integral, diagonal congruent to 1 and strictly lower part divisible by X."""
        one = LaurentScalar.one(self.fq)
        for i, row in enumerate(self.rows):
            for j, entry in enumerate(row):
                if entry.is_zero_to_precision():
                    continue
                if i == j:
                    if not _positive((entry - one)):
                        return False
                elif i > j:
                    if not _positive(entry):
                        return False
                elif entry.valuation() < 0:
                    return False
        return True


def _positive(x: LaurentScalar) -> bool:
    return x.is_zero_to_precision() or x.valuation() > 0


def from_entries(fq: FiniteField, entries: Sequence[Sequence[LaurentScalar]]) -> GroupElement:
    return GroupElement(fq, tuple(tuple(row) for row in entries))


def diag(fq: FiniteField, values: Sequence[LaurentScalar]) -> GroupElement:
    size = len(values)
    zero = LaurentScalar.zero(fq)
    return from_entries(fq, [[values[i] if i == j else zero for j in range(size)] for i in range(size)])


def identity_element(fq: FiniteField, d: int) -> GroupElement:
    return diag(fq, [LaurentScalar.one(fq)] * (d + 1))


def _with_entries(fq: FiniteField, d: int, updates: dict[tuple[int, int], LaurentScalar]) -> GroupElement:
    rows = [list(row) for row in identity_element(fq, d).rows]
    for (i, j), value in updates.items():
        rows[i][j] = value
    return from_entries(fq, rows)


def perm_matrix(fq: FiniteField, w: Permutation) -> GroupElement:
    """The matrix sending e_k to e_{w(k)}."""
    size = w.d + 1
    zero, one = LaurentScalar.zero(fq), LaurentScalar.one(fq)
    return from_entries(fq, [[one if i == w(j) else zero for j in range(size)] for i in range(size)])


def s_element(fq: FiniteField, d: int, i: int) -> GroupElement:
    return perm_matrix(fq, simple_reflection(d, i))


def u_element(fq: FiniteField, d: int) -> GroupElement:
    """ubar * diag(X, 1, ..., 1), i.e. [[0, I_d], [X, 0]]."""
    values = [LaurentScalar.uniformizer(fq)] + [LaurentScalar.one(fq)] * d
    return perm_matrix(fq, ubar(d)) * diag(fq, values)


def u_inverse_element(fq: FiniteField, d: int) -> GroupElement:
    values = [LaurentScalar.uniformizer(fq, -1)] + [LaurentScalar.one(fq)] * d
    return diag(fq, values) * perm_matrix(fq, ubar(d, -1))


def nu(fq: FiniteField, d: int, i: int, b: LaurentScalar) -> GroupElement:
    """nu_{s_i}(b): unipotent with b at (i-1, i)."""
    return _with_entries(fq, d, {(i - 1, i): b})


def h(fq: FiniteField, d: int, i: int, a: LaurentScalar, relative_precision: int = 8) -> GroupElement:
    """h_{s_i}(a) = diag(a, a^{-1}) in slots i-1, i."""
    return _with_entries(fq, d, {(i - 1, i - 1): a, (i, i): a.inverse(relative_precision)})


def delta(fq: FiniteField, d: int, i: int) -> GroupElement:
    """delta_{s_i}: -1 in slot i-1."""
    return _with_entries(fq, d, {(i - 1, i - 1): LaurentScalar.constant(fq, -fq.one())})


def torus_element(fq: FiniteField, d: int, digits: Sequence[int]) -> GroupElement:
    """diag(g^{digits[0]}, ..., g^{digits[d]})."""
    return diag(fq, [LaurentScalar.constant(fq, fq.gen_power(e)) for e in digits])


def constant(fq: FiniteField, c: FqElement) -> LaurentScalar:
    return LaurentScalar.constant(fq, c)
