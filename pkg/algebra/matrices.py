"""Dense square matrices over Scalar or FqElement, stored as lists of rows.

Entry [v][w] is the coefficient of basis vector v in the image of basis
vector w, so operators act on column vectors and composition is the
matrix product.
"""
from __future__ import annotations

from typing import Callable, TypeVar

T = TypeVar("T")
Matrix = list[list[T]]


def identity_matrix(size: int, zero: T, one: T) -> Matrix:
    return [[one if i == j else zero for j in range(size)] for i in range(size)]


def zero_matrix(size: int, zero: T) -> Matrix:
    return [[zero] * size for _ in range(size)]


def matmul(a: Matrix, b: Matrix, zero: T) -> Matrix:
    size = len(a)
    result = zero_matrix(size, zero)
    for k in range(size):
        column = [(j, b[k][j]) for j in range(size) if not b[k][j].is_zero()]
        if not column:
            continue
        for i in range(size):
            left = a[i][k]
            if left.is_zero():
                continue
            row = result[i]
            for j, right in column:
                row[j] = row[j] + left * right
    return result


def chain(matrices: list[Matrix], zero: T, one: T) -> Matrix:
    """Product of the matrices from left to right."""
    result = identity_matrix(len(matrices[0]), zero, one)
    for matrix in matrices:
        result = matmul(result, matrix, zero)
    return result


def first_difference(a: Matrix, b: Matrix) -> tuple[int, int] | None:
    for i, (row_a, row_b) in enumerate(zip(a, b)):
        for j, (x, y) in enumerate(zip(row_a, row_b)):
            if x != y:
                return i, j
    return None


def map_entries(a: Matrix, fn: Callable) -> Matrix:
    return [[fn(x) for x in row] for row in a]


def nonzero_entries(a: Matrix) -> list[tuple[int, int, T]]:
    return [(i, j, x) for i, row in enumerate(a) for j, x in enumerate(row) if not x.is_zero()]
