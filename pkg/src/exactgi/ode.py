"""Exact polynomial partial solutions of X' + AX = B and X' + XA = B.

With k the index of the (possibly singular) coefficient matrix A, the
partial solution obtained by dropping the free constant of the general
solution is the degree-<=k matrix polynomial

    X(t) = A^D B + sum_{j=1..k} ((-1)^(j-1)/j!) (A^(j-1)B - A^D A^j B) t^j

(mirrored on the right for X' + XA = B).  Every coefficient entry is
computed by minor sums over A^(k+1) with replacement vectors drawn from the
power products A^l B (or B A^l), never by forming A^D itself.  Substituting
the polynomial back into the equation telescopes to B exactly, which
`substitute_check` certifies.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Literal

from .matrix import ExactMatrix, inverse, rank_profile
from .minors import (
    check_budget,
    principal_minor_sum,
    replaced_col_minor_sum,
    replaced_row_minor_sum,
    subset_count,
)
from .scalar import ExactScalar

Side = Literal["left", "right"]


def _trim(coefficients: list[ExactMatrix]) -> tuple[ExactMatrix, ...]:
    while len(coefficients) > 1 and coefficients[-1].is_zero():
        coefficients.pop()
    return tuple(coefficients)


@dataclass(frozen=True)
class MatrixPoly:
    """A polynomial in t with matrix coefficients, X(t) = sum C_j t^j.

    Trailing zero coefficients are trimmed at construction, so `degree` is
    exact and structural equality is mathematical equality.
    """

    coefficients: tuple[ExactMatrix, ...]

    def __init__(self, coefficients) -> None:
        coeffs = list(coefficients)
        if not coeffs:
            raise ValueError("a matrix polynomial needs at least one coefficient")
        shape = coeffs[0].shape
        if any(c.shape != shape for c in coeffs):
            raise ValueError("all coefficients must share one shape")
        object.__setattr__(self, "coefficients", _trim(coeffs))

    @property
    def shape(self) -> tuple[int, int]:
        return self.coefficients[0].shape

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return len(self.coefficients) == 1 and self.coefficients[0].is_zero()

    def coefficient(self, j: int) -> ExactMatrix:
        if j < len(self.coefficients):
            return self.coefficients[j]
        rows, cols = self.shape
        return ExactMatrix.zeros(rows, cols)

    def entry_terms(self, i: int, j: int) -> tuple[ExactScalar, ...]:
        """The scalar coefficients of entry (i, j), constant term first,
        trailing zeros trimmed."""
        terms = [c.entry(i, j) for c in self.coefficients]
        while len(terms) > 1 and terms[-1].is_zero():
            terms.pop()
        return tuple(terms)

    def derivative(self) -> "MatrixPoly":
        if self.degree == 0:
            rows, cols = self.shape
            return MatrixPoly([ExactMatrix.zeros(rows, cols)])
        return MatrixPoly(
            [c.scale(j) for j, c in enumerate(self.coefficients) if j >= 1]
        )

    def eval_at(self, t: ExactScalar) -> ExactMatrix:
        acc = self.coefficients[-1]
        for c in reversed(self.coefficients[:-1]):
            acc = acc.scale(t) + c
        return acc

    def __add__(self, other: "MatrixPoly") -> "MatrixPoly":
        if self.shape != other.shape:
            raise ValueError("shape mismatch between polynomials")
        length = max(len(self.coefficients), len(other.coefficients))
        return MatrixPoly(
            [self.coefficient(j) + other.coefficient(j) for j in range(length)]
        )

    def __sub__(self, other: "MatrixPoly") -> "MatrixPoly":
        if self.shape != other.shape:
            raise ValueError("shape mismatch between polynomials")
        length = max(len(self.coefficients), len(other.coefficients))
        return MatrixPoly(
            [self.coefficient(j) - other.coefficient(j) for j in range(length)]
        )

    def left_mul(self, matrix: ExactMatrix) -> "MatrixPoly":
        return MatrixPoly([matrix @ c for c in self.coefficients])

    def right_mul(self, matrix: ExactMatrix) -> "MatrixPoly":
        return MatrixPoly([c @ matrix for c in self.coefficients])


def ode_left_partial(
    a: ExactMatrix, b: ExactMatrix, budget: int | None = None
) -> MatrixPoly:
    """Partial solution of X' + AX = B as a polynomial of degree <= Ind(A)."""
    return _ode_partial(a, b, "left", budget)


def ode_right_partial(
    a: ExactMatrix, b: ExactMatrix, budget: int | None = None
) -> MatrixPoly:
    """Partial solution of X' + XA = B as a polynomial of degree <= Ind(A)."""
    return _ode_partial(a, b, "right", budget)


def _ode_partial(
    a: ExactMatrix, b: ExactMatrix, side: Side, budget: int | None
) -> MatrixPoly:
    if not a.is_square or a.shape != b.shape:
        raise ValueError("coefficient and right-hand side must be square, same size")
    n = a.rows
    profile = rank_profile(a)
    k = profile.index
    if k == 0:
        a_inv = inverse(a)
        return MatrixPoly([a_inv @ b if side == "left" else b @ a_inv])
    r = profile.core_rank
    # power products B^(l): A^l B on the left, B A^l on the right, l = 0..2k
    products = [b]
    for l in range(1, 2 * k + 1):
        products.append(
            a @ products[-1] if side == "left" else products[-1] @ a
        )
    base = profile.power(k + 1)
    if r > 0:
        check_budget(
            (k + 1) * n * n * subset_count(r, n, 1) * r * r
            + subset_count(r, n) * r * r,
            budget,
        )
        d = principal_minor_sum(base, r, budget)

    def drazin_product(order: int) -> ExactMatrix:
        # A^D A^order B (left) or B A^order A^D (right), entrywise by minor
        # sums with the replacement vectors of the (k+order)-th power product.
        if r == 0:
            return ExactMatrix.zeros(n, n)
        source = products[k + order]
        if side == "left":
            entries = [
                replaced_col_minor_sum(base, i, source.col(j), r, budget) / d
                for i in range(1, n + 1)
                for j in range(1, n + 1)
            ]
        else:
            entries = [
                replaced_row_minor_sum(base, j, source.row(i), r, budget) / d
                for i in range(1, n + 1)
                for j in range(1, n + 1)
            ]
        return ExactMatrix(n, n, entries)

    coefficients = [drazin_product(0)]
    for j in range(1, k + 1):
        factor = ExactScalar(Fraction((-1) ** (j - 1), factorial(j)))
        coefficients.append((products[j - 1] - drazin_product(j)).scale(factor))
    return MatrixPoly(coefficients)


def substitute_check(
    poly: MatrixPoly, a: ExactMatrix, b: ExactMatrix, side: Side
) -> tuple[bool, MatrixPoly]:
    """Substitute X(t) into X' + AX - B (or X' + XA - B) and report whether
    the residual polynomial is identically zero."""
    if side not in ("left", "right"):
        raise ValueError(f"unknown side {side!r}")
    if poly.shape != a.shape or a.shape != b.shape:
        raise ValueError("shapes of polynomial, coefficient and right side differ")
    product = poly.left_mul(a) if side == "left" else poly.right_mul(a)
    residual = poly.derivative() + product - MatrixPoly([b])
    return residual.is_zero(), residual
