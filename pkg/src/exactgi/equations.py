"""Cramer-style solvers for the matrix equations AX=B, XA=B and AXB=D.

Least squares variants produce the minimum-norm least squares solution
(A+B, BA+, A+DB+); Drazin variants produce A^D B, B A^D and A^D D B^D.
Every entry of X is a ratio of minor sums; no inverse is ever formed.

For AXB=D the rank pattern of (A, B) picks one of four formula branches.
All four run through the same minor-sum code path (a full-rank side makes
the constrained subset family a singleton, turning the sums into single
determinants); the branch is recorded in `case_tag` for auditability.
Within a branch the two published formulas (contract the B side first into
d^B columns, or the A side first into d^A rows) must agree; `route` selects
one, and tests exercise both.

Consistency of the original equation is reported through the exact residual;
the solvers never reject an inconsistent system (least squares semantics).
Subspace preconditions of the Drazin variants are diagnosed exactly and
reported, not enforced.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .matrix import (
    ExactMatrix,
    column_space_contains,
    rank,
    rank_profile,
    row_space_contains,
)
from .minors import (
    check_budget,
    principal_minor_sum,
    replaced_col_minor_sum,
    replaced_row_minor_sum,
    subset_count,
)
from .scalar import ExactScalar

Route = Literal["auto", "dB", "dA"]


@dataclass(frozen=True)
class EqSolution:
    """A solved matrix equation with its audit trail."""

    X: ExactMatrix
    case_tag: str
    ranks: tuple[int, ...]
    indices: tuple[int, ...] | None
    residual: ExactMatrix
    constraint_satisfied: bool | None = None
    intermediates: dict[str, ExactMatrix] = field(default_factory=dict)


# -- least squares ------------------------------------------------------------------


def ls_solve_left(
    a: ExactMatrix, b: ExactMatrix, budget: int | None = None
) -> EqSolution:
    """Minimum-norm least squares solution of A X = B, i.e. X = A+ B."""
    m, n = a.shape
    if b.rows != m:
        raise ValueError(f"B must have {m} rows, got {b.rows}")
    s = b.cols
    r = rank(a)
    if r == 0:
        x = ExactMatrix.zeros(n, s)
        return EqSolution(x, "zero_rank", (r,), None, b - a @ x)
    gram = a.conj_transpose() @ a
    b_hat = a.conj_transpose() @ b
    check_budget(
        n * s * subset_count(r, n, 1) * r * r + subset_count(r, n) * r * r, budget
    )
    d = principal_minor_sum(gram, r, budget)
    x = ExactMatrix(
        n,
        s,
        [
            replaced_col_minor_sum(gram, i, b_hat.col(j), r, budget) / d
            for i in range(1, n + 1)
            for j in range(1, s + 1)
        ],
    )
    tag = "full_column_rank" if r == n else "rank_deficient"
    return EqSolution(x, tag, (r,), None, b - a @ x, None, {"B_hat": b_hat})


def ls_solve_right(
    a: ExactMatrix, b: ExactMatrix, budget: int | None = None
) -> EqSolution:
    """Minimum-norm least squares solution of X A = B, i.e. X = B A+."""
    m, n = a.shape
    if b.cols != n:
        raise ValueError(f"B must have {n} columns, got {b.cols}")
    s = b.rows
    r = rank(a)
    if r == 0:
        x = ExactMatrix.zeros(s, m)
        return EqSolution(x, "zero_rank", (r,), None, b - x @ a)
    gram = a @ a.conj_transpose()
    b_check = b @ a.conj_transpose()
    check_budget(
        s * m * subset_count(r, m, 1) * r * r + subset_count(r, m) * r * r, budget
    )
    d = principal_minor_sum(gram, r, budget)
    x = ExactMatrix(
        s,
        m,
        [
            replaced_row_minor_sum(gram, j, b_check.row(i), r, budget) / d
            for i in range(1, s + 1)
            for j in range(1, m + 1)
        ],
    )
    tag = "full_row_rank" if r == m else "rank_deficient"
    return EqSolution(x, tag, (r,), None, b - x @ a, None, {"B_check": b_check})


def _axb_case_tag(r1: int, n: int, r2: int, p: int) -> str:
    if r1 < n and r2 < p:
        return "i"
    if r1 == n and r2 == p:
        return "ii"
    if r1 == n:
        return "iii"
    return "iiii"


def ls_solve_both(
    a: ExactMatrix,
    b: ExactMatrix,
    d_rhs: ExactMatrix,
    route: Route = "auto",
    budget: int | None = None,
) -> EqSolution:
    """Minimum-norm least squares solution of A X B = D, i.e. X = A+ D B+."""
    m, n = a.shape
    p, q = b.shape
    if d_rhs.shape != (m, q):
        raise ValueError(f"D must be {m}x{q}, got {d_rhs.shape}")
    r1 = rank(a)
    r2 = rank(b)
    tag = _axb_case_tag(r1, n, r2, p)
    if r1 == 0 or r2 == 0:
        x = ExactMatrix.zeros(n, p)
        return EqSolution(x, tag, (r1, r2), None, d_rhs - a @ x @ b)
    gram_a = a.conj_transpose() @ a  # n x n
    gram_b = b @ b.conj_transpose()  # p x p
    d_tilde = a.conj_transpose() @ d_rhs @ b.conj_transpose()  # n x p
    check_budget(
        2 * n * p * (subset_count(r1, n, 1) * r1 * r1 + subset_count(r2, p, 1) * r2 * r2)
        + subset_count(r1, n) * r1 * r1
        + subset_count(r2, p) * r2 * r2,
        budget,
    )
    denominator = principal_minor_sum(gram_a, r1, budget) * principal_minor_sum(
        gram_b, r2, budget
    )
    x, inter = _contract_both(
        gram_a, r1, gram_b, r2, d_tilde, denominator, route, budget
    )
    inter["D_tilde"] = d_tilde
    return EqSolution(x, tag, (r1, r2), None, d_rhs - a @ x @ b, None, inter)


def _contract_both(
    left: ExactMatrix,
    r1: int,
    right: ExactMatrix,
    r2: int,
    d_tilde: ExactMatrix,
    denominator: ExactScalar,
    route: Route,
    budget: int | None,
) -> tuple[ExactMatrix, dict[str, ExactMatrix]]:
    """Shared two-stage contraction for the AXB solvers.

    left is the n x n matrix whose column-replaced sums give the A side,
    right the p x p matrix whose row-replaced sums give the B side.
    """
    n = left.rows
    p = right.rows
    if route not in ("auto", "dB", "dA"):
        raise ValueError(f"unknown route {route!r}")
    chosen = "dB" if route == "auto" else route
    if chosen == "dB":
        d_b = ExactMatrix(
            n,
            p,
            [
                replaced_row_minor_sum(right, j, d_tilde.row(l), r2, budget)
                for l in range(1, n + 1)
                for j in range(1, p + 1)
            ],
        )
        x = ExactMatrix(
            n,
            p,
            [
                replaced_col_minor_sum(left, i, d_b.col(j), r1, budget) / denominator
                for i in range(1, n + 1)
                for j in range(1, p + 1)
            ],
        )
        return x, {"d_B": d_b}
    d_a = ExactMatrix(
        n,
        p,
        [
            replaced_col_minor_sum(left, i, d_tilde.col(t), r1, budget)
            for i in range(1, n + 1)
            for t in range(1, p + 1)
        ],
    )
    x = ExactMatrix(
        n,
        p,
        [
            replaced_row_minor_sum(right, j, d_a.row(i), r2, budget) / denominator
            for i in range(1, n + 1)
            for j in range(1, p + 1)
        ],
    )
    return x, {"d_A": d_a}


# -- Drazin ---------------------------------------------------------------------------


def dz_solve_left(
    a: ExactMatrix, b: ExactMatrix, budget: int | None = None
) -> EqSolution:
    """Drazin solution X = A^D B of A X = B for square A."""
    if not a.is_square:
        raise ValueError("the Drazin solution needs a square coefficient matrix")
    n = a.rows
    if b.rows != n:
        raise ValueError(f"B must have {n} rows, got {b.rows}")
    s = b.cols
    profile = rank_profile(a)
    k = profile.index
    r = profile.core_rank
    constraint = column_space_contains(profile.power(k), b)
    if r == 0:
        x = ExactMatrix.zeros(n, s)
        return EqSolution(x, "nilpotent", (r,), (k,), b - a @ x, constraint)
    base = profile.power(k + 1)
    b_hat = profile.power(k) @ b
    check_budget(
        n * s * subset_count(r, n, 1) * r * r + subset_count(r, n) * r * r, budget
    )
    d = principal_minor_sum(base, r, budget)
    x = ExactMatrix(
        n,
        s,
        [
            replaced_col_minor_sum(base, i, b_hat.col(j), r, budget) / d
            for i in range(1, n + 1)
            for j in range(1, s + 1)
        ],
    )
    tag = "nonsingular" if k == 0 else "singular"
    return EqSolution(x, tag, (r,), (k,), b - a @ x, constraint, {"B_hat": b_hat})


def dz_solve_right(
    a: ExactMatrix, b: ExactMatrix, budget: int | None = None
) -> EqSolution:
    """Drazin solution X = B A^D of X A = B for square A."""
    if not a.is_square:
        raise ValueError("the Drazin solution needs a square coefficient matrix")
    m = a.rows
    if b.cols != m:
        raise ValueError(f"B must have {m} columns, got {b.cols}")
    s = b.rows
    profile = rank_profile(a)
    k = profile.index
    r = profile.core_rank
    constraint = row_space_contains(profile.power(k), b)
    if r == 0:
        x = ExactMatrix.zeros(s, m)
        return EqSolution(x, "nilpotent", (r,), (k,), b - x @ a, constraint)
    base = profile.power(k + 1)
    b_check = b @ profile.power(k)
    check_budget(
        s * m * subset_count(r, m, 1) * r * r + subset_count(r, m) * r * r, budget
    )
    d = principal_minor_sum(base, r, budget)
    x = ExactMatrix(
        s,
        m,
        [
            replaced_row_minor_sum(base, j, b_check.row(i), r, budget) / d
            for i in range(1, s + 1)
            for j in range(1, m + 1)
        ],
    )
    tag = "nonsingular" if k == 0 else "singular"
    return EqSolution(x, tag, (r,), (k,), b - x @ a, constraint, {"B_check": b_check})


def dz_solve_both(
    a: ExactMatrix,
    b: ExactMatrix,
    d_rhs: ExactMatrix,
    route: Route = "auto",
    budget: int | None = None,
) -> EqSolution:
    """Drazin solution X = A^D D B^D of A X B = D for square A and B."""
    if not a.is_square or not b.is_square:
        raise ValueError("the Drazin solution needs square coefficient matrices")
    n = a.rows
    m = b.rows
    if d_rhs.shape != (n, m):
        raise ValueError(f"D must be {n}x{m}, got {d_rhs.shape}")
    pa = rank_profile(a)
    pb = rank_profile(b)
    k1, k2 = pa.index, pb.index
    r1, r2 = pa.core_rank, pb.core_rank
    constraint = column_space_contains(pa.power(k1), d_rhs) and row_space_contains(
        pb.power(k2), d_rhs
    )
    if r1 == 0 or r2 == 0:
        x = ExactMatrix.zeros(n, m)
        return EqSolution(x, "nilpotent", (r1, r2), (k1, k2), d_rhs - a @ x @ b, constraint)
    base_a = pa.power(k1 + 1)
    base_b = pb.power(k2 + 1)
    d_tilde = pa.power(k1) @ d_rhs @ pb.power(k2)
    check_budget(
        2 * n * m * (subset_count(r1, n, 1) * r1 * r1 + subset_count(r2, m, 1) * r2 * r2)
        + subset_count(r1, n) * r1 * r1
        + subset_count(r2, m) * r2 * r2,
        budget,
    )
    denominator = principal_minor_sum(base_a, r1, budget) * principal_minor_sum(
        base_b, r2, budget
    )
    x, inter = _contract_both(
        base_a, r1, base_b, r2, d_tilde, denominator, route, budget
    )
    inter["D_tilde"] = d_tilde
    tag = "nonsingular" if k1 == 0 and k2 == 0 else "singular"
    return EqSolution(x, tag, (r1, r2), (k1, k2), d_rhs - a @ x @ b, constraint, inter)
