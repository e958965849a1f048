"""Index-subset enumeration and the three minor-sum primitives.

Everything downstream (generalized inverses, Cramer-style solvers, matrix
equations, the differential-equation coefficients) reduces to three sums of
r-by-r principal minors of some square matrix M:

* the plain principal-minor sum over all r-subsets,
* the same sum restricted to subsets containing a fixed column index i,
  with column i of M replaced by a given vector,
* the row dual (subsets containing a fixed row index j, row j replaced).

Minor determinants run over Gaussian integers after clearing denominators
once per call.  Subsets stream in lexicographic order, so profiling runs are
deterministic; the sums themselves are order-independent.

A work guard protects against the intrinsic C(n, r) blow-up: any call whose
estimated cost exceeds the budget fails fast with BudgetExceededError instead
of grinding for hours.  The unit of work is "submatrix entries touched",
i.e. (number of minors) * r^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

from .matrix import ExactMatrix, clear_denominators, int_det
from .scalar import ONE, ExactScalar

DEFAULT_WORK_BUDGET = 10**8


class BudgetExceededError(RuntimeError):
    """Raised when an operation's estimated minor-sum work exceeds the budget."""

    def __init__(self, estimate: int, budget: int):
        self.estimate = estimate
        self.budget = budget
        super().__init__(
            f"estimated work {estimate} submatrix-entry touches exceeds the "
            f"budget of {budget}; raise the budget to run anyway"
        )


def check_budget(estimate: int, budget: int | None) -> None:
    limit = DEFAULT_WORK_BUDGET if budget is None else budget
    if estimate > limit:
        raise BudgetExceededError(estimate, limit)


@dataclass(frozen=True)
class IndexSubset:
    """A strictly increasing tuple of 1-based indices drawn from 1..universe."""

    indices: tuple[int, ...]
    universe: int

    def __post_init__(self) -> None:
        if any(not 1 <= v <= self.universe for v in self.indices):
            raise ValueError(f"indices {self.indices} outside 1..{self.universe}")
        if any(a >= b for a, b in zip(self.indices, self.indices[1:])):
            raise ValueError(f"indices {self.indices} are not strictly increasing")

    def __iter__(self):
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, value: int) -> bool:
        return value in self.indices


def subset_count(k: int, n: int, required: int | None = None) -> int:
    """C(n, k), or C(n-1, k-1) when one index is pinned."""
    if required is None:
        return comb(n, k)
    return comb(n - 1, k - 1) if k >= 1 else 0


def enumerate_subsets(
    k: int, n: int, required: int | None = None
) -> Iterator[IndexSubset]:
    """All k-subsets of 1..n in lexicographic order, optionally restricted to
    subsets containing `required`."""
    if not 0 <= k <= n:
        raise ValueError(f"subset size {k} outside 0..{n}")
    if required is not None and not 1 <= required <= n:
        raise ValueError(f"required index {required} outside 1..{n}")
    if required is None:
        for combo in combinations(range(1, n + 1), k):
            yield IndexSubset(combo, n)
        return
    if k == 0:
        return  # no 0-subset contains a required index
    rest = [v for v in range(1, n + 1) if v != required]
    for combo in combinations(rest, k - 1):
        merged = tuple(sorted((*combo, required)))
        yield IndexSubset(merged, n)


# -- internal evaluation over Gaussian integers --------------------------------


def _sum_minors(
    re_rows: list[list[int]],
    im_rows: list[list[int]],
    q: int,
    r: int,
    required: int | None,
) -> ExactScalar:
    n = len(re_rows)
    total_re = 0
    total_im = 0
    for subset in enumerate_subsets(r, n, required):
        idx = [v - 1 for v in subset.indices]
        sub_re = [[re_rows[a][b] for b in idx] for a in idx]
        sub_im = [[im_rows[a][b] for b in idx] for a in idx]
        dr, di = int_det(sub_re, sub_im)
        total_re += dr
        total_im += di
    scale = Fraction(1, q) ** r
    return ExactScalar(total_re * scale, total_im * scale)


def _as_vector(values: Sequence[ExactScalar] | ExactMatrix, n: int, what: str):
    if isinstance(values, ExactMatrix):
        if values.cols == 1:
            values = values.col(1)
        elif values.rows == 1:
            values = values.row(1)
        else:
            raise ValueError(f"{what} must be a vector, got {values.shape}")
    if len(values) != n:
        raise ValueError(f"{what} has length {len(values)}, expected {n}")
    return list(values)


# -- the three primitives -------------------------------------------------------


def principal_minor_sum(
    matrix: ExactMatrix, r: int, budget: int | None = None
) -> ExactScalar:
    """Sum of all r-by-r principal minors; 1 for r = 0."""
    if not matrix.is_square:
        raise ValueError("principal minors need a square matrix")
    n = matrix.rows
    if not 0 <= r <= n:
        raise ValueError(f"minor order {r} outside 0..{n}")
    if r == 0:
        return ONE
    check_budget(subset_count(r, n) * r * r, budget)
    re_rows, im_rows, q = clear_denominators(matrix)
    return _sum_minors(re_rows, im_rows, q, r, None)


def replaced_col_minor_sum(
    matrix: ExactMatrix,
    i: int,
    vector: Sequence[ExactScalar] | ExactMatrix,
    r: int,
    budget: int | None = None,
) -> ExactScalar:
    """Sum over all r-subsets containing column i of the principal minors of
    M with column i replaced by the vector."""
    if not matrix.is_square:
        raise ValueError("replaced minor sums need a square matrix")
    n = matrix.rows
    if not 1 <= i <= n:
        raise ValueError(f"column index {i} outside 1..{n}")
    if not 1 <= r <= n:
        raise ValueError(f"minor order {r} outside 1..{n}")
    column = _as_vector(vector, n, "replacement column")
    check_budget(subset_count(r, n, i) * r * r, budget)
    replaced = matrix.replace_col(i, column)
    re_rows, im_rows, q = clear_denominators(replaced)
    return _sum_minors(re_rows, im_rows, q, r, i)


def replaced_row_minor_sum(
    matrix: ExactMatrix,
    j: int,
    vector: Sequence[ExactScalar] | ExactMatrix,
    r: int,
    budget: int | None = None,
) -> ExactScalar:
    """Row dual: sum over all r-subsets containing row j of the principal
    minors of M with row j replaced by the vector."""
    if not matrix.is_square:
        raise ValueError("replaced minor sums need a square matrix")
    n = matrix.rows
    if not 1 <= j <= n:
        raise ValueError(f"row index {j} outside 1..{n}")
    if not 1 <= r <= n:
        raise ValueError(f"minor order {r} outside 1..{n}")
    row = _as_vector(vector, n, "replacement row")
    check_budget(subset_count(r, n, j) * r * r, budget)
    replaced = matrix.replace_row(j, row)
    re_rows, im_rows, q = clear_denominators(replaced)
    return _sum_minors(re_rows, im_rows, q, r, j)
