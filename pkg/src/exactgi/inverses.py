"""Generalized inverses by minor-sum determinantal formulas.

Moore-Penrose, weighted Moore-Penrose, Drazin, group and weighted Drazin
inverses, the four projector formulas, independent oracles built on exact
rank factorization, and the defining-equation verifiers.

Each inverse entry is a ratio of minor sums over a single Gram-like square
matrix, so full-rank inputs route through the same code path (the constrained
subset family degenerates to a singleton and the formula becomes the
classical adjugate ratio).  Rank-0 and nilpotent inputs return the zero
matrix, matching the unique solutions of the defining equations.

All functions are pure; entries are independent, and `threads` > 1 evaluates
them through a thread pool with output identical to the sequential order.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Literal, Sequence

from .matrix import (
    ExactMatrix,
    RankProfile,
    det,
    inverse,
    rank,
    rank_profile,
    rref,
)
from .minors import (
    check_budget,
    principal_minor_sum,
    replaced_col_minor_sum,
    replaced_row_minor_sum,
    subset_count,
)
from .scalar import ONE, ExactScalar

Form = Literal["auto", "column", "row"]

COLUMN_FORM = "column_form"
ROW_FORM = "row_form"
FULL_RANK_ADJOINT = "full_rank_adjoint"


class VerificationError(RuntimeError):
    """An internally computed result failed its own defining equations."""


@dataclass(frozen=True)
class GiReport:
    """A computed generalized inverse plus the data behind its formula.

    `denominator` is the minor-sum denominator d_r, so callers can render
    entries as (integer combination)/d_r.
    """

    inverse: ExactMatrix
    rank_used: int
    index_used: int
    representation: str
    denominator: ExactScalar


@dataclass(frozen=True)
class WeightPair:
    """Hermitian positive definite weights for the weighted Moore-Penrose
    inverse; M is m-by-m, N is n-by-n."""

    M: ExactMatrix
    N: ExactMatrix

    def __post_init__(self) -> None:
        for name, w in (("M", self.M), ("N", self.N)):
            if not is_hermitian_positive_definite(w):
                raise ValueError(f"weight {name} is not Hermitian positive definite")


def is_hermitian_positive_definite(matrix: ExactMatrix) -> bool:
    """Exact test: Hermitian with all leading principal minors positive."""
    if not matrix.is_hermitian():
        return False
    for k in range(1, matrix.rows + 1):
        leading = ExactMatrix.from_rows(
            [list(matrix.row(i)[:k]) for i in range(1, k + 1)]
        )
        d = det(leading)
        if d.im != 0 or d.re <= 0:
            return False
    return True


def _map_entries(fn: Callable[[tuple[int, int]], ExactScalar],
                 indices: Sequence[tuple[int, int]],
                 threads: int) -> list[ExactScalar]:
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, indices))
    return [fn(ix) for ix in indices]


def _build(rows: int, cols: int,
           fn: Callable[[tuple[int, int]], ExactScalar],
           threads: int) -> ExactMatrix:
    indices = [(i, j) for i in range(1, rows + 1) for j in range(1, cols + 1)]
    return ExactMatrix(rows, cols, _map_entries(fn, indices, threads))


def _resolve_form(form: Form, column_cost: int, row_cost: int) -> str:
    if form == "column":
        return "column"
    if form == "row":
        return "row"
    if form != "auto":
        raise ValueError(f"unknown form {form!r}")
    return "column" if column_cost <= row_cost else "row"


# -- Moore-Penrose ---------------------------------------------------------------


def mp_inverse(
    matrix: ExactMatrix,
    form: Form = "auto",
    budget: int | None = None,
    threads: int = 1,
) -> GiReport:
    """Moore-Penrose inverse by minor sums over A*A (column form) or AA*
    (row form)."""
    m, n = matrix.shape
    r = rank(matrix)
    if r == 0:
        return GiReport(ExactMatrix.zeros(n, m), 0, 0, COLUMN_FORM, ONE)
    chosen = _resolve_form(form, subset_count(r, n, 1), subset_count(r, m, 1))
    a_star = matrix.conj_transpose()
    if chosen == "column":
        gram = a_star @ matrix
        per_entry = subset_count(r, n, 1) * r * r
        check_budget(n * m * per_entry + subset_count(r, n) * r * r, budget)
        d = principal_minor_sum(gram, r, budget)

        def entry(ix: tuple[int, int]) -> ExactScalar:
            i, j = ix
            return replaced_col_minor_sum(gram, i, a_star.col(j), r, budget) / d

        rep = FULL_RANK_ADJOINT if r == n else COLUMN_FORM
    else:
        gram = matrix @ a_star
        per_entry = subset_count(r, m, 1) * r * r
        check_budget(n * m * per_entry + subset_count(r, m) * r * r, budget)
        d = principal_minor_sum(gram, r, budget)

        def entry(ix: tuple[int, int]) -> ExactScalar:
            i, j = ix
            return replaced_row_minor_sum(gram, j, a_star.row(i), r, budget) / d

        rep = FULL_RANK_ADJOINT if r == m else ROW_FORM
    return GiReport(_build(n, m, entry, threads), r, 0, rep, d)


def mp_inverse_oracle(matrix: ExactMatrix) -> ExactMatrix:
    """Independent Moore-Penrose computation via exact rank factorization:
    A = CQ with C the pivot columns and Q the nonzero rows of the reduced
    echelon form, then A+ = Q*(C*AQ*)^(-1)C*."""
    m, n = matrix.shape
    reduced, pivots = rref(matrix)
    r = len(pivots)
    if r == 0:
        return ExactMatrix.zeros(n, m)
    c = ExactMatrix(
        m, r, [matrix.entry(i, j) for i in range(1, m + 1) for j in pivots]
    )
    q = ExactMatrix.from_rows([list(reduced.row(i)) for i in range(1, r + 1)])
    q_star = q.conj_transpose()
    c_star = c.conj_transpose()
    middle = inverse(c_star @ matrix @ q_star)
    return q_star @ middle @ c_star


# -- weighted Moore-Penrose --------------------------------------------------------


def weighted_mp_inverse(
    matrix: ExactMatrix,
    weights: WeightPair,
    budget: int | None = None,
    threads: int = 1,
) -> GiReport:
    """Weighted Moore-Penrose inverse by minor sums over the weighted Gram
    matrix built from N^(-1)A*M.  Only the column-style representation
    exists; there is no row analogue."""
    m, n = matrix.shape
    if weights.M.shape != (m, m) or weights.N.shape != (n, n):
        raise ValueError(
            f"weights must be {m}x{m} and {n}x{n} for a {m}x{n} matrix"
        )
    r = rank(matrix)
    if r == 0:
        return GiReport(ExactMatrix.zeros(n, m), 0, 0, COLUMN_FORM, ONE)
    a_sharp = inverse(weights.N) @ matrix.conj_transpose() @ weights.M
    gram = a_sharp @ matrix
    check_budget(
        n * m * subset_count(r, n, 1) * r * r + subset_count(r, n) * r * r, budget
    )
    d = principal_minor_sum(gram, r, budget)

    def entry(ix: tuple[int, int]) -> ExactScalar:
        i, j = ix
        return replaced_col_minor_sum(gram, i, a_sharp.col(j), r, budget) / d

    rep = FULL_RANK_ADJOINT if r == n else COLUMN_FORM
    return GiReport(_build(n, m, entry, threads), r, 0, rep, d)


# -- Drazin and group -----------------------------------------------------------


def drazin_inverse(
    matrix: ExactMatrix,
    form: Form = "auto",
    budget: int | None = None,
    threads: int = 1,
) -> GiReport:
    """Drazin inverse by minor sums over A^(k+1) with replacement vectors
    taken from A^k, k = Ind(A)."""
    if not matrix.is_square:
        raise ValueError("the Drazin inverse needs a square matrix")
    profile = rank_profile(matrix)
    return _drazin_from_profile(profile, form, budget, threads)


def _drazin_from_profile(
    profile: RankProfile, form: Form, budget: int | None, threads: int
) -> GiReport:
    n = profile.matrix.rows
    k = profile.index
    r = profile.core_rank
    if r == 0:
        return GiReport(ExactMatrix.zeros(n, n), 0, k, COLUMN_FORM, ONE)
    power_k = profile.power(k)
    power_k1 = profile.power(k + 1)
    chosen = _resolve_form(form, subset_count(r, n, 1), subset_count(r, n, 1))
    check_budget(
        n * n * subset_count(r, n, 1) * r * r + subset_count(r, n) * r * r, budget
    )
    d = principal_minor_sum(power_k1, r, budget)
    if chosen == "column":

        def entry(ix: tuple[int, int]) -> ExactScalar:
            i, j = ix
            return replaced_col_minor_sum(power_k1, i, power_k.col(j), r, budget) / d

        rep = FULL_RANK_ADJOINT if r == n else COLUMN_FORM
    else:

        def entry(ix: tuple[int, int]) -> ExactScalar:
            i, j = ix
            return replaced_row_minor_sum(power_k1, j, power_k.row(i), r, budget) / d

        rep = FULL_RANK_ADJOINT if r == n else ROW_FORM
    return GiReport(_build(n, n, entry, threads), r, k, rep, d)


def drazin_inverse_oracle(matrix: ExactMatrix) -> ExactMatrix:
    """Independent Drazin computation: A^k (A^(2k+1))+ A^k, certified against
    the three defining equations before being returned."""
    if not matrix.is_square:
        raise ValueError("the Drazin inverse needs a square matrix")
    profile = rank_profile(matrix)
    k = profile.index
    if profile.core_rank == 0:
        candidate = ExactMatrix.zeros(matrix.rows, matrix.rows)
    else:
        power_k = profile.power(k)
        candidate = power_k @ mp_inverse_oracle(profile.power(2 * k + 1)) @ power_k
    report = verify_defining_equations(matrix, candidate, "drazin")
    if not report.all_satisfied:
        raise VerificationError(
            f"Drazin oracle failed its defining equations: {report.equations}"
        )
    return candidate


def group_inverse(
    matrix: ExactMatrix, budget: int | None = None, threads: int = 1
) -> GiReport:
    """Group inverse (index at most 1) by minor sums over A^2 with
    replacement vectors from A itself."""
    if not matrix.is_square:
        raise ValueError("the group inverse needs a square matrix")
    profile = rank_profile(matrix)
    if profile.index > 1:
        raise ValueError(
            f"group inverse does not exist: index is {profile.index} > 1"
        )
    n = matrix.rows
    square = profile.power(2)
    r = rank(square)
    if r == 0:
        return GiReport(ExactMatrix.zeros(n, n), 0, profile.index, COLUMN_FORM, ONE)
    check_budget(
        n * n * subset_count(r, n, 1) * r * r + subset_count(r, n) * r * r, budget
    )
    d = principal_minor_sum(square, r, budget)

    def entry(ix: tuple[int, int]) -> ExactScalar:
        i, j = ix
        return replaced_col_minor_sum(square, i, matrix.col(j), r, budget) / d

    rep = FULL_RANK_ADJOINT if r == n else COLUMN_FORM
    return GiReport(_build(n, n, entry, threads), r, profile.index, rep, d)


# -- weighted Drazin ---------------------------------------------------------------


def w_drazin_inverse(
    matrix: ExactMatrix,
    weight: ExactMatrix,
    form: Form = "auto",
    budget: int | None = None,
    threads: int = 1,
) -> GiReport:
    """Weighted Drazin inverse of a rectangular A with respect to W, by minor
    sums over (AW)^(k+2) with columns of (AW)^k A, or over (WA)^(k+2) with
    rows of A(WA)^k; k = max(Ind(AW), Ind(WA))."""
    m, n = matrix.shape
    if weight.shape != (n, m):
        raise ValueError(f"weight must be {n}x{m} for a {m}x{n} matrix")
    aw = rank_profile(matrix @ weight)
    wa = rank_profile(weight @ matrix)
    k = max(aw.index, wa.index)
    r = rank(aw.power(k))
    if r == 0:
        return GiReport(ExactMatrix.zeros(m, n), 0, k, COLUMN_FORM, ONE)
    chosen = _resolve_form(form, subset_count(r, m, 1), subset_count(r, n, 1))
    if chosen == "column":
        base = aw.power(k + 2)
        replacement = aw.power(k) @ matrix  # m x n
        check_budget(
            m * n * subset_count(r, m, 1) * r * r + subset_count(r, m) * r * r,
            budget,
        )
        d = principal_minor_sum(base, r, budget)

        def entry(ix: tuple[int, int]) -> ExactScalar:
            i, j = ix
            return replaced_col_minor_sum(base, i, replacement.col(j), r, budget) / d

        rep = FULL_RANK_ADJOINT if r == m else COLUMN_FORM
    else:
        base = wa.power(k + 2)
        replacement = matrix @ wa.power(k)  # m x n
        check_budget(
            m * n * subset_count(r, n, 1) * r * r + subset_count(r, n) * r * r,
            budget,
        )
        d = principal_minor_sum(base, r, budget)

        def entry(ix: tuple[int, int]) -> ExactScalar:
            i, j = ix
            return replaced_row_minor_sum(base, j, replacement.row(i), r, budget) / d

        rep = FULL_RANK_ADJOINT if r == n else ROW_FORM
    return GiReport(_build(m, n, entry, threads), r, k, rep, d)


# -- projectors ---------------------------------------------------------------------


ProjectorKind = Literal["in", "out", "drazin_left", "drazin_right"]


def projector(
    matrix: ExactMatrix,
    which: ProjectorKind,
    budget: int | None = None,
    threads: int = 1,
) -> ExactMatrix:
    """Projection matrices computed directly by minor sums, never by
    multiplying inverses:

    * ``in``           A+A   (onto the row space)
    * ``out``          AA+   (onto the column space)
    * ``drazin_left``  AA^D
    * ``drazin_right`` A^D A
    """
    if which in ("in", "out"):
        r = rank(matrix)
        if which == "in":
            n = matrix.cols
            if r == 0:
                return ExactMatrix.zeros(n, n)
            gram = matrix.conj_transpose() @ matrix
            check_budget(
                n * n * subset_count(r, n, 1) * r * r + subset_count(r, n) * r * r,
                budget,
            )
            d = principal_minor_sum(gram, r, budget)

            def entry(ix: tuple[int, int]) -> ExactScalar:
                i, j = ix
                return replaced_col_minor_sum(gram, i, gram.col(j), r, budget) / d

            return _build(n, n, entry, threads)
        m = matrix.rows
        if r == 0:
            return ExactMatrix.zeros(m, m)
        gram = matrix @ matrix.conj_transpose()
        check_budget(
            m * m * subset_count(r, m, 1) * r * r + subset_count(r, m) * r * r,
            budget,
        )
        d = principal_minor_sum(gram, r, budget)

        def entry(ix: tuple[int, int]) -> ExactScalar:
            i, j = ix
            return replaced_row_minor_sum(gram, j, gram.row(i), r, budget) / d

        return _build(m, m, entry, threads)

    if which not in ("drazin_left", "drazin_right"):
        raise ValueError(f"unknown projector kind {which!r}")
    if not matrix.is_square:
        raise ValueError("Drazin projectors need a square matrix")
    profile = rank_profile(matrix)
    n = matrix.rows
    k = profile.index
    r = profile.core_rank
    if r == 0:
        return ExactMatrix.zeros(n, n)
    power_k1 = profile.power(k + 1)
    check_budget(
        n * n * subset_count(r, n, 1) * r * r + subset_count(r, n) * r * r, budget
    )
    d = principal_minor_sum(power_k1, r, budget)
    if which == "drazin_left":

        def entry(ix: tuple[int, int]) -> ExactScalar:
            i, j = ix
            return replaced_row_minor_sum(power_k1, j, power_k1.row(i), r, budget) / d

    else:

        def entry(ix: tuple[int, int]) -> ExactScalar:
            i, j = ix
            return replaced_col_minor_sum(power_k1, i, power_k1.col(j), r, budget) / d

    return _build(n, n, entry, threads)


# -- defining-equation verification ---------------------------------------------------


@dataclass(frozen=True)
class EquationReport:
    """Exact boolean verdict per defining equation."""

    kind: str
    equations: dict[str, bool]

    @property
    def all_satisfied(self) -> bool:
        return all(self.equations.values())


def verify_defining_equations(
    matrix: ExactMatrix,
    candidate: ExactMatrix,
    kind: str,
    weights: WeightPair | None = None,
    weight: ExactMatrix | None = None,
) -> EquationReport:
    """Check a candidate inverse against the defining equations of its kind.

    kind is one of 'mp', 'weighted_mp' (needs weights), 'drazin', 'group',
    'w_drazin' (needs weight).  Every check is an exact equality.
    """
    a, x = matrix, candidate
    if kind == "mp":
        if (x.rows, x.cols) != (a.cols, a.rows):
            raise ValueError("candidate has the wrong shape for an MP inverse")
        results = {
            "AXA=A": a @ x @ a == a,
            "XAX=X": x @ a @ x == x,
            "(AX)*=AX": (a @ x).conj_transpose() == a @ x,
            "(XA)*=XA": (x @ a).conj_transpose() == x @ a,
        }
    elif kind == "weighted_mp":
        if weights is None:
            raise ValueError("weighted_mp verification needs the weight pair")
        if (x.rows, x.cols) != (a.cols, a.rows):
            raise ValueError("candidate has the wrong shape for an MP inverse")
        max_ = weights.M @ a @ x
        nxa = weights.N @ x @ a
        results = {
            "AXA=A": a @ x @ a == a,
            "XAX=X": x @ a @ x == x,
            "(MAX)*=MAX": max_.conj_transpose() == max_,
            "(NXA)*=NXA": nxa.conj_transpose() == nxa,
        }
    elif kind in ("drazin", "group"):
        if not a.is_square or x.shape != a.shape:
            raise ValueError("Drazin verification needs square same-size matrices")
        if kind == "group":
            results = {
                "AXA=A": a @ x @ a == a,
                "XAX=X": x @ a @ x == x,
                "AX=XA": a @ x == x @ a,
            }
        else:
            k = rank_profile(a).index
            results = {
                "A^(k+1)X=A^k": a.power(k + 1) @ x == a.power(k),
                "XAX=X": x @ a @ x == x,
                "AX=XA": a @ x == x @ a,
            }
    elif kind == "w_drazin":
        if weight is None:
            raise ValueError("w_drazin verification needs the weight matrix")
        if x.shape != a.shape:
            raise ValueError("candidate has the wrong shape for a weighted Drazin inverse")
        aw = a @ weight
        k = max(rank_profile(aw).index, rank_profile(weight @ a).index)
        results = {
            "(AW)^(k+1)XW=(AW)^k": aw.power(k + 1) @ x @ weight == aw.power(k),
            "XWAWX=X": x @ weight @ a @ weight @ x == x,
            "AWX=XWA": aw @ x == x @ weight @ a,
        }
    else:
        raise ValueError(f"unknown inverse kind {kind!r}")
    return EquationReport(kind, results)
