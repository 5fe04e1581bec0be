"""Change of basis between Schur and factorial Schur polynomials.

``c(lam, mu)`` expands ``s_lam(x | y)`` in the ``s_mu(x)`` and ``d(lam, mu)``
expands ``s_lam(x)`` in the ``s_mu(x | y)``.  Both are minors of the lower
unitriangular matrices

    A = (e_(i-j)(y_1..y_i))          B = (h_(i-j)(-y_1..-y_(j+1)))

(rows and columns ``0..N-1``), which are mutually inverse.  A partition ``nu``
with at most ``n`` parts and ``nu_1 <= m`` picks the rows or columns
``{nu_i + n - i}`` of these matrices.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .lrrule import CoeffTable, _check_partition, factorial_schur, lr_coefficient, lr_expand, schur
from .polyring import ONE, ZERO, Polynomial, Y_KIND, complete_sym, determinant, elementary_sym, poly_sum
from .tableaux import MultiShape, Partition, as_partition, conjugate, enumerate_yamanouchi, padded, partitions_up_to

Matrix = list[list[Polynomial]]


class ChangeBasisError(ValueError):
    pass


# -- complements and index sets ---------------------------------------------------

def complement(lam: Iterable[int], n: int, m: int) -> Partition:
    """The complement of ``lam`` in the ``n x m`` rectangle, as a partition with at most ``m`` parts.

    ``lam^c_i = n - lam'_(m + 1 - i)``; needs ``len(lam) <= n`` and ``lam_1 <= m``.
    """
    lam = as_partition(lam)
    if len(lam) > n:
        raise ChangeBasisError(f"{lam} has more than {n} parts")
    width = lam[0] if lam else 0
    if m < width:
        raise ChangeBasisError(f"m={m} is smaller than the {width} columns of {lam}")
    conj = padded(conjugate(lam), m)
    return as_partition(n - conj[m - i] for i in range(1, m + 1))


def partition_to_index_set(nu: Iterable[int], n: int, m: int) -> tuple[int, ...]:
    """``I_nu = {nu_i + n - i}`` listed increasingly, a subset of ``0..n+m-1``."""
    nu = padded(as_partition(nu), n)
    if nu and nu[0] > m:
        raise ChangeBasisError(f"{nu} does not fit in {m} columns")
    return tuple(sorted(p + n - i for i, p in enumerate(nu, start=1)))


def index_set_to_partition(index_set: Sequence[int]) -> Partition:
    n = len(index_set)
    ordered = sorted(index_set, reverse=True)
    return as_partition(e - (n - i) for i, e in enumerate(ordered, start=1))


def complementary_index_set(index_set: Sequence[int], total: int) -> tuple[int, ...]:
    members = set(index_set)
    return tuple(k for k in range(total) if k not in members)


def rho_statistic(index_set: Sequence[int], total: int) -> int:
    """``#{(j, i) : j < i, i in I, j not in I}`` for ``I`` inside ``0..total-1``."""
    members = set(index_set)
    return sum(1 for i in members for j in range(i) if j not in members)


# -- the A and B matrices ---------------------------------------------------------

def matrix_AB(N: int, family: int = 1) -> tuple[Matrix, Matrix]:
    if N < 1:
        raise ChangeBasisError("N must be >= 1")
    A = [[elementary_sym(i - j, i, family) for j in range(N)] for i in range(N)]
    B = [[complete_sym(i - j, j + 1, family, True) for j in range(N)] for i in range(N)]
    return A, B


def matmul(a: Matrix, b: Matrix) -> Matrix:
    inner = len(b)
    return [
        [poly_sum(a[i][k] * b[k][j] for k in range(inner) if a[i][k] and b[k][j]) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def is_identity(a: Matrix) -> bool:
    return all(a[i][j] == (ONE if i == j else ZERO) for i in range(len(a)) for j in range(len(a[i])))


def submatrix(a: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return [[a[i][j] for j in cols] for i in rows]


def matrix_to_json(a: Matrix) -> list[list]:
    return [[p.to_json() for p in row] for row in a]


# -- determinantal coefficients ---------------------------------------------------

def c_coeff_det(lam: Iterable[int], mu: Iterable[int], n: int, family: int = 1) -> Polynomial:
    """Coefficient of ``s_mu(x)`` in ``s_lam(x | y)`` as an ``n x n`` determinant."""
    lam = padded(_check_partition(lam, n), n)
    mu = padded(_check_partition(mu, n), n)
    matrix = [
        [elementary_sym(lam[i] - mu[j] - i + j, lam[i] + n - 1 - i, family) for j in range(n)]
        for i in range(n)
    ]
    return determinant(matrix)


def d_coeff_det(lam: Iterable[int], mu: Iterable[int], n: int, family: int = 1) -> Polynomial:
    """Coefficient of ``s_mu(x | y)`` in ``s_lam(x)`` as an ``n x n`` determinant.

    Entry ``(i, j)`` is ``h_(lam_i - mu_j - i + j)`` of ``-y_1 .. -y_k`` with
    ``k = mu_j + n + 1 - j``: the column of ``B`` picked by ``mu_j`` fixes the
    number of variables.
    """
    lam = padded(_check_partition(lam, n), n)
    mu = padded(_check_partition(mu, n), n)
    matrix = [
        [complete_sym(lam[i] - mu[j] - i + j, mu[j] + n - j, family, True) for j in range(n)]
        for i in range(n)
    ]
    return determinant(matrix)


def _negate_family(p: Polynomial, family: int) -> Polynomial:
    return p.negate_vars(lambda v: v[0] == Y_KIND and v[1] == family)


def default_m(lam: Partition, mu: Partition) -> int:
    return max(lam[0] if lam else 0, mu[0] if mu else 0)


def d_coeff_dual(lam: Iterable[int], mu: Iterable[int], n: int, m: int | None = None, family: int = 1) -> Polynomial:
    """``d(lam, mu)`` through the complementary partitions: ``c_(mu^c, m)^(lam^c)(-y)``."""
    lam = _check_partition(lam, n)
    mu = _check_partition(mu, n)
    if m is None:
        m = default_m(lam, mu)
    if m < default_m(lam, mu):
        raise ChangeBasisError(f"m={m} is smaller than the column count of {lam} or {mu}")
    if m == 0:
        return ONE
    c = c_coeff_det(complement(mu, n, m), complement(lam, n, m), m, family)
    return _negate_family(c, family)


# -- tables ---------------------------------------------------------------------------

def _candidates(lam: Partition, n: int) -> list[Partition]:
    return [mu for mu in partitions_up_to(sum(lam), n)]


def expand_factorial_in_schur(lam: Iterable[int], n: int, family: int = 1) -> CoeffTable:
    lam = _check_partition(lam, n)
    entries = {mu: c_coeff_det(lam, mu, n, family) for mu in _candidates(lam, n)}
    return CoeffTable(n, entries, MultiShape((lam,)), "schur")


def expand_schur_in_factorial(lam: Iterable[int], n: int, family: int = 1, method: str = "det", m: int | None = None) -> CoeffTable:
    """Table ``mu -> d(lam, mu)`` with ``method`` ``"det"`` or ``"dual"``."""
    lam = _check_partition(lam, n)
    if method == "det":
        entries = {mu: d_coeff_det(lam, mu, n, family) for mu in _candidates(lam, n)}
    elif method == "dual":
        entries = {mu: d_coeff_dual(lam, mu, n, m, family) for mu in _candidates(lam, n)}
    else:
        raise ChangeBasisError(f"unknown method {method!r}")
    return CoeffTable(n, entries, MultiShape((lam,)), "factorial")


def e_expand(shape: MultiShape, n: int, target_family: int) -> CoeffTable:
    """Expansion of ``s_shape(x | y)`` in the factorial basis ``s_mu(x | y^(target_family))``."""
    if not 1 <= target_family <= max(shape.r, 1):
        raise ChangeBasisError(f"target family {target_family} outside 1..{shape.r}")
    schur_table = lr_expand(shape, n)
    out: dict[Partition, list[Polynomial]] = {}
    for nu, c in schur_table.entries.items():
        for mu in partitions_up_to(sum(nu), n):
            d = d_coeff_det(nu, mu, n, target_family)
            if d:
                out.setdefault(mu, []).append(c * d)
    return CoeffTable(n, {mu: poly_sum(ps) for mu, ps in out.items()}, shape, "factorial")


def e_coefficient(shape: MultiShape, mu: Iterable[int], n: int, target_family: int) -> Polynomial:
    mu = _check_partition(mu, n)
    return e_expand(shape, n, target_family)[mu]


def classical_lr(alpha: Iterable[int], beta: Iterable[int], mu: Iterable[int], n: int) -> int:
    """Classical Littlewood-Richardson number by counting bar-free Yamanouchi fillings."""
    shape = MultiShape((as_partition(alpha), as_partition(beta)))
    return sum(1 for t in enumerate_yamanouchi(shape, n, _check_partition(mu, n)) if all(s > 0 for s in t.entries))


def compose_via_classical(shape: MultiShape, mu: Iterable[int], n: int) -> Polynomial:
    """``c_shape^mu`` for two diagrams, through two single-diagram expansions and classical LR numbers."""
    if shape.r != 2:
        raise ChangeBasisError(f"needs exactly two diagrams, got {shape.r}")
    mu = _check_partition(mu, n)
    first = expand_factorial_in_schur(shape.diagrams[0], n, 1)
    second = expand_factorial_in_schur(shape.diagrams[1], n, 2)
    total = sum(mu)
    acc = []
    for alpha, ca in first.entries.items():
        for beta, cb in second.entries.items():
            if sum(alpha) + sum(beta) != total:
                continue
            k = classical_lr(alpha, beta, mu, n)
            if k:
                acc.append(ca * cb * k)
    return poly_sum(acc)


def tableau_factorial_in_schur(lam: Iterable[int], n: int, family: int = 1) -> CoeffTable:
    """Same table as :func:`expand_factorial_in_schur`, through the barred-tableau rule."""
    lam = _check_partition(lam, n)
    table = lr_expand(MultiShape((lam,)), n)
    if family != 1:
        table = table.map(lambda p: p.map_vars(lambda v: (v[0], family, v[2]) if v[0] == Y_KIND else v))
    return CoeffTable(n, table.entries, MultiShape((lam,)), "schur")
