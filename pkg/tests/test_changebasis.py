import pytest

from factschur.changebasis import (
    ChangeBasisError,
    c_coeff_det,
    complement,
    complementary_index_set,
    compose_via_classical,
    d_coeff_det,
    d_coeff_dual,
    e_coefficient,
    e_expand,
    expand_factorial_in_schur,
    expand_schur_in_factorial,
    index_set_to_partition,
    is_identity,
    matmul,
    matrix_AB,
    partition_to_index_set,
    rho_statistic,
    submatrix,
    tableau_factorial_in_schur,
)
from factschur.lrrule import factorial_schur, lr_coefficient, schur
from factschur.polyring import ONE, ZERO, determinant, poly_sum, y
from factschur.tableaux import MultiShape, conjugate, partitions_up_to


def box_partitions(n, m):
    return [nu for nu in partitions_up_to(n * m, n, m)]


# -- complements and index sets ------------------------------------------------------

def test_complement_examples():
    assert complement((5, 3, 1), 4, 8) == (4, 4, 4, 3, 3, 2, 2, 1)
    assert complement((), 3, 2) == (3, 3)
    assert complement((2, 2), 2, 2) == ()
    with pytest.raises(ChangeBasisError):
        complement((3,), 2, 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_complement_involution_and_area(n, m):
    for nu in box_partitions(n, m):
        nuc = complement(nu, n, m)
        assert sum(nu) + sum(nuc) == n * m
        assert complement(nuc, m, n) == nu
        # complement of the conjugate is the conjugate of the complement
        assert complement(conjugate(nu), m, n) == conjugate(nuc)


def test_index_set_examples():
    assert partition_to_index_set((), 2, 2) == (0, 1)
    assert partition_to_index_set((2, 1), 2, 2) == (1, 3)
    assert partition_to_index_set((2, 2), 2, 2) == (2, 3)
    assert index_set_to_partition((1, 3)) == (2, 1)
    with pytest.raises(ChangeBasisError):
        partition_to_index_set((3,), 2, 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_index_set_properties(n, m):
    total = n + m
    for nu in box_partitions(n, m):
        index_set = partition_to_index_set(nu, n, m)
        assert index_set_to_partition(index_set) == nu
        # the counting statistic is |nu|; the 1-based sum (i_k - k) is |nu| - n
        assert rho_statistic(index_set, total) == sum(nu)
        assert sum(i - k for k, i in enumerate(index_set, start=1)) == sum(nu) - n
        # the complementary index set belongs to the complementary partition
        assert complementary_index_set(index_set, total) == partition_to_index_set(complement(nu, n, m), m, n)


# -- the A and B matrices --------------------------------------------------------------

def test_matrix_small():
    A, B = matrix_AB(1)
    assert A == [[ONE]] and B == [[ONE]]
    A, B = matrix_AB(2)
    assert A == [[ONE, ZERO], [y(1, 1), ONE]]
    assert B == [[ONE, ZERO], [-y(1, 1), ONE]]
    assert is_identity(matmul(A, B))


@pytest.mark.parametrize("N", range(1, 7))
def test_matrices_inverse(N):
    A, B = matrix_AB(N, family=2)
    assert is_identity(matmul(A, B))
    assert is_identity(matmul(B, A))


# -- coefficients ----------------------------------------------------------------------

def test_coefficient_examples():
    assert c_coeff_det((1,), (), 1) == y(1, 1)
    assert d_coeff_det((1,), (), 1) == -y(1, 1)
    assert d_coeff_dual((1,), (), 1) == -y(1, 1)
    for lam in [(), (1,), (2, 1), (3, 1, 1)]:
        assert c_coeff_det(lam, lam, 3) == ONE
        assert d_coeff_det(lam, lam, 3) == ONE
        assert d_coeff_dual(lam, lam, 3) == ONE


def test_column_indexed_variable_count():
    # s_(1,1)(x1, x2) = x1 x2 has constant term y1_1 y1_2 in the factorial basis
    assert d_coeff_det((1, 1), (), 2) == y(1, 1) * y(1, 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_minors_of_A_and_B(n):
    m = 4
    A, B = matrix_AB(n + m)
    for lam in partitions_up_to(4, n, m):
        rows = partition_to_index_set(lam, n, m)
        for mu in partitions_up_to(sum(lam), n, m):
            cols = partition_to_index_set(mu, n, m)
            assert c_coeff_det(lam, mu, n) == determinant(submatrix(A, rows, cols))
            assert d_coeff_det(lam, mu, n) == determinant(submatrix(B, rows, cols))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_complementary_minor_identity(n):
    # d(lam, mu) = (-1)^(rho(I_lam) + rho(I_mu)) det A[I'_mu, I'_lam]
    m = 4
    total = n + m
    A, _ = matrix_AB(total)
    for lam in partitions_up_to(4, n, m):
        i_lam = partition_to_index_set(lam, n, m)
        for mu in partitions_up_to(sum(lam), n, m):
            i_mu = partition_to_index_set(mu, n, m)
            sign = (-1) ** (rho_statistic(i_lam, total) + rho_statistic(i_mu, total))
            minor = determinant(
                submatrix(A, complementary_index_set(i_mu, total), complementary_index_set(i_lam, total))
            )
            assert d_coeff_det(lam, mu, n) == sign * minor


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dual_formula_is_m_stable(n):
    for lam in partitions_up_to(4, n):
        for mu in partitions_up_to(sum(lam), n):
            ref = d_coeff_det(lam, mu, n)
            low = max(lam[0] if lam else 0, mu[0] if mu else 0)
            for m in range(low, low + 3):
                assert d_coeff_dual(lam, mu, n, m) == ref
    with pytest.raises(ChangeBasisError):
        d_coeff_dual((3,), (), 2, m=2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_inverse_relation(n):
    for lam in partitions_up_to(4, n):
        for mu in partitions_up_to(4, n):
            total = poly_sum(
                c_coeff_det(lam, nu, n) * d_coeff_det(nu, mu, n) for nu in partitions_up_to(sum(lam), n)
            )
            assert total == (ONE if lam == mu else ZERO)


# -- tables ------------------------------------------------------------------------------

def test_table_examples():
    assert expand_factorial_in_schur((), 2).entries == {(): ONE}
    assert expand_schur_in_factorial((), 2).entries == {(): ONE}
    assert expand_factorial_in_schur((1,), 1).entries == {(1,): ONE, (): y(1, 1)}
    assert expand_schur_in_factorial((1,), 1).entries == {(1,): ONE, (): -y(1, 1)}
    assert expand_schur_in_factorial((2, 1), 2, method="dual") == expand_schur_in_factorial((2, 1), 2)
    with pytest.raises(ChangeBasisError):
        expand_schur_in_factorial((1,), 1, method="bogus")


@pytest.mark.parametrize("n", [1, 2, 3])
def test_tables_reconstruct(n):
    for lam in partitions_up_to(4, n):
        forward = expand_factorial_in_schur(lam, n)
        assert forward == tableau_factorial_in_schur(lam, n)
        assert poly_sum(c * schur(mu, n) for mu, c in forward.entries.items()) == factorial_schur(lam, n)
        backward = expand_schur_in_factorial(lam, n, family=2)
        assert poly_sum(d * factorial_schur(mu, n, 2) for mu, d in backward.entries.items()) == schur(lam, n)


def test_e_coefficient_basis_identity():
    for lam in partitions_up_to(3, 2):
        shape = MultiShape((lam,))
        for mu in partitions_up_to(3, 2):
            assert e_coefficient(shape, mu, 2, 1) == (ONE if mu == lam else ZERO)


def test_e_expand_reconstructs_product():
    n = 2
    shape = MultiShape.of((2, 1), (1,))
    table = e_expand(shape, n, 2)
    product = factorial_schur((2, 1), n, 1) * factorial_schur((1,), n, 2)
    assert poly_sum(c * factorial_schur(mu, n, 2) for mu, c in table.entries.items()) == product
    with pytest.raises(ChangeBasisError):
        e_expand(shape, n, 3)


def test_compose_via_classical():
    shape = MultiShape.of((2, 1), (1, 1))
    assert compose_via_classical(shape, (2, 2), 2) == y(1, 1) + y(1, 2) + y(1, 3) + y(2, 1)
    empty = MultiShape(((), ()))
    assert compose_via_classical(empty, (), 2) == ONE
    assert compose_via_classical(empty, (1,), 2) == ZERO
    for mu in partitions_up_to(5, 2):
        assert compose_via_classical(MultiShape.of((2,), (1, 1)), mu, 2) == lr_coefficient(
            MultiShape.of((2,), (1, 1)), mu, 2
        )
    with pytest.raises(ChangeBasisError):
        compose_via_classical(MultiShape.of((1,)), (1,), 2)
