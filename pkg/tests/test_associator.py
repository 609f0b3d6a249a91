import pytest

from altgt.associator import apply_phi, assoc_coeff, phi_matrix
from altgt.gt import embed
from altgt.partitions import Partition, self_conjugate_partitions
from altgt.scalars import I, ONE, Scalar
from altgt.tableaux import StandardTableau, enumerate_syt, reference_tableau
from altgt.yor import (
    GTVector,
    identity_matrix,
    is_zero_matrix,
    mat_add,
    mat_eq,
    mat_mul,
    rep_matrix,
)


def test_rejects_non_self_conjugate():
    with pytest.raises(ValueError):
        assoc_coeff(Partition((3, 1)), StandardTableau.parse("124/3"))


def test_rejects_shape_mismatch():
    with pytest.raises(ValueError):
        assoc_coeff(Partition((2, 2)), StandardTableau.parse("12/3"))


def test_coefficient_values():
    shape = Partition((3, 1, 1))
    assert assoc_coeff(shape, StandardTableau.parse("123/4/5")) == -ONE
    assert assoc_coeff(shape, StandardTableau.parse("124/3/5")) == ONE
    assert assoc_coeff(Partition((2, 1)), StandardTableau.parse("12/3")) == I


def test_apply_phi_worked_values():
    shape = Partition((2, 1))
    assert apply_phi(shape, GTVector.basis(StandardTableau.parse("12/3"))) == \
        GTVector(shape, {StandardTableau.parse("13/2"): I})
    shape = Partition((3, 1, 1))
    assert apply_phi(shape, GTVector.basis(StandardTableau.parse("124/3/5"))) == \
        GTVector(shape, {StandardTableau.parse("135/2/4"): ONE})
    assert apply_phi(shape, GTVector.basis(StandardTableau.parse("134/2/5"))) == \
        GTVector(shape, {StandardTableau.parse("125/3/4"): -ONE})


def test_phi_matrix_smallest_case():
    zero = Scalar()
    assert phi_matrix(Partition((2, 1))) == [[zero, -I], [I, zero]]


def test_phi_is_an_involution():
    for n in range(3, 8):
        for shape in self_conjugate_partitions(n):
            phi = phi_matrix(shape)
            dim = len(enumerate_syt(shape))
            assert mat_eq(mat_mul(phi, phi), identity_matrix(dim))


def test_phi_anticommutes_with_generators():
    for n in range(3, 7):
        for shape in self_conjugate_partitions(n):
            phi = phi_matrix(shape)
            for i in range(1, n):
                m = rep_matrix(shape, i)
                assert is_zero_matrix(mat_add(mat_mul(m, phi), mat_mul(phi, m)))


def test_coefficient_alternates_on_swaps():
    for shape in (Partition((2, 2)), Partition((3, 1, 1)), Partition((3, 2, 1))):
        n = shape.n
        for t in enumerate_syt(shape):
            for i in range(1, n):
                (r1, c1), (r2, c2) = t.position(i), t.position(i + 1)
                if r1 == r2 or c1 == c2:
                    continue
                assert assoc_coeff(shape, t.swap_adjacent(i)) == -assoc_coeff(shape, t)


def test_anchor_coefficients_along_covers_agree():
    # the smaller and larger member of each self-conjugate cover share the
    # anchor value; spot-check the pairs reachable below n = 9
    pairs = [
        (Partition((2, 1)), Partition((2, 2))),
        (Partition((3, 1, 1)), Partition((3, 2, 1))),
        (Partition((4, 1, 1, 1)), Partition((4, 2, 1, 1))),
        (Partition((3, 3, 2)), Partition((3, 3, 3))),
    ]
    for small, large in pairs:
        c_small = assoc_coeff(small, reference_tableau(small))
        c_large = assoc_coeff(large, reference_tableau(large))
        assert c_small == c_large


def test_cover_compatibility_with_embedding():
    # lifting a tableau vector and applying the intertwiner above equals
    # applying below and lifting, for every cover with the larger side <= 8
    pairs = [
        (Partition((2, 1)), Partition((2, 2))),
        (Partition((3, 1, 1)), Partition((3, 2, 1))),
        (Partition((4, 1, 1, 1)), Partition((4, 2, 1, 1))),
    ]
    for small, large in pairs:
        for t in enumerate_syt(small):
            v = GTVector.basis(t)
            assert apply_phi(large, embed(v, large)) == embed(apply_phi(small, v), large)


def test_eigenspace_split_is_balanced():
    # each transpose pair {T, T'} supplies one +1 and one -1 eigenvector
    for n in range(3, 8):
        for shape in self_conjugate_partitions(n):
            plus = []
            minus = []
            for t in enumerate_syt(shape):
                if t.row_word() > t.conjugate().row_word():
                    continue
                v = GTVector.basis(t)
                pair_plus = v + apply_phi(shape, v)
                pair_minus = v - apply_phi(shape, v)
                assert apply_phi(shape, pair_plus) == pair_plus
                assert apply_phi(shape, pair_minus) == -pair_minus
                plus.append(pair_plus)
                minus.append(pair_minus)
            dim = len(enumerate_syt(shape))
            assert len(plus) == len(minus) == dim // 2
