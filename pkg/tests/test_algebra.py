import pytest

from rbalg import (Algebra, Coalgebra, FieldMismatch, GF2, GF3, InvalidStructure, Matrix, QQ,
                   Representation, Tensor2, check_associativity, check_bimodule,
                   check_coassociativity, direct_sum, dual_bimodule, dualize, dualize_algebra,
                   mult_operators)

from instances import all_algebras, dual_numbers, one_dim_idempotent, one_dim_null


def test_associativity_trivial_passes():
    assert check_associativity(one_dim_idempotent(QQ)).passed
    assert check_associativity(one_dim_null(QQ)).passed


def test_associativity_counterexample():
    # e1*e1 = e2, e2*e1 = e1, all else 0:
    # (e1 e1) e1 = e2 e1 = e1 but e1 (e1 e1) = e1 e2 = 0
    z, o = 0, 1
    table = [
        [[z, o], [z, z]],
        [[o, z], [z, z]],
    ]
    bad = Algebra(QQ, table, check=False)
    report = check_associativity(bad)
    assert not report.passed
    assert report.failures[0][0] == (1, 1, 1)
    with pytest.raises(InvalidStructure):
        Algebra(QQ, table)


def test_mult_operators():
    a = dual_numbers(GF2)
    zero = Matrix.zeros(GF2, 1, 1)
    l0, r0 = mult_operators(one_dim_null(GF2), (1,))
    assert l0 == zero and r0 == zero
    l, r = mult_operators(a, (0, 0))
    assert l.is_zero and r.is_zero
    # multiplication by x on GF2[x]/(x^2): 1 -> x, x -> 0
    lx, rx = mult_operators(a, (0, 1))
    expected = Matrix(GF2, [[0, 0], [1, 0]])
    assert lx == expected and rx == expected


def test_mult_operators_are_homomorphisms():
    for field in (GF2, GF3):
        for a in (dual_numbers(field), one_dim_idempotent(field)):
            for i in range(a.dim):
                for j in range(a.dim):
                    ei, ej = a.unit_vec(i), a.unit_vec(j)
                    li, _ = mult_operators(a, ei)
                    lj, _ = mult_operators(a, ej)
                    lij, _ = mult_operators(a, a.mul_basis(i, j))
                    assert li * lj == lij
                    _, ri = mult_operators(a, ei)
                    _, rj = mult_operators(a, ej)
                    _, rij = mult_operators(a, a.mul_basis(i, j))
                    assert rj * ri == rij


def test_coassociativity_and_duality():
    zero = Coalgebra.zero(QQ, 2)
    assert check_coassociativity(zero).passed
    a = dual_numbers(QQ)
    c = dualize_algebra(a)
    assert check_coassociativity(c).passed
    # dual of the associativity counterexample fails
    table = [
        [[0, 1], [0, 0]],
        [[1, 0], [0, 0]],
    ]
    bad = Algebra(QQ, table, check=False)
    bad_dual = dualize_algebra(bad)
    assert not check_coassociativity(bad_dual).passed


def test_dualize_round_trip():
    for a in (dual_numbers(QQ), one_dim_idempotent(QQ), direct_sum(dual_numbers(QQ), one_dim_idempotent(QQ))):
        assert dualize(dualize_algebra(a)) == a


def test_dualize_single_coproduct():
    # Delta(e1) = e1 (x) e1 dualizes to e^1 o e^1 = e^1
    c = Coalgebra(QQ, 1, [Tensor2(QQ, 1, {(0, 0): 1})])
    a = dualize(c)
    assert a.mul_basis(0, 0) == (QQ.one,)


def test_direct_sum():
    k = one_dim_idempotent(QQ)
    s = direct_sum(k, k)
    assert s.dim == 2
    assert s.mul_basis(0, 0) == (QQ.one, QQ.zero)
    assert s.mul_basis(1, 1) == (QQ.zero, QQ.one)
    assert s.mul_basis(0, 1) == (QQ.zero, QQ.zero)
    assert check_associativity(s).passed
    with pytest.raises(FieldMismatch):
        direct_sum(k, one_dim_idempotent(GF2))
    # zero-dimensional summand is the identity
    empty = Algebra(QQ, [], check=False)
    assert direct_sum(k, empty) == k


def test_direct_sum_preserves_associativity_on_corpus():
    algebras = all_algebras(GF2, 2)
    assert algebras, "enumeration produced nothing"
    for a in algebras[:6]:
        for b in algebras[:6]:
            assert check_associativity(direct_sum(a, b)).passed


def test_bimodule_adjoint_and_zero():
    for a in (dual_numbers(QQ), one_dim_idempotent(QQ)):
        assert check_bimodule(Representation.adjoint(a)).passed
        assert check_bimodule(Representation.zero_module(a, 2)).passed


def test_bimodule_one_sided_actions():
    # (A, L, 0) is a bimodule for associative A
    for a in (dual_numbers(GF2), one_dim_idempotent(GF3)):
        adj = Representation.adjoint(a)
        zero = Matrix.zeros(a.field, a.dim, a.dim)
        left_only = Representation(a, a.dim, adj.left, [zero] * a.dim, check=False)
        assert check_bimodule(left_only).passed


def test_dual_bimodule():
    a = dual_numbers(QQ)
    adj = Representation.adjoint(a)
    dual = dual_bimodule(adj)
    assert check_bimodule(dual).passed
    # dual of adjoint is (R^T, L^T)
    for i in range(a.dim):
        assert dual.left[i] == adj.right[i].transpose()
        assert dual.right[i] == adj.left[i].transpose()
    # zero actions dualize to zero actions
    zm = Representation.zero_module(a, 3)
    dz = dual_bimodule(zm)
    assert all(m.is_zero for m in dz.left + dz.right)
    # double dual is the original
    dd = dual_bimodule(dual)
    assert dd.left == adj.left and dd.right == adj.right
