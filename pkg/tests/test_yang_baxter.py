import itertools

import pytest

from rbalg import (Algebra, BilinearForm, GF2, GF3, Matrix, NotQAdmissible, OOperatorData,
                   PiSpec, QQ, RBAlgebra, RElement, Representation, Tensor2, Tensor3,
                   admissibility_conditions, adjoint_wrt, aybe_residual, check_o_operator,
                   check_rb_asi_bialgebra, check_weak_o_operator, coboundary_conditions,
                   coboundary_delta, connes_check, connes_correspondence, cons2_bialgebra,
                   direct_sum, frobenius_rb_correspondence, lift_o_operator, omega_from_r,
                   operator_form_check, pi_admissible_check, r_from_p,
                   semidirect_dual_admissibility, check_rb_algebra, FrobeniusData,
                   LiftPreconditionFailed)

from instances import (all_algebras, all_matrices, antisymmetric_tensors, dual_number_rb,
                       dual_numbers, one_dim_idempotent, rb_operators, scalar_rb)


def antisym(field, dim, c, i, j):
    return RElement(Tensor2(field, dim, {(i, j): c, (j, i): field.normalize(-c)}))


def test_coboundary_delta_trivial():
    a = dual_numbers(QQ)
    assert all(t.is_zero for t in coboundary_delta(a, RElement.zero(QQ, 2)).coproducts)
    one = one_dim_idempotent(QQ)
    r = RElement(Tensor2(QQ, 1, {(0, 0): 1}))
    assert all(t.is_zero for t in coboundary_delta(one, r).coproducts)


def test_coboundary_delta_on_dual_numbers():
    # r = e1 (x) e2 - e2 (x) e1 gives D(1) = 0, D(x) = -2 x (x) x
    a = dual_numbers(QQ)
    r = antisym(QQ, 2, QQ.one, 0, 1)
    cop = coboundary_delta(a, r)
    assert cop.delta_basis(0).is_zero
    assert cop.delta_basis(1) == Tensor2(QQ, 2, {(1, 1): QQ.parse("-2")})


def test_coboundary_delta_is_linear_in_r():
    a = dual_numbers(QQ)
    r1 = RElement(Tensor2(QQ, 2, {(0, 1): 3, (1, 1): 1}))
    r2 = RElement(Tensor2(QQ, 2, {(1, 0): 2, (0, 0): 5}))
    s = RElement(r1.tensor + r2.tensor)
    c1, c2, cs = (coboundary_delta(a, x) for x in (r1, r2, s))
    for k in range(2):
        assert cs.delta_basis(k) == c1.delta_basis(k) + c2.delta_basis(k)


def test_aybe_residual_examples():
    one = one_dim_idempotent(QQ)
    assert aybe_residual(one, RElement.zero(QQ, 1)).is_zero
    r = RElement(Tensor2(QQ, 1, {(0, 0): 1}))
    assert aybe_residual(one, r) == Tensor3(QQ, 1, {(0, 0, 0): 1})


def test_aybe_residual_is_quadratic():
    a = dual_numbers(QQ)
    r = Tensor2(QQ, 2, {(0, 1): 1, (1, 0): 2, (0, 0): 1})
    c = QQ.parse("3")
    assert aybe_residual(a, RElement(r.scale(c))) == aybe_residual(a, RElement(r)).scale(c * c)


def coboundary_direct_sum_instance():
    """Two coboundary halves glued with the projection operators."""
    a = dual_numbers(QQ)
    r1 = Tensor2(QQ, 2, {(0, 1): 1, (1, 0): -1})
    r2 = Tensor2(QQ, 2, {(0, 1): 2, (1, 0): -2})
    total = direct_sum(a, a)
    r = RElement(r1.embedded(4, 0) + r2.embedded(4, 2))
    z, o = QQ.zero, QQ.one
    proj_a = Matrix(QQ, [[o if (i == j and i < 2) else z for j in range(4)] for i in range(4)])
    proj_b = Matrix(QQ, [[o if (i == j and i >= 2) else z for j in range(4)] for i in range(4)])
    return total, proj_a, proj_b, r


def test_coboundary_conditions_direct_sum():
    total, proj_a, proj_b, r = coboundary_direct_sum_instance()
    lam = QQ.parse("-1")
    report = coboundary_conditions(total, proj_a, proj_b, lam, r)
    assert report.passed
    # zero element passes trivially
    assert coboundary_conditions(total, proj_a, proj_b, lam, RElement.zero(QQ, 4)).passed


def test_coboundary_conditions_needs_admissible_base():
    a = dual_numbers(QQ)
    q_bad = Matrix(QQ, [[0, 1], [0, 0]])
    with pytest.raises(NotQAdmissible):
        coboundary_conditions(a, Matrix.zeros(QQ, 2, 2), q_bad, QQ.zero,
                              RElement.zero(QQ, 2))


def test_antisymmetric_balance_always_holds():
    # the (r + flip r) residual family vanishes for antisymmetric r
    a = dual_numbers(QQ)
    r = antisym(QQ, 2, QQ.parse("5"), 0, 1)
    p = dual_number_rb(QQ).operator
    q = p
    report = coboundary_conditions(a, p, q, QQ.zero, r)
    assert report.sub("antisymmetry-balance").passed


def test_admissibility_conditions():
    total, proj_a, proj_b, r = coboundary_direct_sum_instance()
    # the split element leaves the residual r1 - r2 across the blocks,
    # so a coboundary instance need not solve the admissible equation
    report = admissibility_conditions(r, proj_a, proj_b)
    assert not report.passed
    r1 = Tensor2(QQ, 2, {(0, 1): 1, (1, 0): -1})
    r2 = r1.scale(QQ.parse("2"))
    residual = r.tensor.map(proj_a, None) - r.tensor.map(None, proj_b)
    assert residual == r1.embedded(4, 0) - r2.embedded(4, 2)
    assert admissibility_conditions(RElement.zero(QQ, 4), proj_a, proj_b).passed


def test_operator_form_exhaustive_dual_numbers():
    # tensor form and operator form agree for every antisymmetric r and
    # every Q on the weight-0 operators of the dual numbers over GF(2);
    # the equivalence is asserted inside the call.
    a = dual_numbers(GF2)
    tensors = antisymmetric_tensors(GF2, 2)
    assert len(tensors) == 8            # char 2: symmetric grids
    for p in rb_operators(a, GF2.zero):
        rb = RBAlgebra(a, p, GF2.zero)
        for t in tensors:
            for q in all_matrices(GF2, 2):
                operator_form_check(rb, q, RElement(t))


def test_connes_check_small_cases():
    one = one_dim_idempotent(QQ)
    omega = BilinearForm(Matrix.zeros(QQ, 1, 1), BilinearForm.ANTISYMMETRIC)
    assert connes_check(omega, one).passed
    null2 = Algebra.zero(QQ, 2)
    for c in (QQ.one, QQ.parse("-7")):
        omega = BilinearForm(Matrix(QQ, [[0, c], [QQ.normalize(-c), 0]]),
                             BilinearForm.ANTISYMMETRIC)
        assert connes_check(omega, null2).passed


def test_omega_from_r_inverse_pairing():
    r = RElement(Tensor2(QQ, 2, {(0, 1): 1, (1, 0): -1}))
    omega = omega_from_r(r)
    assert omega.symmetry == BilinearForm.ANTISYMMETRIC
    # w(r(a*), b*) pairs back to the identity: gram is inverse transpose
    assert omega.gram * r.to_map().transpose() == Matrix.identity(QQ, 2)


def test_connes_correspondence_smoke():
    a = dual_numbers(GF3)
    r = antisym(GF3, 2, GF3.one, 0, 1)
    for p in (Matrix.zeros(GF3, 2, 2), dual_number_rb(GF3).operator):
        rb = RBAlgebra(a, p, GF3.zero)
        for q in (Matrix.zeros(GF3, 2, 2), p):
            connes_correspondence(rb, q, r)   # asserts internally


def test_frobenius_correspondence_zero_cases():
    base = dual_number_rb(QQ)
    gram = Matrix(QQ, [[1, 1], [1, 0]])
    frob = FrobeniusData(base, BilinearForm(gram, BilinearForm.SYMMETRIC))
    assert frobenius_rb_correspondence(frob, RElement.zero(QQ, 2)).passed
    zero_base = RBAlgebra(base.algebra, Matrix.zeros(QQ, 2, 2), QQ.zero)
    frob0 = FrobeniusData(zero_base, BilinearForm(gram, BilinearForm.SYMMETRIC))
    r0 = r_from_p(frob0)
    assert r0.tensor.is_zero
    cop = coboundary_delta(base.algebra, r0)
    quint = check_rb_asi_bialgebra(
        __import__("rbalg").RBASIBialgebra(base.algebra, cop, zero_base.operator,
                                           -zero_base.operator, QQ.zero, check=False))
    assert quint.passed


def search_frobenius_negative_adjoint(field):
    """All (algebra, form, weight-0 P != 0) with adjoint(P) = -P, dim 2."""
    found = []
    for a in all_algebras(field, 2):
        for gram in all_matrices(field, 2):
            if gram.transpose() != gram:
                continue
            form = BilinearForm(gram, BilinearForm.SYMMETRIC)
            try:
                g_inv = gram.inverse()
            except Exception:
                continue
            from rbalg.bialgebra import frobenius_report
            if not frobenius_report(a, form).passed:
                continue
            for p in rb_operators(a, field.zero):
                if p.is_zero:
                    continue
                if (adjoint_wrt(form, p) + p).is_zero:
                    found.append((a, form, p))
    return found


def test_frobenius_correspondence_found_by_search():
    found = search_frobenius_negative_adjoint(GF3)
    assert found, "search produced no instance with adjoint(P) = -P"
    for a, form, p in found[:10]:
        base = RBAlgebra(a, p, GF3.zero)
        frob = FrobeniusData(base, form)
        r = r_from_p(frob)
        assert r.antisymmetric
        assert frobenius_rb_correspondence(frob, r).passed
        cop = coboundary_delta(a, r)
        from rbalg import RBASIBialgebra
        quint = RBASIBialgebra(a, cop, p, p.scale(GF3.normalize(-GF3.one)), GF3.zero,
                               check=False)
        assert check_rb_asi_bialgebra(quint).passed


def test_weak_and_full_o_operators():
    for rb in (dual_number_rb(GF2), dual_number_rb(QQ), scalar_rb(dual_numbers(QQ), QQ.one)):
        field = rb.field
        n = rb.dim
        zero = Matrix.zeros(field, n, n)
        adj = Representation.adjoint(rb.algebra, alpha=rb.operator)
        # T = 0 with any compatible alpha is weakly admissible
        d0 = OOperatorData(rb, adj, zero)
        assert check_weak_o_operator(d0).passed
        # T = id against the one-sided actions
        left_only = Representation(rb.algebra, n, adj.left, [zero] * n,
                                   alpha=rb.operator, check=False)
        right_only = Representation(rb.algebra, n, [zero] * n, adj.right,
                                    alpha=rb.operator, check=False)
        ident = Matrix.identity(field, n)
        for rep in (left_only, right_only):
            assert check_o_operator(OOperatorData(rb, rep, ident)).passed
        # T = P against the adjoint actions at weight zero
        if rb.weight == field.zero:
            assert check_o_operator(OOperatorData(rb, adj, rb.operator)).passed


def test_semidirect_dual_admissibility_canonical_choice():
    # beta = -alpha - lam, Q = -P - lam imposes nothing extra
    for rb in (dual_number_rb(QQ), scalar_rb(dual_numbers(QQ), QQ.parse("2"))):
        field = rb.field
        adj = Representation.adjoint(rb.algebra, alpha=rb.operator)
        neg = field.normalize(-field.one)
        beta = adj.alpha.scale(neg) - Matrix.identity(field, 2).scale(rb.weight)
        q = rb.operator.scale(neg) - Matrix.identity(field, 2).scale(rb.weight)
        report = semidirect_dual_admissibility(rb, adj, q, adj.alpha, beta)
        assert report.passed


def test_semidirect_dual_admissibility_exhaustive_dim1():
    # every (Q, alpha, beta) on a 1-dim module over GF2: the three
    # verdicts agree (asserted inside the call)
    for table in ([[[0]]], [[[1]]]):
        a = Algebra(GF2, table)
        mats = list(all_matrices(GF2, 1))
        for lam in GF2.elements():
            for p in rb_operators(a, lam):
                rb = RBAlgebra(a, p, lam)
                rep0 = Representation.adjoint(a)
                for q, alpha, beta in itertools.product(mats, repeat=3):
                    semidirect_dual_admissibility(rb, rep0.with_alpha(alpha), q, alpha, beta)


def test_lift_zero_operator():
    rb = dual_number_rb(QQ)
    adj = Representation.adjoint(rb.algebra, alpha=rb.operator)
    beta = rb.operator.scale(QQ.parse("-1"))
    q = rb.operator.scale(QQ.parse("-1"))
    result = lift_o_operator(OOperatorData(rb, adj, Matrix.zeros(QQ, 2, 2)), q, beta)
    assert result.r.tensor.is_zero
    assert result.bialgebra is not None
    assert check_rb_asi_bialgebra(result.bialgebra).passed


def test_lift_intertwining_precondition():
    rb = dual_number_rb(QQ)
    adj = Representation.adjoint(rb.algebra, alpha=rb.operator)
    beta = rb.operator.scale(QQ.parse("-1"))
    q = Matrix.identity(QQ, 2)           # T beta != Q T for T = id
    with pytest.raises(LiftPreconditionFailed):
        lift_o_operator(OOperatorData(rb, adj, Matrix.identity(QQ, 2)), q, beta)


def canonical_lift_instances(rb):
    """The identity and operator lifts of a weight-zero base."""
    field = rb.field
    n = rb.dim
    zero = Matrix.zeros(field, n, n)
    ident = Matrix.identity(field, n)
    adj = Representation.adjoint(rb.algebra, alpha=rb.operator)
    left_only = Representation(rb.algebra, n, adj.left, [zero] * n,
                               alpha=rb.operator, check=False)
    right_only = Representation(rb.algebra, n, [zero] * n, adj.right,
                                alpha=rb.operator, check=False)
    return [
        OOperatorData(rb, left_only, ident),
        OOperatorData(rb, right_only, ident),
        OOperatorData(rb, adj, rb.operator),
    ]


def test_canonical_lifts_give_bialgebras():
    for rb in (dual_number_rb(QQ), dual_number_rb(GF2), dual_number_rb(GF3)):
        field = rb.field
        n = rb.dim
        for d in canonical_lift_instances(rb):
            b = cons2_bialgebra(d)
            assert check_rb_asi_bialgebra(b).passed
            assert b.dim == 2 * n
    # the identity lift produces sum_i (e_i (x) e^i - e^i (x) e_i)
    rb = dual_number_rb(QQ)
    d = canonical_lift_instances(rb)[0]
    neg = QQ.parse("-1")
    beta = rb.operator.scale(neg)
    result = lift_o_operator(d, rb.operator.scale(neg), beta)
    expected = Tensor2(QQ, 4, {(0, 2): 1, (1, 3): 1, (2, 0): -1, (3, 1): -1})
    assert result.r.tensor == expected


def test_pi_scalar_weight_zero():
    # theta = -1 at weight zero: any representation of the base passes
    rb = dual_number_rb(QQ)
    adj = Representation.adjoint(rb.algebra, alpha=rb.operator)
    pi = PiSpec(QQ, PiSpec.SCALAR, QQ.parse("-1"))
    assert pi_admissible_check(pi, rb, adj).passed


def test_pi_neg_shift_with_theta_minus_lambda():
    # -x + theta with theta = -lam: the shifted family collapses
    rb = scalar_rb(dual_numbers(QQ), QQ.parse("2"))
    adj = Representation.adjoint(rb.algebra, alpha=rb.operator)
    pi = PiSpec(QQ, PiSpec.NEG_SHIFT, QQ.parse("-2"))
    assert pi_admissible_check(pi, rb, adj).passed


def test_pi_inverse_on_scalar_operator():
    # e.e = e with P = -lam id: the inverse family needs theta = lam^2
    one = one_dim_idempotent(GF3)
    rb = scalar_rb(one, GF3.one)          # P = -1 = 2, invertible
    adj = Representation.adjoint(one, alpha=rb.operator)
    good = PiSpec(GF3, PiSpec.INVERSE, GF3.one)      # theta = lam^2 = 1
    assert pi_admissible_check(good, rb, adj).passed
    bad = PiSpec(GF3, PiSpec.INVERSE, GF3.normalize(2))
    assert not pi_admissible_check(bad, rb, adj).passed


def test_pi_spec_validation():
    with pytest.raises(ValueError):
        PiSpec(QQ, PiSpec.SCALAR, QQ.parse("2"))
    with pytest.raises(ValueError):
        PiSpec(QQ, PiSpec.NEG_SHIFT, QQ.zero)
    with pytest.raises(ValueError):
        PiSpec(QQ, PiSpec.INVERSE, QQ.zero)
