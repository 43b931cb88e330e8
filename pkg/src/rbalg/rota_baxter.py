"""Rota-Baxter operators on algebras and coalgebras, representations of
Rota-Baxter algebras, admissible quadruples and semi-direct products.

The defining identity of a Rota-Baxter operator P of weight lam is

    P(a)P(b) = P(aP(b)) + P(P(a)b) + lam P(ab)

and every checker here reports the residual of its identity on basis
tuples; an empty report is a pass.  A single shared weight is carried
by every composite structure.  Construction operations validate their
inputs by default and accept ``check=False`` for the enumeration paths.
"""

from .algebra import Algebra, Representation, check_bimodule
from .errors import DimensionMismatch, InvalidStructure, NotABimodule, NotARBRepresentation
from .linalg import Matrix, vec_is_zero, vec_str, vec_sub
from .reports import FailureLog, combined


class RBAlgebra:
    """Algebra together with a Rota-Baxter operator of a fixed weight."""

    def __init__(self, algebra, operator, weight, check=True):
        self.algebra = algebra
        self.field = algebra.field
        self.operator = operator
        self.weight = algebra.field.normalize(weight)
        if operator.nrows != algebra.dim or operator.ncols != algebra.dim:
            raise DimensionMismatch("operator must act on the algebra")
        if check:
            report = check_rb_algebra(algebra, operator, weight)
            if not report.passed:
                raise InvalidStructure("the operator identity of the stated weight fails", report)

    @property
    def dim(self):
        return self.algebra.dim

    def __repr__(self):
        return f"RBAlgebra(dim={self.dim}, weight={self.field.format(self.weight)})"


def check_rb_algebra(algebra, operator, weight):
    """Residual of the defining identity on every basis pair."""
    if operator.nrows != algebra.dim or operator.ncols != algebra.dim:
        raise DimensionMismatch("operator must act on the algebra")
    field = algebra.field
    lam = field.normalize(weight)
    log = FailureLog()
    p_cols = [operator.column(i) for i in range(algebra.dim)]
    for i in range(algebra.dim):
        pa = p_cols[i]
        for j in range(algebra.dim):
            pb = p_cols[j]
            lhs = algebra.mul_vec(pa, pb)
            t1 = operator.apply(algebra.mul_vec(algebra.unit_vec(i), pb))
            t2 = operator.apply(algebra.mul_vec(pa, algebra.unit_vec(j)))
            t3 = operator.apply(algebra.mul_basis(i, j))
            residual = tuple(field.normalize(l - a - b - lam * c)
                             for l, a, b, c in zip(lhs, t1, t2, t3))
            if not vec_is_zero(field, residual):
                log.add((i + 1, j + 1), vec_str(field, residual))
    return log.report("rb-algebra")


class RBCoalgebra:
    def __init__(self, coalgebra, operator, weight, check=True):
        self.coalgebra = coalgebra
        self.field = coalgebra.field
        self.operator = operator
        self.weight = coalgebra.field.normalize(weight)
        if check:
            report = check_rb_coalgebra(coalgebra, operator, weight)
            if not report.passed:
                raise InvalidStructure("the co-operator identity of the stated weight fails", report)


def check_rb_coalgebra(coalgebra, operator, weight):
    """Residual of (Q(x)Q)D(a) - (Q(x)id)DQ(a) - (id(x)Q)DQ(a) - lam DQ(a)."""
    if operator.nrows != coalgebra.dim or operator.ncols != coalgebra.dim:
        raise DimensionMismatch("operator must act on the coalgebra")
    field = coalgebra.field
    lam = field.normalize(weight)
    log = FailureLog()
    for k in range(coalgebra.dim):
        dq = coalgebra.delta_vec(operator.column(k))
        residual = (coalgebra.delta_basis(k).map(operator, operator)
                    - dq.map(operator, None) - dq.map(None, operator) - dq.scale(lam))
        if not residual.is_zero:
            log.add((k + 1,), repr(residual))
    return log.report("rb-coalgebra")


class RBRepresentation:
    """Bimodule of a Rota-Baxter algebra: (V, l, r, alpha)."""

    def __init__(self, base, rep, check=True):
        if rep.alpha is None:
            raise DimensionMismatch("a Rota-Baxter representation needs the alpha operator")
        self.base = base
        self.rep = rep
        if check:
            report = check_rb_representation(self)
            if not report.passed:
                raise NotARBRepresentation("representation conditions fail", report)


def rb_representation_report(algebra, operator, weight, rep, alpha=None):
    """Residuals of the two compatibility identities of (V, l, r, alpha).

    In matrix form, per basis element a = e_i of the algebra:

        L(P a) alpha - alpha L(P a) - alpha L(a) alpha - lam alpha L(a) = 0
        R(P a) alpha - alpha R(a) alpha - alpha R(P a) - lam alpha R(a) = 0

    where L(x), R(x) are the action matrices of the bimodule.
    """
    field = algebra.field
    lam = field.normalize(weight)
    a_op = rep.alpha if alpha is None else alpha
    if a_op is None:
        raise DimensionMismatch("no alpha operator given")
    log = FailureLog()
    for i in range(algebra.dim):
        pa = operator.column(i)
        lpa, la = rep.left_vec(pa), rep.left[i]
        rpa, ra = rep.right_vec(pa), rep.right[i]
        left_res = lpa * a_op - a_op * lpa - a_op * la * a_op - (a_op * la).scale(lam)
        right_res = rpa * a_op - a_op * ra * a_op - a_op * rpa - (a_op * ra).scale(lam)
        if not left_res.is_zero:
            log.add(("left", i + 1), repr(left_res))
        if not right_res.is_zero:
            log.add(("right", i + 1), repr(right_res))
    return log.report("rb-representation")


def check_rb_representation(rbrep):
    bim = check_bimodule(rbrep.rep)
    if not bim.passed:
        raise NotABimodule("underlying triple is not a bimodule", bim)
    return rb_representation_report(rbrep.base.algebra, rbrep.base.operator,
                                    rbrep.base.weight, rbrep.rep)


class AdmissibleQuadruple:
    """(V, l, r, beta) whose dual (V*, r*, l*, beta*) is a representation."""

    def __init__(self, base, rep, beta, check=True):
        self.base = base
        self.rep = rep
        self.beta = beta
        if check:
            report = check_admissible(self)
            if not report.passed:
                raise InvalidStructure("quadruple is not admissible", report)


def admissible_report(algebra, operator, weight, rep, beta):
    """Residuals of the two admissibility identities for beta.

    Per basis element a = e_i, in matrix form:

        beta R(P a) - R(P a) beta - beta R(a) beta - lam R(a) beta = 0
        beta L(P a) - L(P a) beta - beta L(a) beta - lam L(a) beta = 0
    """
    field = algebra.field
    lam = field.normalize(weight)
    log = FailureLog()
    for i in range(algebra.dim):
        pa = operator.column(i)
        la, ra = rep.left[i], rep.right[i]
        lpa, rpa = rep.left_vec(pa), rep.right_vec(pa)
        r_res = beta * rpa - rpa * beta - beta * ra * beta - (ra * beta).scale(lam)
        l_res = beta * lpa - lpa * beta - beta * la * beta - (la * beta).scale(lam)
        if not r_res.is_zero:
            log.add(("right", i + 1), repr(r_res))
        if not l_res.is_zero:
            log.add(("left", i + 1), repr(l_res))
    return log.report("admissible")


def check_admissible(quad):
    """Admissibility of beta, computed directly and via the dual route.

    The direct route evaluates the two identities above; the dual route
    checks that (V*, r*, l*, beta*) satisfies the representation
    conditions.  Both verdicts are compared; they agree by duality.
    """
    bim = check_bimodule(quad.rep)
    if not bim.passed:
        raise NotABimodule("underlying triple is not a bimodule", bim)
    base = quad.base
    direct = admissible_report(base.algebra, base.operator, base.weight, quad.rep, quad.beta)
    dual_rep = quad.rep.dual()
    dual = rb_representation_report(base.algebra, base.operator, base.weight,
                                    dual_rep, alpha=quad.beta.transpose())
    assert direct.passed == dual.passed, "direct and dual admissibility verdicts diverged"
    return combined("admissible-quadruple", direct, dual)


def q_admissible_report(algebra, operator, weight, q):
    """Admissibility of q on the adjoint representation of (A, P)."""
    rep = Representation.adjoint(algebra)
    return admissible_report(algebra, operator, weight, rep, q)


def check_equivalence(r1, r2, phi):
    """Intertwining check for two representations of the same base.

    phi must be a linear isomorphism with phi l_1(a) = l_2(a) phi,
    phi r_1(a) = r_2(a) phi and phi alpha_1 = alpha_2 phi.  A
    non-invertible phi is reported as a failure.
    """
    log = FailureLog()
    try:
        phi.inverse()
    except Exception:
        log.add(("invertible",), "phi is singular")
        return log.report("equivalence")
    rep1, rep2 = r1.rep, r2.rep
    for i in range(rep1.algebra.dim):
        if not (phi * rep1.left[i] - rep2.left[i] * phi).is_zero:
            log.add(("left", i + 1), repr(phi * rep1.left[i] - rep2.left[i] * phi))
        if not (phi * rep1.right[i] - rep2.right[i] * phi).is_zero:
            log.add(("right", i + 1), repr(phi * rep1.right[i] - rep2.right[i] * phi))
    if not (phi * rep1.alpha - rep2.alpha * phi).is_zero:
        log.add(("alpha",), repr(phi * rep1.alpha - rep2.alpha * phi))
    return log.report("equivalence")


def semidirect_algebra(algebra, rep):
    """Algebra on A + V with (a+u)(b+v) = ab + (l(a)v + u r(b)), V V = 0."""
    n, m = algebra.dim, rep.dim_v
    field = algebra.field
    z = field.zero
    total = n + m
    table = [[[z] * total for _ in range(total)] for _ in range(total)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                table[i][j][k] = algebra.structure[i][j][k]
    for i in range(n):
        li = rep.left[i]
        for v in range(m):
            for w in range(m):
                table[i][n + v][n + w] = li.entry(w, v)
    for j in range(n):
        rj = rep.right[j]
        for u in range(m):
            for w in range(m):
                table[n + u][j][n + w] = rj.entry(w, u)
    return Algebra(field, table, check=False)


def semidirect_product(rbrep, check=True):
    """Semi-direct product (A x V, P + alpha) of a Rota-Baxter algebra.

    The result satisfies the operator identity exactly when the input
    quadruple satisfies the representation conditions; with
    ``check=False`` the candidate is built regardless so both
    directions of that equivalence can be exercised.
    """
    rep = rbrep.rep
    if check:
        bim = check_bimodule(rep)
        if not bim.passed:
            raise NotABimodule("not a bimodule", bim)
        rrep = check_rb_representation(rbrep)
        if not rrep.passed:
            raise NotARBRepresentation("quadruple is not a representation of the base", rrep)
    prod = semidirect_algebra(rbrep.base.algebra, rep)
    op = rbrep.base.operator.block_diag(rep.alpha)
    return RBAlgebra(prod, op, rbrep.base.weight, check=False)
