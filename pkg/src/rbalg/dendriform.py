"""Dendriform algebras, their Rota-Baxter operators, 2-cocycles, Manin
triples on A + A*, and the bialgebras they induce.

A dendriform algebra splits one associative product into two parts
subject to

    (a < b) < c = a < (b < c + b > c)
    (a > b) < c = a > (b < c)
    (a < b + a > b) > c = a > (b > c)

so that a * b = a < b + a > b is associative and (A, L_>, R_<) is a
bimodule over the sum.  A weight-zero Rota-Baxter operator on an
associative algebra induces a dendriform structure via
a > b = P(a) b, a < b = a P(b).
"""

from .algebra import Algebra, BilinearForm, Representation
from .errors import DimensionMismatch, InvalidStructure, NotDendriform, NotWeightZero
from .linalg import Matrix, vec_add, vec_is_zero, vec_str
from .reports import FailureLog, combined
from .rota_baxter import RBAlgebra, check_rb_algebra
from .yang_baxter import OOperatorData, cons2_bialgebra


class DendriformAlgebra:
    """Two structure-constant tables, one per partial product."""

    def __init__(self, field, prec, succ, check=True):
        self.field = field
        self.dim = len(prec)
        self.prec = _normalize_table(field, prec, self.dim)
        self.succ = _normalize_table(field, succ, self.dim)
        if check:
            report = check_dendriform(self)
            if not report.passed:
                raise NotDendriform("dendriform axioms fail", report)

    @classmethod
    def zero(cls, field, dim):
        z = field.zero
        empty = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
        return cls(field, empty, empty, check=False)

    def prec_basis(self, i, j):
        return self.prec[i][j]

    def succ_basis(self, i, j):
        return self.succ[i][j]

    def prec_vec(self, x, y):
        return _table_mul(self.field, self.prec, x, y, self.dim)

    def succ_vec(self, x, y):
        return _table_mul(self.field, self.succ, x, y, self.dim)

    def star_vec(self, x, y):
        return vec_add(self.field, self.prec_vec(x, y), self.succ_vec(x, y))

    def unit_vec(self, i):
        return tuple(self.field.one if k == i else self.field.zero for k in range(self.dim))


def _normalize_table(field, table, dim):
    out = tuple(tuple(tuple(field.normalize(v) for v in row) for row in plane) for plane in table)
    if len(out) != dim or any(len(pl) != dim or any(len(r) != dim for r in pl) for pl in out):
        raise DimensionMismatch("structure tables must be n x n x n")
    return out


def _table_mul(field, table, x, y, dim):
    nrm = field.normalize
    out = [field.zero] * dim
    for i, xi in enumerate(x):
        if xi == field.zero:
            continue
        for j, yj in enumerate(y):
            if yj == field.zero:
                continue
            c = xi * yj
            row = table[i][j]
            for k in range(dim):
                if row[k] != field.zero:
                    out[k] = out[k] + c * row[k]
    return tuple(nrm(v) for v in out)


def check_dendriform(d):
    """Residuals of the three splitting axioms on all basis triples."""
    field = d.field
    log = FailureLog()
    for i in range(d.dim):
        ei = d.unit_vec(i)
        for j in range(d.dim):
            ej = d.unit_vec(j)
            pij = d.prec_basis(i, j)
            sij = d.succ_basis(i, j)
            star_ij = vec_add(field, pij, sij)
            for k in range(d.dim):
                ek = d.unit_vec(k)
                star_jk = vec_add(field, d.prec_basis(j, k), d.succ_basis(j, k))
                r1 = tuple(field.normalize(a - b) for a, b in zip(
                    d.prec_vec(pij, ek), d.prec_vec(ei, star_jk)))
                if not vec_is_zero(field, r1):
                    log.add(("inner", i + 1, j + 1, k + 1), vec_str(field, r1))
                r2 = tuple(field.normalize(a - b) for a, b in zip(
                    d.prec_vec(sij, ek), d.succ_vec(ei, d.prec_basis(j, k))))
                if not vec_is_zero(field, r2):
                    log.add(("middle", i + 1, j + 1, k + 1), vec_str(field, r2))
                r3 = tuple(field.normalize(a - b) for a, b in zip(
                    d.succ_vec(star_ij, ek), d.succ_vec(ei, d.succ_basis(j, k))))
                if not vec_is_zero(field, r3):
                    log.add(("outer", i + 1, j + 1, k + 1), vec_str(field, r3))
    return log.report("dendriform")


def associated_algebra(d):
    """The associative sum a * b = a < b + a > b."""
    report = check_dendriform(d)
    if not report.passed:
        raise NotDendriform("not a dendriform algebra", report)
    n = d.dim
    table = [[[d.field.normalize(d.prec[i][j][k] + d.succ[i][j][k])
               for k in range(n)] for j in range(n)] for i in range(n)]
    return Algebra(d.field, table, check=False)


def dendriform_rep(d, algebra=None, alpha=None):
    """(A, L_>, R_<) as a bimodule over the associated algebra."""
    star = algebra if algebra is not None else associated_algebra(d)
    n = d.dim
    left = [Matrix(d.field, [[d.succ[i][j][k] for j in range(n)] for k in range(n)])
            for i in range(n)]
    right = [Matrix(d.field, [[d.prec[i][j][k] for i in range(n)] for k in range(n)])
             for j in range(n)]
    return Representation(star, n, left, right, alpha=alpha, check=False)


class RBDendriform:
    def __init__(self, dend, operator, weight, check=True):
        self.dend = dend
        self.field = dend.field
        self.operator = operator
        self.weight = dend.field.normalize(weight)
        if operator.nrows != dend.dim or operator.ncols != dend.dim:
            raise DimensionMismatch("operator must act on the dendriform algebra")
        if check:
            report = check_rb_dendriform(self)
            if not report.passed:
                raise InvalidStructure("operator identity fails on a partial product", report)


def check_rb_dendriform(r):
    """The operator identity for both partial products, per basis pair.

    Passing makes the associated sum a Rota-Baxter algebra of the same
    weight, which is asserted.
    """
    d = r.dend
    dend_report = check_dendriform(d)
    if not dend_report.passed:
        raise NotDendriform("not a dendriform algebra", dend_report)
    field = d.field
    p = r.operator
    lam = r.weight
    log = FailureLog()
    for i in range(d.dim):
        pa = p.column(i)
        ei = d.unit_vec(i)
        for j in range(d.dim):
            pb = p.column(j)
            ej = d.unit_vec(j)
            for tag, mul in (("prec", d.prec_vec), ("succ", d.succ_vec)):
                lhs = mul(pa, pb)
                t1 = p.apply(mul(pa, ej))
                t2 = p.apply(mul(ei, pb))
                t3 = p.apply(mul(ei, ej))
                res = tuple(field.normalize(x - a - b - lam * c)
                            for x, a, b, c in zip(lhs, t1, t2, t3))
                if not vec_is_zero(field, res):
                    log.add((tag, i + 1, j + 1), vec_str(field, res))
    report = log.report("rb-dendriform")
    if report.passed:
        star = associated_algebra(d)
        assert check_rb_algebra(star, p, lam).passed, \
            "partial products pass but the associated sum fails"
    return report


def induced_dendriform(a_rb):
    """Weight-zero splitting a > b = P(a) b, a < b = a P(b)."""
    if a_rb.weight != a_rb.field.zero:
        raise NotWeightZero("the induced splitting needs weight zero")
    algebra = a_rb.algebra
    p = a_rb.operator
    n = algebra.dim
    prec = [[algebra.mul_vec(algebra.unit_vec(i), p.column(j)) for j in range(n)]
            for i in range(n)]
    succ = [[algebra.mul_vec(p.column(i), algebra.unit_vec(j)) for j in range(n)]
            for i in range(n)]
    dend = DendriformAlgebra(algebra.field, prec, succ, check=False)
    return RBDendriform(dend, p, a_rb.weight)


def check_two_cocycle(form, d):
    """The 2-cocycle identity B(a*b, c) = B(b, c < a) + B(a, b > c)."""
    if form.symmetry != BilinearForm.SYMMETRIC:
        raise InvalidStructure("a 2-cocycle must be a symmetric form")
    field = d.field
    log = FailureLog()
    for i in range(d.dim):
        ei = d.unit_vec(i)
        for j in range(d.dim):
            ej = d.unit_vec(j)
            star_ij = vec_add(field, d.prec_basis(i, j), d.succ_basis(i, j))
            for k in range(d.dim):
                ek = d.unit_vec(k)
                lhs = form.value(star_ij, ek)
                rhs = field.normalize(form.value(ej, d.prec_basis(k, i))
                                      + form.value(ei, d.succ_basis(j, k)))
                if lhs != rhs:
                    log.add((i + 1, j + 1, k + 1),
                            f"{field.format(lhs)} != {field.format(rhs)}")
    return log.report("two-cocycle")


def check_cocycle_pairing(form, d):
    """The sharper identity B(a < b, c) = B(a, b > c) satisfied by
    Frobenius-induced splittings."""
    field = d.field
    log = FailureLog()
    for i in range(d.dim):
        ei = d.unit_vec(i)
        for j in range(d.dim):
            for k in range(d.dim):
                ek = d.unit_vec(k)
                lhs = form.value(d.prec_basis(i, j), ek)
                rhs = form.value(ei, d.succ_basis(j, k))
                if lhs != rhs:
                    log.add((i + 1, j + 1, k + 1),
                            f"{field.format(lhs)} != {field.format(rhs)}")
    return log.report("cocycle-pairing")


def check_manin_triple(d, form, split_dim):
    """Manin triple of dendriform algebras on a block-split space.

    Verifies (a) both blocks are closed under either partial product,
    (b) the splitting is the block layout (structural), (c) both blocks
    are isotropic for the form, (d) the form is a nondegenerate
    2-cocycle.
    """
    field = d.field
    n = split_dim
    if d.dim <= n:
        raise DimensionMismatch("split must leave a nonempty complement")
    closure = FailureLog()
    blocks = [range(0, n), range(n, d.dim)]
    for label, block in zip(("first", "second"), blocks):
        inside = set(block)
        for i in block:
            for j in block:
                for tag, tab in (("prec", d.prec), ("succ", d.succ)):
                    for k in range(d.dim):
                        if k not in inside and tab[i][j][k] != field.zero:
                            closure.add((label, tag, i + 1, j + 1, k + 1),
                                        field.format(tab[i][j][k]))
    isotropy = FailureLog()
    for label, block in zip(("first", "second"), blocks):
        for i in block:
            for j in block:
                v = form.basis_value(i, j)
                if v != field.zero:
                    isotropy.add((label, i + 1, j + 1), field.format(v))
    nondeg = FailureLog()
    if not form.is_nondegenerate:
        nondeg.add(("rank",), "form is degenerate")
    return combined("manin-triple",
                    closure.report("subalgebras"),
                    isotropy.report("isotropic"),
                    nondeg.report("nondegenerate"),
                    check_two_cocycle(form, d))


def dendriform_bialgebras(r):
    """The bialgebra induced by the identity O-operator of a
    Rota-Baxter dendriform algebra."""
    report = check_rb_dendriform(r)
    if not report.passed:
        raise InvalidStructure("operator identity fails on a partial product", report)
    star = associated_algebra(r.dend)
    base = RBAlgebra(star, r.operator, r.weight)
    rep = dendriform_rep(r.dend, algebra=star, alpha=r.operator)
    ident = Matrix.identity(r.field, r.dend.dim)
    return cons2_bialgebra(OOperatorData(base, rep, ident))


def four_bialgebras(a_rb):
    """The four bialgebras on A + A* of a weight-zero base.

    In order: the one from T = P on the adjoint actions, the two from
    T = id on the one-sided actions, and the one from T = id on the
    induced dendriform actions of the star product.
    """
    if a_rb.weight != a_rb.field.zero:
        raise NotWeightZero("the quadruple of bialgebras needs weight zero")
    algebra = a_rb.algebra
    field = a_rb.field
    n = algebra.dim
    ident = Matrix.identity(field, n)
    zero = Matrix.zeros(field, n, n)
    adj = Representation.adjoint(algebra, alpha=a_rb.operator)
    left_only = Representation(algebra, n, adj.left, [zero] * n,
                               alpha=a_rb.operator, check=False)
    right_only = Representation(algebra, n, [zero] * n, adj.right,
                                alpha=a_rb.operator, check=False)
    return [
        cons2_bialgebra(OOperatorData(a_rb, adj, a_rb.operator)),
        cons2_bialgebra(OOperatorData(a_rb, right_only, ident)),
        cons2_bialgebra(OOperatorData(a_rb, left_only, ident)),
        dendriform_bialgebras(induced_dendriform(a_rb)),
    ]
