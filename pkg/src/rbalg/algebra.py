"""Associative algebras by structure constants, coalgebras, bimodules,
bilinear forms, dualization and direct sums.

An algebra of dimension n over an exact field is the table c[i][j][k]
with e_i * e_j = sum_k c[i][j][k] e_k (indices 0-based internally,
1-based in reports and files).  Associativity is verified at
construction unless ``check=False`` is passed; the enumeration paths
create unchecked candidates and filter them afterwards.  No basis
canonicalization is ever attempted: everything lives in the fixed
standard basis.
"""

from .errors import DimensionMismatch, FieldMismatch, InvalidStructure, NotABimodule
from .linalg import (Matrix, Tensor2, Tensor3, vec_add, vec_is_zero, vec_scale, vec_str,
                     vec_unit, vec_zero)
from .reports import CheckReport, FailureLog, combined


class Algebra:
    """Finite-dimensional associative algebra, not necessarily unital."""

    def __init__(self, field, structure, check=True, labels=None):
        self.field = field
        self.dim = len(structure)
        self.structure = tuple(
            tuple(tuple(field.normalize(v) for v in row) for row in plane)
            for plane in structure)
        for plane in self.structure:
            if len(plane) != self.dim or any(len(row) != self.dim for row in plane):
                raise DimensionMismatch("structure constants must form an n x n x n table")
        self.labels = tuple(labels) if labels else tuple(f"e{i + 1}" for i in range(self.dim))
        self._left = None
        self._right = None
        if check:
            report = check_associativity(self)
            if not report.passed:
                raise InvalidStructure("multiplication is not associative", report)

    @classmethod
    def zero(cls, field, dim):
        z = field.zero
        return cls(field, [[[z] * dim for _ in range(dim)] for _ in range(dim)], check=False)

    def mul_basis(self, i, j):
        return self.structure[i][j]

    def mul_vec(self, x, y):
        nrm = self.field.normalize
        out = [self.field.zero] * self.dim
        for i, xi in enumerate(x):
            if xi == self.field.zero:
                continue
            for j, yj in enumerate(y):
                if yj == self.field.zero:
                    continue
                c = xi * yj
                row = self.structure[i][j]
                for k in range(self.dim):
                    if row[k] != self.field.zero:
                        out[k] = out[k] + c * row[k]
        return tuple(nrm(v) for v in out)

    def _mult_tables(self):
        if self._left is None:
            n = self.dim
            self._left = tuple(
                Matrix(self.field, [[self.structure[i][j][k] for j in range(n)] for k in range(n)])
                for i in range(n))
            self._right = tuple(
                Matrix(self.field, [[self.structure[i][j][k] for i in range(n)] for k in range(n)])
                for j in range(n))
        return self._left, self._right

    def left_mult(self, x):
        """Matrix of L(x): b -> x*b for a coordinate vector x."""
        left, _ = self._mult_tables()
        return _combine(self.field, left, x, self.dim)

    def right_mult(self, x):
        """Matrix of R(x): b -> b*x."""
        _, right = self._mult_tables()
        return _combine(self.field, right, x, self.dim)

    def unit_vec(self, i):
        return vec_unit(self.field, self.dim, i)

    def __eq__(self, other):
        return (isinstance(other, Algebra) and self.field == other.field
                and self.structure == other.structure)

    def __hash__(self):
        return hash((self.field, self.structure))

    def __repr__(self):
        return f"Algebra(dim={self.dim}, field={self.field!r})"


def _combine(field, mats, x, dim):
    nrm = field.normalize
    rows = [[field.zero] * dim for _ in range(dim)]
    for i, xi in enumerate(x):
        if xi == field.zero:
            continue
        m = mats[i]
        for r in range(dim):
            mr = m.rows[r]
            row = rows[r]
            for c in range(dim):
                if mr[c] != field.zero:
                    row[c] = row[c] + xi * mr[c]
    return Matrix(field, [[nrm(v) for v in row] for row in rows])


def check_associativity(algebra):
    """Report every basis triple (i,j,k) with a nonzero associator."""
    log = FailureLog()
    n = algebra.dim
    for i in range(n):
        for j in range(n):
            ij = algebra.mul_basis(i, j)
            for k in range(n):
                lhs = algebra.mul_vec(ij, algebra.unit_vec(k))
                rhs = algebra.mul_vec(algebra.unit_vec(i), algebra.mul_basis(j, k))
                diff = tuple(algebra.field.normalize(a - b) for a, b in zip(lhs, rhs))
                if not vec_is_zero(algebra.field, diff):
                    log.add((i + 1, j + 1, k + 1), vec_str(algebra.field, diff))
    return log.report("associativity")


def mult_operators(algebra, x):
    """Left and right multiplication matrices (L(x), R(x))."""
    return algebra.left_mult(x), algebra.right_mult(x)


class Coalgebra:
    """Coassociative coproduct, one Tensor2 per basis element."""

    def __init__(self, field, dim, coproducts, check=True):
        self.field = field
        self.dim = dim
        cops = []
        for t in coproducts:
            if not isinstance(t, Tensor2) or t.dim != dim:
                raise DimensionMismatch("each coproduct value must be a Tensor2 on the same space")
            cops.append(t)
        if len(cops) != dim:
            raise DimensionMismatch("need one coproduct value per basis element")
        self.coproducts = tuple(cops)
        if check:
            report = check_coassociativity(self)
            if not report.passed:
                raise InvalidStructure("coproduct is not coassociative", report)

    @classmethod
    def zero(cls, field, dim):
        return cls(field, dim, [Tensor2.zero(field, dim)] * dim, check=False)

    def delta_basis(self, k):
        return self.coproducts[k]

    def delta_vec(self, x):
        out = Tensor2.zero(self.field, self.dim)
        for k, xk in enumerate(x):
            if xk != self.field.zero:
                out = out + self.coproducts[k].scale(xk)
        return out

    def delta_on_slot(self, t, slot):
        """Apply the coproduct to one slot of a Tensor2, yielding a Tensor3."""
        entries = []
        for (i, j), v in t.entries.items():
            src = self.coproducts[i] if slot == 0 else self.coproducts[j]
            for (a, b), w in src.entries.items():
                key = (a, b, j) if slot == 0 else (i, a, b)
                entries.append((key, v * w))
        return Tensor3(self.field, self.dim, entries)

    def __eq__(self, other):
        return (isinstance(other, Coalgebra) and self.field == other.field
                and self.coproducts == other.coproducts)

    def __repr__(self):
        return f"Coalgebra(dim={self.dim}, field={self.field!r})"


def check_coassociativity(coalgebra):
    log = FailureLog()
    for k in range(coalgebra.dim):
        t = coalgebra.delta_basis(k)
        diff = coalgebra.delta_on_slot(t, 0) - coalgebra.delta_on_slot(t, 1)
        if not diff.is_zero:
            log.add((k + 1,), repr(diff))
    return log.report("coassociativity")


def dualize(coalgebra):
    """Algebra on the dual space: (e^i o e^j)(e_k) = (Delta e_k)(e_i, e_j)."""
    n = coalgebra.dim
    z = coalgebra.field.zero
    table = [[[z] * n for _ in range(n)] for _ in range(n)]
    for k in range(n):
        for (i, j), v in coalgebra.delta_basis(k).entries.items():
            table[i][j][k] = v
    return Algebra(coalgebra.field, table, check=False)


def dualize_algebra(algebra):
    """Coalgebra on the dual space: the transpose construction of dualize."""
    n = algebra.dim
    cops = []
    for k in range(n):
        entries = []
        for i in range(n):
            for j in range(n):
                v = algebra.structure[i][j][k]
                if v != algebra.field.zero:
                    entries.append(((i, j), v))
        cops.append(Tensor2(algebra.field, n, entries))
    return Coalgebra(algebra.field, n, cops, check=False)


def direct_sum(a, b):
    """Block-diagonal structure constants; both summands embed as ideals."""
    if a.field != b.field:
        raise FieldMismatch("direct summands must share the field")
    n, m = a.dim, b.dim
    z = a.field.zero
    total = n + m
    table = [[[z] * total for _ in range(total)] for _ in range(total)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                table[i][j][k] = a.structure[i][j][k]
    for i in range(m):
        for j in range(m):
            for k in range(m):
                table[n + i][n + j][n + k] = b.structure[i][j][k]
    return Algebra(a.field, table, check=False)


def direct_sum_coalgebra(c1, c2):
    """Componentwise coproduct on the direct sum."""
    if c1.field != c2.field:
        raise FieldMismatch("direct summands must share the field")
    n, m = c1.dim, c2.dim
    total = n + m
    cops = [c1.delta_basis(k).embedded(total, 0) for k in range(n)]
    cops += [c2.delta_basis(k).embedded(total, n) for k in range(m)]
    return Coalgebra(c1.field, total, cops, check=False)


class Representation:
    """A-bimodule (V, l, r): one matrix per basis element for each action.

    ``left[i]`` is the matrix of l(e_i) on V; ``right[i]`` is the matrix
    of v -> v r(e_i).  Right actions compose contravariantly:
    r(ab) as a matrix is r(b-matrix) * r(a-matrix).  The optional
    ``alpha`` operator makes the quadruple used by Rota-Baxter checks.
    """

    def __init__(self, algebra, dim_v, left, right, alpha=None, check=True):
        self.algebra = algebra
        self.field = algebra.field
        self.dim_v = dim_v
        self.left = tuple(left)
        self.right = tuple(right)
        self.alpha = alpha
        if len(self.left) != algebra.dim or len(self.right) != algebra.dim:
            raise DimensionMismatch("need one action matrix per basis element of the algebra")
        for m in self.left + self.right:
            if m.nrows != dim_v or m.ncols != dim_v:
                raise DimensionMismatch("action matrices must be dim_v x dim_v")
        if alpha is not None and (alpha.nrows != dim_v or alpha.ncols != dim_v):
            raise DimensionMismatch("alpha must act on V")
        if check:
            report = check_bimodule(self)
            if not report.passed:
                raise NotABimodule("bimodule axioms fail", report)

    @classmethod
    def adjoint(cls, algebra, alpha=None):
        n = algebra.dim
        left = [algebra.left_mult(algebra.unit_vec(i)) for i in range(n)]
        right = [algebra.right_mult(algebra.unit_vec(i)) for i in range(n)]
        return cls(algebra, n, left, right, alpha=alpha, check=False)

    @classmethod
    def zero_module(cls, algebra, dim_v):
        z = Matrix.zeros(algebra.field, dim_v, dim_v)
        return cls(algebra, dim_v, [z] * algebra.dim, [z] * algebra.dim, check=False)

    def left_vec(self, x):
        return _combine(self.field, self.left, x, self.dim_v)

    def right_vec(self, x):
        return _combine(self.field, self.right, x, self.dim_v)

    def with_alpha(self, alpha):
        return Representation(self.algebra, self.dim_v, self.left, self.right,
                              alpha=alpha, check=False)

    def dual(self):
        """Dual representation (V*, r*, l*); transposes alpha when present."""
        left = [m.transpose() for m in self.right]
        right = [m.transpose() for m in self.left]
        alpha = self.alpha.transpose() if self.alpha is not None else None
        return Representation(self.algebra, self.dim_v, left, right, alpha=alpha, check=False)

    def __repr__(self):
        return f"Representation(dim_v={self.dim_v}, over={self.algebra!r})"


def check_bimodule(rep):
    """The three bimodule identities, checked per basis pair of A."""
    log = FailureLog()
    a = rep.algebra
    for i in range(a.dim):
        for j in range(a.dim):
            li, lj = rep.left[i], rep.left[j]
            ri, rj = rep.right[i], rep.right[j]
            lij = rep.left_vec(a.mul_basis(i, j))
            rij = rep.right_vec(a.mul_basis(i, j))
            if not (li * lj - lij).is_zero:
                log.add(("left", i + 1, j + 1), repr(li * lj - lij))
            if not (rj * ri - rij).is_zero:
                log.add(("right", i + 1, j + 1), repr(rj * ri - rij))
            if not (rj * li - li * rj).is_zero:
                log.add(("mixed", i + 1, j + 1), repr(rj * li - li * rj))
    return log.report("bimodule")


def dual_bimodule(rep):
    """(V*, r*, l*): the dual of a bimodule is again a bimodule."""
    report = check_bimodule(rep)
    if not report.passed:
        raise NotABimodule("cannot dualize: not a bimodule", report)
    return rep.dual()


class BilinearForm:
    """Gram matrix of B(e_i, e_j) with a declared symmetry flag."""

    SYMMETRIC = "symmetric"
    ANTISYMMETRIC = "antisymmetric"
    NONE = "none"

    def __init__(self, gram, symmetry=NONE):
        self.gram = gram
        self.field = gram.field
        self.dim = gram.nrows
        if not gram.is_square:
            raise DimensionMismatch("gram matrix must be square")
        if symmetry not in (self.SYMMETRIC, self.ANTISYMMETRIC, self.NONE):
            raise ValueError(f"unknown symmetry flag {symmetry!r}")
        self.symmetry = symmetry
        if symmetry == self.SYMMETRIC and gram.transpose() != gram:
            raise InvalidStructure("gram matrix is not symmetric")
        if symmetry == self.ANTISYMMETRIC and not (gram.transpose() + gram).is_zero:
            raise InvalidStructure("gram matrix is not antisymmetric")

    def value(self, x, y):
        nrm = self.field.normalize
        total = self.field.zero
        for i, xi in enumerate(x):
            if xi == self.field.zero:
                continue
            row = self.gram.rows[i]
            for j, yj in enumerate(y):
                if yj != self.field.zero:
                    total = total + xi * row[j] * yj
        return nrm(total)

    def basis_value(self, i, j):
        return self.gram.entry(i, j)

    @property
    def is_nondegenerate(self):
        try:
            self.gram.inverse()
            return True
        except Exception:
            return False

    def phi(self):
        """Matrix of phi: V -> V*, phi(a) = B(a, .); columns are phi(e_i)."""
        return self.gram.transpose()

    def __repr__(self):
        return f"BilinearForm(dim={self.dim}, {self.symmetry})"


def representation_report(rep):
    return check_bimodule(rep)


def zero_vec(field, n):
    return vec_zero(field, n)


def scaled_identity(field, n, c):
    return Matrix.identity(field, n).scale(c)
