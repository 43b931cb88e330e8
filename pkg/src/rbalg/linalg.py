"""Exact basis-indexed linear algebra: vectors, matrices, 2- and 3-tensors.

Every space carries the ordered standard basis e_1..e_n; dual spaces
always use the dual basis e^1..e^n.  Vectors are plain tuples of field
elements.  Matrices act on coordinate columns, so the matrix of a
composition f.g is ``f * g``.  Tensors are stored sparsely as
index -> coefficient maps (zero entries dropped); contractions fall
back to dense loops over the stored entries.

All values are immutable after construction and all operations are
pure, so everything here is safe to evaluate in parallel.
"""

from .errors import DimensionMismatch, SingularMatrix


def vec_zero(field, n):
    return (field.zero,) * n


def vec_unit(field, n, i):
    return tuple(field.one if j == i else field.zero for j in range(n))


def vec_add(field, x, y):
    return tuple(field.normalize(a + b) for a, b in zip(x, y))


def vec_sub(field, x, y):
    return tuple(field.normalize(a - b) for a, b in zip(x, y))


def vec_scale(field, c, x):
    return tuple(field.normalize(c * a) for a in x)


def vec_is_zero(field, x):
    return all(a == field.zero for a in x)


def vec_str(field, x):
    return "(" + ", ".join(field.format(a) for a in x) + ")"


class Matrix:
    """Immutable matrix over an exact field, acting on coordinate columns."""

    def __init__(self, field, rows):
        self.field = field
        self.rows = tuple(tuple(field.normalize(v) for v in row) for row in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(row) != self.ncols for row in self.rows):
            raise DimensionMismatch("ragged rows")

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, [[field.zero] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[field.one if i == j else field.zero for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, field, columns, nrows):
        return cls(field, [[col[i] for col in columns] for i in range(nrows)])

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def entry(self, i, j):
        return self.rows[i][j]

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def _check_shape(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch(
                f"shape mismatch: {self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}")

    def apply(self, vec):
        if len(vec) != self.ncols:
            raise DimensionMismatch(f"matrix is {self.nrows}x{self.ncols}, vector has length {len(vec)}")
        nrm = self.field.normalize
        return tuple(nrm(sum(a * b for a, b in zip(row, vec))) for row in self.rows)

    def __add__(self, other):
        self._check_shape(other)
        nrm = self.field.normalize
        return Matrix(self.field, [[nrm(a + b) for a, b in zip(r1, r2)]
                                   for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._check_shape(other)
        nrm = self.field.normalize
        return Matrix(self.field, [[nrm(a - b) for a, b in zip(r1, r2)]
                                   for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self):
        nrm = self.field.normalize
        return Matrix(self.field, [[nrm(-a) for a in row] for row in self.rows])

    def __mul__(self, other):
        """Matrix product; (f * g) acts as f after g."""
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot compose {self.nrows}x{self.ncols} with {other.nrows}x{other.ncols}")
        nrm = self.field.normalize
        cols = list(zip(*other.rows)) if other.rows else []
        return Matrix(self.field, [[nrm(sum(a * b for a, b in zip(row, col))) for col in cols]
                                   for row in self.rows])

    def scale(self, c):
        nrm = self.field.normalize
        return Matrix(self.field, [[nrm(c * a) for a in row] for row in self.rows])

    def transpose(self):
        return Matrix(self.field, list(zip(*self.rows)) if self.rows else [[]] * self.ncols)

    def block_diag(self, other):
        self.field.check_same(other.field)
        z = self.field.zero
        rows = [list(row) + [z] * other.ncols for row in self.rows]
        rows += [[z] * self.ncols + list(row) for row in other.rows]
        return Matrix(self.field, rows)

    @property
    def is_zero(self):
        z = self.field.zero
        return all(v == z for row in self.rows for v in row)

    def inverse(self):
        """Exact inverse by field Gaussian elimination.

        Raises SingularMatrix exactly when the determinant vanishes.
        """
        if not self.is_square:
            raise DimensionMismatch("only square matrices can be inverted")
        field = self.field
        n = self.nrows
        nrm = field.normalize
        work = [list(row) + list(ident_row)
                for row, ident_row in zip(self.rows, Matrix.identity(field, n).rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] != field.zero), None)
            if pivot is None:
                raise SingularMatrix(f"rank below {n}")
            work[col], work[pivot] = work[pivot], work[col]
            inv_p = field.inv(work[col][col])
            work[col] = [nrm(v * inv_p) for v in work[col]]
            for r in range(n):
                if r != col and work[r][col] != field.zero:
                    f = work[r][col]
                    work[r] = [nrm(a - f * b) for a, b in zip(work[r], work[col])]
        return Matrix(field, [row[n:] for row in work])

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        fmt = self.field.format
        body = "; ".join(" ".join(fmt(v) for v in row) for row in self.rows)
        return f"Matrix[{body}]"


class Tensor2:
    """Element of V (x) V in the standard basis, stored sparsely."""

    ORDER = 2

    def __init__(self, field, dim, entries=()):
        self.field = field
        self.dim = dim
        data = {}
        items = entries.items() if isinstance(entries, dict) else entries
        for key, value in items:
            v = field.normalize(value)
            if v != field.zero:
                data[key] = field.normalize(data.get(key, field.zero) + v) if key in data else v
                if data[key] == field.zero:
                    del data[key]
        self.entries = data

    @classmethod
    def zero(cls, field, dim):
        return cls(field, dim)

    def get(self, key):
        return self.entries.get(key, self.field.zero)

    def items(self):
        return self.entries.items()

    @property
    def is_zero(self):
        return not self.entries

    def _merge(self, other, sign):
        if self.dim != other.dim:
            raise DimensionMismatch("tensor dimensions differ")
        nrm = self.field.normalize
        data = dict(self.entries)
        for key, value in other.entries.items():
            v = nrm(data.get(key, self.field.zero) + sign * value)
            if v == self.field.zero:
                data.pop(key, None)
            else:
                data[key] = v
        return type(self)(self.field, self.dim, data)

    def __add__(self, other):
        return self._merge(other, 1)

    def __sub__(self, other):
        return self._merge(other, -1)

    def __neg__(self):
        return self.scale(self.field.normalize(-self.field.one))

    def scale(self, c):
        return type(self)(self.field, self.dim,
                          [(key, c * v) for key, v in self.entries.items()])

    def flip(self):
        return Tensor2(self.field, self.dim,
                       [((j, i), v) for (i, j), v in self.entries.items()])

    @property
    def is_antisymmetric(self):
        return (self + self.flip()).is_zero

    def map(self, f, g):
        """Apply (f (x) g) slot-wise; None means the identity."""
        out = []
        for (i, j), v in self.entries.items():
            xs = [(i, v)] if f is None else [(a, v * c) for a, c in enumerate(f.column(i)) if c != self.field.zero]
            for a, va in xs:
                if g is None:
                    out.append(((a, j), va))
                else:
                    for b, c in enumerate(g.column(j)):
                        if c != self.field.zero:
                            out.append(((a, b), va * c))
        return Tensor2(self.field, self.dim, out)

    def embedded(self, total_dim, offset_left, offset_right=None):
        """Reindex into a larger space, shifting each slot by an offset."""
        if offset_right is None:
            offset_right = offset_left
        return Tensor2(self.field, total_dim,
                       [((i + offset_left, j + offset_right), v) for (i, j), v in self.entries.items()])

    def project(self, dim, offset_left, offset_right=None):
        """Keep only entries inside a coordinate block, reindexed to it."""
        if offset_right is None:
            offset_right = offset_left
        kept = [((i - offset_left, j - offset_right), v) for (i, j), v in self.entries.items()
                if offset_left <= i < offset_left + dim and offset_right <= j < offset_right + dim]
        return Tensor2(self.field, dim, kept)

    def __eq__(self, other):
        return (isinstance(other, Tensor2) and self.field == other.field
                and self.dim == other.dim and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.dim, tuple(sorted(self.entries.items()))))

    def __repr__(self):
        if not self.entries:
            return "Tensor2(0)"
        fmt = self.field.format
        body = " + ".join(f"{fmt(v)}*e{i + 1}(x)e{j + 1}"
                          for (i, j), v in sorted(self.entries.items()))
        return f"Tensor2({body})"


class Tensor3(Tensor2):
    """Element of V (x) V (x) V, same sparse storage with triple keys."""

    ORDER = 3

    def flip(self):
        raise NotImplementedError("flip is defined on 2-tensors")

    def map(self, f, g, h):
        maps = (f, g, h)
        out = []
        for key, v in self.entries.items():
            terms = [(key, v)]
            for slot, m in enumerate(maps):
                if m is None:
                    continue
                new_terms = []
                for k, c in terms:
                    for a, w in enumerate(m.column(k[slot])):
                        if w != self.field.zero:
                            nk = list(k)
                            nk[slot] = a
                            new_terms.append((tuple(nk), c * w))
                terms = new_terms
            out.extend(terms)
        return Tensor3(self.field, self.dim, out)

    def __repr__(self):
        if not self.entries:
            return "Tensor3(0)"
        fmt = self.field.format
        body = " + ".join(f"{fmt(v)}*e{i + 1}(x)e{j + 1}(x)e{k + 1}"
                          for (i, j, k), v in sorted(self.entries.items()))
        return f"Tensor3({body})"


def flip(t):
    """(sigma t)_{ji} = t_{ij}; an involution."""
    return t.flip()


def transpose(f):
    """Matrix of the dual map: <f*(w*), v> = <w*, f(v)>."""
    return f.transpose()


def tensor_to_map(t):
    """View t = sum a_i (x) b_i in V (x) V as the map V* -> V.

    The map sends a* to sum <a*, a_i> b_i, so in the standard bases its
    matrix is the coefficient grid of t with the first tensor slot as
    the input index.
    """
    m = Matrix.zeros(t.field, t.dim, t.dim)
    rows = [list(row) for row in m.rows]
    for (i, j), v in t.entries.items():
        rows[j][i] = v
    return Matrix(t.field, rows)


def map_to_tensor(t_map, domain_dim=None, codomain_dim=None):
    """Embed T: V -> A as sum_i T(e_i) (x) e^i inside (A + V*) (x) (A + V*).

    Coordinates of the direct sum put the A-block first; the V*-block
    follows, so e^i sits at index codomain_dim + i.
    """
    n_a = t_map.nrows if codomain_dim is None else codomain_dim
    n_v = t_map.ncols if domain_dim is None else domain_dim
    if (n_a, n_v) != (t_map.nrows, t_map.ncols):
        raise DimensionMismatch(f"map is {t_map.nrows}x{t_map.ncols}, expected {n_a}x{n_v}")
    total = n_a + n_v
    entries = []
    for i in range(n_v):
        for j in range(n_a):
            v = t_map.entry(j, i)
            if v != t_map.field.zero:
                entries.append(((j, n_a + i), v))
    return Tensor2(t_map.field, total, entries)


def invert(f):
    """Exact inverse; raises SingularMatrix exactly when det f = 0."""
    return f.inverse()
