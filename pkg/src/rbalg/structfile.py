"""Line-oriented structure files.

A file declares one scalar field and a sequence of named objects with
sparse coefficient lines, 1-based indices matching e_1..e_n:

    format 1
    field rationals            # or: field prime 3
    object A algebra
      dim 2
      c 1 1 1 1                # e1*e1 = e1
    end
    object P operator
      rows 2
      cols 2
      entry 2 1 1
    end
    object RB bundle rb-algebra
      algebra A
      operator P
      weight 0
    end

Bundles tie named parts together; all references must resolve and all
dimensions must agree.  Unknown keys are rejected.  Emission is
canonical (entries sorted, fixed layout), so parse-emit round-trips are
byte identical on canonicalized files.  Certificates from check runs
may be embedded as their own blocks and survive round-trips.
"""

from dataclasses import dataclass, field as dc_field

from .algebra import Algebra, BilinearForm, Coalgebra, Representation
from .bialgebra import FrobeniusData, MatchedPairData, RBASIBialgebra
from .errors import KindMismatch, ParseError, ResolutionError
from .fields import PrimeField, Rationals
from .linalg import Matrix, Tensor2, Tensor3
from .rota_baxter import AdmissibleQuadruple, RBAlgebra, RBCoalgebra, RBRepresentation
from .yang_baxter import OOperatorData, PiSpec, RElement

FORMAT_VERSION = "1"

BARE_KINDS = ("algebra", "coalgebra", "operator", "tensor2", "tensor3", "form",
              "representation", "dendriform")

BUNDLE_KINDS = {
    "rb-algebra": ("algebra", "operator", "weight"),
    "rb-coalgebra": ("coalgebra", "operator", "weight"),
    "rb-representation": ("rb-algebra", "representation"),
    "admissible-quadruple": ("rb-algebra", "representation", "beta"),
    "equivalence": ("rep-a", "rep-b", "phi"),
    "asi-bialgebra": ("algebra", "coproduct"),
    "rb-asi-bialgebra": ("algebra", "coproduct", "p", "q", "weight"),
    "matched-pair": ("algebra-a", "algebra-b", "actions-a", "actions-b",
                     "pa", "pb", "weight"),
    "frobenius": ("rb-algebra", "form"),
    "double": ("algebra", "p", "dual-algebra", "qstar", "weight"),
    "r-element": ("algebra", "tensor"),
    "admissible-r": ("rb-algebra", "q", "tensor"),
    "connes": ("algebra", "form"),
    "o-operator": ("rb-algebra", "representation", "t"),
    "lift": ("o-operator", "q", "beta"),
    "rb-dendriform": ("dendriform", "operator", "weight"),
    "cocycle": ("dendriform", "form"),
    "manin": ("dendriform", "form", "split"),
    "pi-admissible": ("rb-algebra", "representation", "variant", "theta"),
}

# bundle keys that hold a scalar or literal instead of a reference
LITERAL_KEYS = {"weight", "split", "variant", "theta"}

OPTIONAL_KEYS = {("matched-pair", "pa"), ("matched-pair", "pb"), ("matched-pair", "weight")}

_ENTRY_ARITY = {
    ("algebra", "c"): 3,
    ("coalgebra", "d"): 3,
    ("operator", "entry"): 2,
    ("tensor2", "t"): 2,
    ("tensor3", "t"): 3,
    ("form", "b"): 2,
    ("representation", "left"): 3,
    ("representation", "right"): 3,
    ("representation", "alpha"): 2,
    ("dendriform", "prec"): 3,
    ("dendriform", "succ"): 3,
}

_SIZE_KEYS = {
    "algebra": ("dim",),
    "coalgebra": ("dim",),
    "operator": ("rows", "cols"),
    "tensor2": ("dim",),
    "tensor3": ("dim",),
    "form": ("dim",),
    "representation": ("dimv",),
    "dendriform": ("dim",),
}


@dataclass
class ObjectDecl:
    name: str
    kind: str
    subkind: str = None
    sizes: dict = dc_field(default_factory=dict)
    symmetry: str = None
    refs: dict = dc_field(default_factory=dict)
    literals: dict = dc_field(default_factory=dict)
    entries: dict = dc_field(default_factory=dict)   # key -> list of (indices, value)


@dataclass
class Certificate:
    check: str
    target: str
    digest: str
    verdict: str                      # "pass" | "fail"
    failures: int = 0
    witnesses: tuple = ()

    @property
    def passed(self):
        return self.verdict == "pass"


class StructureFile:
    def __init__(self, field, objects=None, certificates=None):
        self.field = field
        self.objects = dict(objects or {})
        self.certificates = list(certificates or [])

    def declare(self, decl):
        if decl.name in self.objects:
            raise ParseError(f"duplicate object name {decl.name!r}")
        self.objects[decl.name] = decl

    def get(self, name):
        if name not in self.objects:
            raise ResolutionError(f"no object named {name!r}")
        return self.objects[name]

    def __eq__(self, other):
        return (isinstance(other, StructureFile) and self.field == other.field
                and self.objects == other.objects
                and self.certificates == other.certificates)


def _tokens(line):
    return line.split()


def parse_text(text):
    """Parse a structure file from a string; see the module docstring."""
    lines = text.splitlines()
    field = None
    sf = None
    current = None
    current_cert = None
    seen_format = False
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.split("#", 1)[0].rstrip()
        if not stripped.strip():
            continue
        toks = _tokens(stripped)
        key = toks[0]
        if not seen_format:
            if key != "format" or len(toks) != 2:
                raise ParseError("file must start with a format line", lineno, 1)
            if toks[1] != FORMAT_VERSION:
                raise ParseError(f"unsupported format version {toks[1]!r}", lineno, 1)
            seen_format = True
            continue
        if field is None:
            if key != "field":
                raise ParseError("expected a field declaration", lineno, 1)
            if toks[1:] == ["rationals"]:
                field = Rationals()
            elif len(toks) == 3 and toks[1] == "prime":
                try:
                    p = int(toks[2])
                except ValueError:
                    raise ParseError(f"bad prime {toks[2]!r}", lineno, 1) from None
                try:
                    field = PrimeField(p)
                except ParseError as exc:
                    raise ParseError(str(exc), lineno, 1) from None
            else:
                raise ParseError("field must be 'rationals' or 'prime p'", lineno, 1)
            sf = StructureFile(field)
            continue
        if current is None and current_cert is None:
            if key == "object":
                current = _open_object(toks, lineno)
            elif key == "certificate":
                if len(toks) != 1:
                    raise ParseError("certificate takes no arguments", lineno, 1)
                current_cert = {"witnesses": []}
            else:
                raise ParseError(f"unknown top-level key {key!r}", lineno, 1)
            continue
        if key == "end":
            if current is not None:
                _validate_decl(current, lineno)
                sf.declare(current)
                current = None
            else:
                sf.certificates.append(_close_certificate(current_cert, lineno))
                current_cert = None
            continue
        if current is not None:
            _object_line(current, toks, field, lineno)
        else:
            _certificate_line(current_cert, stripped, toks, lineno)
    if not seen_format or field is None:
        raise ParseError("missing format or field declaration", len(lines), 1)
    if current is not None or current_cert is not None:
        raise ParseError("unterminated block", len(lines), 1)
    _resolve(sf)
    return sf


def _open_object(toks, lineno):
    if len(toks) == 3 and toks[2] in BARE_KINDS:
        return ObjectDecl(name=toks[1], kind=toks[2])
    if len(toks) == 4 and toks[2] == "bundle":
        if toks[3] not in BUNDLE_KINDS:
            raise ParseError(f"unknown bundle kind {toks[3]!r}", lineno, 1)
        return ObjectDecl(name=toks[1], kind="bundle", subkind=toks[3])
    raise ParseError("expected 'object <name> <kind>' or 'object <name> bundle <kind>'",
                     lineno, 1)


def _object_line(decl, toks, field, lineno):
    key = toks[0]
    if decl.kind == "bundle":
        allowed = BUNDLE_KINDS[decl.subkind]
        if key not in allowed:
            raise ParseError(f"unknown key {key!r} in bundle {decl.subkind}", lineno, 1)
        if len(toks) != 2:
            raise ParseError(f"key {key!r} takes one argument", lineno, 1)
        if key in LITERAL_KEYS:
            decl.literals[key] = toks[1]
        else:
            decl.refs[key] = toks[1]
        return
    if key in _SIZE_KEYS.get(decl.kind, ()):
        try:
            decl.sizes[key] = int(toks[1])
        except (ValueError, IndexError):
            raise ParseError(f"bad size for {key!r}", lineno, 1) from None
        return
    if decl.kind == "form" and key == "symmetry":
        if len(toks) != 2 or toks[1] not in ("symmetric", "antisymmetric", "none"):
            raise ParseError("symmetry must be symmetric, antisymmetric or none", lineno, 1)
        decl.symmetry = toks[1]
        return
    if decl.kind == "representation" and key == "algebra":
        if len(toks) != 2:
            raise ParseError("algebra reference takes one name", lineno, 1)
        decl.refs["algebra"] = toks[1]
        return
    arity = _ENTRY_ARITY.get((decl.kind, key))
    if arity is None:
        raise ParseError(f"unknown key {key!r} in {decl.kind} object", lineno, 1)
    if len(toks) != arity + 2:
        raise ParseError(f"{key!r} needs {arity} indices and a value", lineno, 1)
    try:
        idx = tuple(int(t) for t in toks[1:1 + arity])
    except ValueError:
        raise ParseError("indices must be integers", lineno, 1) from None
    if any(i < 1 for i in idx):
        raise ParseError("indices are 1-based", lineno, 1)
    try:
        value = field.parse(toks[-1])
    except ParseError as exc:
        raise ParseError(str(exc), lineno, len(stripped_prefix(toks))) from None
    decl.entries.setdefault(key, []).append((idx, value))


def stripped_prefix(toks):
    return sum(len(t) + 1 for t in toks[:-1]) + 1


def _certificate_line(cert, stripped, toks, lineno):
    key = toks[0]
    if key == "witness":
        body = stripped.strip()[len("witness"):].strip()
        if "=" not in body:
            raise ParseError("witness lines read 'witness <key> = <text>'", lineno, 1)
        where, text = body.split("=", 1)
        cert["witnesses"].append((where.strip(), text.strip()))
        return
    if key not in ("check", "object", "digest", "verdict", "failures"):
        raise ParseError(f"unknown certificate key {key!r}", lineno, 1)
    if len(toks) != 2:
        raise ParseError(f"certificate key {key!r} takes one argument", lineno, 1)
    cert[key] = toks[1]


def _close_certificate(cert, lineno):
    for needed in ("check", "object", "digest", "verdict"):
        if needed not in cert:
            raise ParseError(f"certificate is missing {needed!r}", lineno, 1)
    if cert["verdict"] not in ("pass", "fail"):
        raise ParseError("verdict must be pass or fail", lineno, 1)
    return Certificate(check=cert["check"], target=cert["object"], digest=cert["digest"],
                       verdict=cert["verdict"], failures=int(cert.get("failures", "0")),
                       witnesses=tuple(cert["witnesses"]))


def _validate_decl(decl, lineno):
    if decl.kind == "bundle":
        for key in BUNDLE_KINDS[decl.subkind]:
            if key in decl.refs or key in decl.literals:
                continue
            if (decl.subkind, key) in OPTIONAL_KEYS:
                continue
            raise ParseError(f"bundle {decl.name!r} is missing {key!r}", lineno, 1)
        return
    for key in _SIZE_KEYS[decl.kind]:
        if key not in decl.sizes:
            raise ParseError(f"object {decl.name!r} is missing {key!r}", lineno, 1)
    if decl.kind == "form" and decl.symmetry is None:
        raise ParseError(f"form {decl.name!r} is missing its symmetry", lineno, 1)
    bounds = _entry_bounds(decl)
    for key, items in decl.entries.items():
        limit = bounds[key]
        for idx, _ in items:
            if any(i > b for i, b in zip(idx, limit)):
                raise ParseError(f"index {idx} out of range in {decl.name!r}", lineno, 1)


def _entry_bounds(decl):
    if decl.kind == "algebra":
        n = decl.sizes["dim"]
        return {"c": (n, n, n)}
    if decl.kind == "coalgebra":
        n = decl.sizes["dim"]
        return {"d": (n, n, n)}
    if decl.kind == "operator":
        return {"entry": (decl.sizes["rows"], decl.sizes["cols"])}
    if decl.kind == "tensor2":
        n = decl.sizes["dim"]
        return {"t": (n, n)}
    if decl.kind == "tensor3":
        n = decl.sizes["dim"]
        return {"t": (n, n, n)}
    if decl.kind == "form":
        n = decl.sizes["dim"]
        return {"b": (n, n)}
    if decl.kind == "representation":
        m = decl.sizes["dimv"]
        big = 10 ** 9      # the algebra index bound is checked at realize time
        return {"left": (big, m, m), "right": (big, m, m), "alpha": (m, m)}
    if decl.kind == "dendriform":
        n = decl.sizes["dim"]
        return {"prec": (n, n, n), "succ": (n, n, n)}
    raise KindMismatch(decl.kind)


def _resolve(sf):
    for decl in sf.objects.values():
        for key, ref in decl.refs.items():
            if ref not in sf.objects:
                raise ResolutionError(f"{decl.name!r} references unknown object {ref!r}")
    for cert in sf.certificates:
        if cert.target not in sf.objects:
            raise ResolutionError(f"certificate references unknown object {cert.target!r}")


def parse(path):
    with open(path, encoding="utf-8") as handle:
        return parse_text(handle.read())


def emit_text(sf):
    """Canonical emission: fixed layout, entries sorted by indices."""
    fmt = sf.field.format
    out = [f"format {FORMAT_VERSION}"]
    if isinstance(sf.field, PrimeField):
        out.append(f"field prime {sf.field.p}")
    else:
        out.append("field rationals")
    for decl in sf.objects.values():
        header = f"object {decl.name} {decl.kind}"
        if decl.kind == "bundle":
            header += f" {decl.subkind}"
        out.append(header)
        if decl.kind == "bundle":
            for key in BUNDLE_KINDS[decl.subkind]:
                if key in decl.refs:
                    out.append(f"  {key} {decl.refs[key]}")
                elif key in decl.literals:
                    out.append(f"  {key} {decl.literals[key]}")
        else:
            if decl.kind == "representation":
                out.append(f"  algebra {decl.refs['algebra']}")
            for key in _SIZE_KEYS[decl.kind]:
                out.append(f"  {key} {decl.sizes[key]}")
            if decl.kind == "form":
                out.append(f"  symmetry {decl.symmetry}")
            for key in sorted(decl.entries):
                for idx, value in sorted(decl.entries[key]):
                    pieces = " ".join(str(i) for i in idx)
                    out.append(f"  {key} {pieces} {fmt(value)}")
        out.append("end")
    for cert in sf.certificates:
        out.append("certificate")
        out.append(f"  check {cert.check}")
        out.append(f"  object {cert.target}")
        out.append(f"  digest {cert.digest}")
        out.append(f"  verdict {cert.verdict}")
        out.append(f"  failures {cert.failures}")
        for where, text in cert.witnesses:
            out.append(f"  witness {where} = {text}")
        out.append("end")
    return "\n".join(out) + "\n"


def emit(sf, path):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(emit_text(sf))


# ---------------------------------------------------------------------------
# realizing declarations as domain objects


def _expect(decl, kind, subkind=None):
    if decl.kind != kind or (subkind is not None and decl.subkind != subkind):
        want = kind if subkind is None else f"{kind} {subkind}"
        have = decl.kind if decl.subkind is None else f"{decl.kind} {decl.subkind}"
        raise KindMismatch(f"{decl.name!r} is a {have}, expected {want}")


class Realizer:
    """Builds (and caches) domain objects from declarations."""

    def __init__(self, sf):
        self.sf = sf
        self.field = sf.field
        self._cache = {}

    def _get(self, name, builder):
        if name not in self._cache:
            self._cache[name] = builder(self.sf.get(name))
        return self._cache[name]

    def algebra(self, name):
        return self._get(name, self._algebra)

    def _algebra(self, decl):
        _expect(decl, "algebra")
        n = decl.sizes["dim"]
        z = self.field.zero
        table = [[[z] * n for _ in range(n)] for _ in range(n)]
        for (i, j, k), v in decl.entries.get("c", ()):
            table[i - 1][j - 1][k - 1] = v
        return Algebra(self.field, table, check=False)

    def coalgebra(self, name):
        return self._get(name, self._coalgebra)

    def _coalgebra(self, decl):
        _expect(decl, "coalgebra")
        n = decl.sizes["dim"]
        buckets = [[] for _ in range(n)]
        for (k, i, j), v in decl.entries.get("d", ()):
            buckets[k - 1].append(((i - 1, j - 1), v))
        return Coalgebra(self.field, n,
                         [Tensor2(self.field, n, b) for b in buckets], check=False)

    def operator(self, name, rows=None, cols=None):
        decl = self.sf.get(name)
        _expect(decl, "operator")
        key = (name, "operator")
        if key not in self._cache:
            r, c = decl.sizes["rows"], decl.sizes["cols"]
            z = self.field.zero
            grid = [[z] * c for _ in range(r)]
            for (i, j), v in decl.entries.get("entry", ()):
                grid[i - 1][j - 1] = v
            self._cache[key] = Matrix(self.field, grid)
        m = self._cache[key]
        if rows is not None and (m.nrows, m.ncols) != (rows, cols):
            raise ResolutionError(
                f"operator {name!r} is {m.nrows}x{m.ncols}, expected {rows}x{cols}")
        return m

    def tensor2(self, name, dim=None):
        decl = self.sf.get(name)
        _expect(decl, "tensor2")
        n = decl.sizes["dim"]
        if dim is not None and n != dim:
            raise ResolutionError(f"tensor {name!r} has dim {n}, expected {dim}")
        return Tensor2(self.field, n,
                       [((i - 1, j - 1), v) for (i, j), v in decl.entries.get("t", ())])

    def tensor3(self, name):
        decl = self.sf.get(name)
        _expect(decl, "tensor3")
        n = decl.sizes["dim"]
        return Tensor3(self.field, n,
                       [((i - 1, j - 1, k - 1), v)
                        for (i, j, k), v in decl.entries.get("t", ())])

    def form(self, name, dim=None):
        decl = self.sf.get(name)
        _expect(decl, "form")
        n = decl.sizes["dim"]
        if dim is not None and n != dim:
            raise ResolutionError(f"form {name!r} has dim {n}, expected {dim}")
        z = self.field.zero
        grid = [[z] * n for _ in range(n)]
        for (i, j), v in decl.entries.get("b", ()):
            grid[i - 1][j - 1] = v
        return BilinearForm(Matrix(self.field, grid), decl.symmetry)

    def representation(self, name, algebra=None, alpha_required=False):
        decl = self.sf.get(name)
        _expect(decl, "representation")
        base = algebra if algebra is not None else self.algebra(decl.refs["algebra"])
        m = decl.sizes["dimv"]
        z = self.field.zero

        def collect(key):
            mats = [[[z] * m for _ in range(m)] for _ in range(base.dim)]
            for (a, i, j), v in decl.entries.get(key, ()):
                if a > base.dim:
                    raise ResolutionError(
                        f"action index {a} exceeds the algebra dimension in {name!r}")
                mats[a - 1][i - 1][j - 1] = v
            return [Matrix(self.field, g) for g in mats]

        alpha = None
        if decl.entries.get("alpha") or alpha_required:
            grid = [[z] * m for _ in range(m)]
            for (i, j), v in decl.entries.get("alpha", ()):
                grid[i - 1][j - 1] = v
            alpha = Matrix(self.field, grid)
        return Representation(base, m, collect("left"), collect("right"),
                              alpha=alpha, check=False)

    def dendriform(self, name):
        decl = self.sf.get(name)
        _expect(decl, "dendriform")
        n = decl.sizes["dim"]
        z = self.field.zero
        from .dendriform import DendriformAlgebra
        tables = {}
        for key in ("prec", "succ"):
            table = [[[z] * n for _ in range(n)] for _ in range(n)]
            for (i, j, k), v in decl.entries.get(key, ()):
                table[i - 1][j - 1][k - 1] = v
            tables[key] = table
        return DendriformAlgebra(self.field, tables["prec"], tables["succ"], check=False)

    def weight(self, decl):
        return self.field.parse(decl.literals["weight"])

    def rb_algebra(self, name):
        decl = self.sf.get(name)
        _expect(decl, "bundle", "rb-algebra")
        algebra = self.algebra(decl.refs["algebra"])
        op = self.operator(decl.refs["operator"], algebra.dim, algebra.dim)
        return RBAlgebra(algebra, op, self.weight(decl), check=False)

    def rb_coalgebra(self, name):
        decl = self.sf.get(name)
        _expect(decl, "bundle", "rb-coalgebra")
        coalgebra = self.coalgebra(decl.refs["coalgebra"])
        op = self.operator(decl.refs["operator"], coalgebra.dim, coalgebra.dim)
        return RBCoalgebra(coalgebra, op, self.weight(decl), check=False)

    def rb_representation(self, name):
        decl = self.sf.get(name)
        _expect(decl, "bundle", "rb-representation")
        base = self.rb_algebra(decl.refs["rb-algebra"])
        rep = self.representation(decl.refs["representation"], algebra=base.algebra,
                                  alpha_required=True)
        return RBRepresentation(base, rep, check=False)

    def admissible_quadruple(self, name):
        decl = self.sf.get(name)
        _expect(decl, "bundle", "admissible-quadruple")
        base = self.rb_algebra(decl.refs["rb-algebra"])
        rep = self.representation(decl.refs["representation"], algebra=base.algebra)
        beta = self.operator(decl.refs["beta"], rep.dim_v, rep.dim_v)
        return AdmissibleQuadruple(base, rep, beta, check=False)

    def asi_bialgebra(self, name):
        decl = self.sf.get(name)
        _expect(decl, "bundle", "asi-bialgebra")
        algebra = self.algebra(decl.refs["algebra"])
        coalgebra = self.coalgebra(decl.refs["coproduct"])
        return algebra, coalgebra

    def rb_asi_bialgebra(self, name):
        decl = self.sf.get(name)
        _expect(decl, "bundle", "rb-asi-bialgebra")
        algebra = self.algebra(decl.refs["algebra"])
        coalgebra = self.coalgebra(decl.refs["coproduct"])
        p = self.operator(decl.refs["p"], algebra.dim, algebra.dim)
        q = self.operator(decl.refs["q"], algebra.dim, algebra.dim)
        return RBASIBialgebra(algebra, coalgebra, p, q, self.weight(decl), check=False)

    def matched_pair(self, name):
        decl = self.sf.get(name)
        _expect(decl, "bundle", "matched-pair")
        alg_a = self.algebra(decl.refs["algebra-a"])
        alg_b = self.algebra(decl.refs["algebra-b"])
        acts_a = self.representation(decl.refs["actions-a"], algebra=alg_a)
        acts_b = self.representation(decl.refs["actions-b"], algebra=alg_b)
        if acts_a.dim_v != alg_b.dim or acts_b.dim_v != alg_a.dim:
            raise ResolutionError(f"action dimensions disagree in {name!r}")
        p_a = p_b = weight = None
        if "pa" in decl.refs or "pb" in decl.refs:
            p_a = self.operator(decl.refs["pa"], alg_a.dim, alg_a.dim)
            p_b = self.operator(decl.refs["pb"], alg_b.dim, alg_b.dim)
            weight = self.weight(decl)
        return MatchedPairData(alg_a, alg_b, acts_a.left, acts_a.right,
                               acts_b.left, acts_b.right, p_a=p_a, p_b=p_b, weight=weight)

    def frobenius(self, name):
        decl = self.sf.get(name)
        _expect(decl, "bundle", "frobenius")
        base = self.rb_algebra(decl.refs["rb-algebra"])
        form = self.form(decl.refs["form"], dim=base.dim)
        return FrobeniusData(base, form, check=False)

    def double(self, name):
        decl = self.sf.get(name)
        _expect(decl, "bundle", "double")
        algebra = self.algebra(decl.refs["algebra"])
        dual_algebra = self.algebra(decl.refs["dual-algebra"])
        p = self.operator(decl.refs["p"], algebra.dim, algebra.dim)
        qstar = self.operator(decl.refs["qstar"], algebra.dim, algebra.dim)
        weight = self.weight(decl)
        return (RBAlgebra(algebra, p, weight, check=False),
                RBAlgebra(dual_algebra, qstar, weight, check=False))

    def r_element(self, name):
        decl = self.sf.get(name)
        _expect(decl, "bundle", "r-element")
        algebra = self.algebra(decl.refs["algebra"])
        return algebra, RElement(self.tensor2(decl.refs["tensor"], dim=algebra.dim))

    def admissible_r(self, name):
        decl = self.sf.get(name)
        _expect(decl, "bundle", "admissible-r")
        base = self.rb_algebra(decl.refs["rb-algebra"])
        q = self.operator(decl.refs["q"], base.dim, base.dim)
        r = RElement(self.tensor2(decl.refs["tensor"], dim=base.dim))
        return base, q, r

    def connes(self, name):
        decl = self.sf.get(name)
        _expect(decl, "bundle", "connes")
        algebra = self.algebra(decl.refs["algebra"])
        return self.form(decl.refs["form"], dim=algebra.dim), algebra

    def o_operator(self, name):
        decl = self.sf.get(name)
        _expect(decl, "bundle", "o-operator")
        base = self.rb_algebra(decl.refs["rb-algebra"])
        rep = self.representation(decl.refs["representation"], algebra=base.algebra,
                                  alpha_required=True)
        t = self.operator(decl.refs["t"], base.dim, rep.dim_v)
        return OOperatorData(base, rep, t)

    def lift(self, name):
        decl = self.sf.get(name)
        _expect(decl, "bundle", "lift")
        d = self.o_operator(decl.refs["o-operator"])
        q = self.operator(decl.refs["q"], d.base.dim, d.base.dim)
        beta = self.operator(decl.refs["beta"], d.rep.dim_v, d.rep.dim_v)
        return d, q, beta

    def rb_dendriform(self, name):
        decl = self.sf.get(name)
        _expect(decl, "bundle", "rb-dendriform")
        dend = self.dendriform(decl.refs["dendriform"])
        op = self.operator(decl.refs["operator"], dend.dim, dend.dim)
        from .dendriform import RBDendriform
        return RBDendriform(dend, op, self.weight(decl), check=False)

    def cocycle(self, name):
        decl = self.sf.get(name)
        _expect(decl, "bundle", "cocycle")
        dend = self.dendriform(decl.refs["dendriform"])
        return self.form(decl.refs["form"], dim=dend.dim), dend

    def manin(self, name):
        decl = self.sf.get(name)
        _expect(decl, "bundle", "manin")
        dend = self.dendriform(decl.refs["dendriform"])
        form = self.form(decl.refs["form"], dim=dend.dim)
        split = int(decl.literals["split"])
        return dend, form, split

    def pi_admissible(self, name):
        decl = self.sf.get(name)
        _expect(decl, "bundle", "pi-admissible")
        base = self.rb_algebra(decl.refs["rb-algebra"])
        rep = self.representation(decl.refs["representation"], algebra=base.algebra,
                                  alpha_required=True)
        pi = PiSpec(self.field, decl.literals["variant"],
                    self.field.parse(decl.literals["theta"]))
        return pi, base, rep

    def equivalence(self, name):
        decl = self.sf.get(name)
        _expect(decl, "bundle", "equivalence")
        r1 = self.rb_representation(decl.refs["rep-a"])
        r2 = self.rb_representation(decl.refs["rep-b"])
        phi = self.operator(decl.refs["phi"], r2.rep.dim_v, r1.rep.dim_v)
        return r1, r2, phi


# ---------------------------------------------------------------------------
# turning domain objects back into declarations


def algebra_decl(name, algebra):
    decl = ObjectDecl(name=name, kind="algebra", sizes={"dim": algebra.dim})
    entries = []
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            for k, v in enumerate(algebra.structure[i][j]):
                if v != algebra.field.zero:
                    entries.append(((i + 1, j + 1, k + 1), v))
    if entries:
        decl.entries["c"] = entries
    return decl


def coalgebra_decl(name, coalgebra):
    decl = ObjectDecl(name=name, kind="coalgebra", sizes={"dim": coalgebra.dim})
    entries = []
    for k in range(coalgebra.dim):
        for (i, j), v in sorted(coalgebra.delta_basis(k).entries.items()):
            entries.append(((k + 1, i + 1, j + 1), v))
    if entries:
        decl.entries["d"] = entries
    return decl


def operator_decl(name, matrix):
    decl = ObjectDecl(name=name, kind="operator",
                      sizes={"rows": matrix.nrows, "cols": matrix.ncols})
    entries = []
    for i in range(matrix.nrows):
        for j in range(matrix.ncols):
            v = matrix.entry(i, j)
            if v != matrix.field.zero:
                entries.append(((i + 1, j + 1), v))
    if entries:
        decl.entries["entry"] = entries
    return decl


def tensor2_decl(name, tensor):
    decl = ObjectDecl(name=name, kind="tensor2", sizes={"dim": tensor.dim})
    entries = [((i + 1, j + 1), v) for (i, j), v in sorted(tensor.entries.items())]
    if entries:
        decl.entries["t"] = entries
    return decl


def form_decl(name, form):
    decl = ObjectDecl(name=name, kind="form", sizes={"dim": form.dim},
                      symmetry=form.symmetry)
    entries = []
    for i in range(form.dim):
        for j in range(form.dim):
            v = form.gram.entry(i, j)
            if v != form.field.zero:
                entries.append(((i + 1, j + 1), v))
    if entries:
        decl.entries["b"] = entries
    return decl


def representation_decl(name, rep, algebra_name):
    decl = ObjectDecl(name=name, kind="representation", sizes={"dimv": rep.dim_v},
                      refs={"algebra": algebra_name})
    for key, mats in (("left", rep.left), ("right", rep.right)):
        entries = []
        for a, m in enumerate(mats):
            for i in range(m.nrows):
                for j in range(m.ncols):
                    v = m.entry(i, j)
                    if v != rep.field.zero:
                        entries.append(((a + 1, i + 1, j + 1), v))
        if entries:
            decl.entries[key] = entries
    if rep.alpha is not None:
        entries = []
        for i in range(rep.alpha.nrows):
            for j in range(rep.alpha.ncols):
                v = rep.alpha.entry(i, j)
                if v != rep.field.zero:
                    entries.append(((i + 1, j + 1), v))
        decl.entries["alpha"] = entries
    return decl


def dendriform_decl(name, dend):
    decl = ObjectDecl(name=name, kind="dendriform", sizes={"dim": dend.dim})
    for key, table in (("prec", dend.prec), ("succ", dend.succ)):
        entries = []
        for i in range(dend.dim):
            for j in range(dend.dim):
                for k, v in enumerate(table[i][j]):
                    if v != dend.field.zero:
                        entries.append(((i + 1, j + 1, k + 1), v))
        if entries:
            decl.entries[key] = entries
    return decl


def bundle_decl(name, subkind, refs, literals=None):
    return ObjectDecl(name=name, kind="bundle", subkind=subkind,
                      refs=dict(refs), literals=dict(literals or {}))


def rb_algebra_decls(sf, name, rb):
    """Declare an rb-algebra bundle with its parts; returns the bundle name."""
    sf.declare(algebra_decl(f"{name}.alg", rb.algebra))
    sf.declare(operator_decl(f"{name}.op", rb.operator))
    sf.declare(bundle_decl(name, "rb-algebra",
                           {"algebra": f"{name}.alg", "operator": f"{name}.op"},
                           {"weight": rb.field.format(rb.weight)}))
    return name


def rb_asi_bialgebra_decls(sf, name, b):
    sf.declare(algebra_decl(f"{name}.alg", b.algebra))
    sf.declare(coalgebra_decl(f"{name}.cop", b.coalgebra))
    sf.declare(operator_decl(f"{name}.p", b.p))
    sf.declare(operator_decl(f"{name}.q", b.q))
    sf.declare(bundle_decl(name, "rb-asi-bialgebra",
                           {"algebra": f"{name}.alg", "coproduct": f"{name}.cop",
                            "p": f"{name}.p", "q": f"{name}.q"},
                           {"weight": b.field.format(b.weight)}))
    return name
