"""Materialize path-algebra quotients as explicit multiplication tables.

Three quotients of the same path algebra are supported, selected by
`kind`: the full cyclic-relation quotient ("weighted"), the split
quotient with all length-2 compositions zero ("biserial"), and the
monomial quotient ("string").

Construction: span all zero-subword-free paths of length <= N
(N = max q + 2), span the ideal inside that window by padding each
relation generator with paths on both sides (components that overflow
the window are first shortened with the invertible two-term rules and
dropped only when they contain a zero monomial), and row-reduce per
(source, target) block.  The result is only accepted after it passes
the a posteriori certificate: the dimension matches the orbit formula
and every full cycle path B is nonzero and annihilated by the radical
on both sides.
"""

from dataclasses import dataclass

from . import linalg
from .quiver import require_assumptions, virtual_arrows


class DimensionMismatch(RuntimeError):
    """Internal consistency failure of the quotient construction."""


class SingularSocle(RuntimeError):
    """A socle element outside the span of the cycle paths was found."""

    def __init__(self, vertex, witness, socle_dims):
        self.vertex = vertex
        self.witness = witness  # list of (coeff, word)
        self.socle_dims = socle_dims
        terms = " + ".join(f"({c})*{'*'.join(w)}" for c, w in witness)
        super().__init__(
            f"socle of the projective at vertex {vertex} has dimension "
            f"{socle_dims[vertex]}; extra element {terms}"
        )


@dataclass(frozen=True)
class CyclePaths:
    arrow: str
    a_word: tuple
    a_prime_word: tuple
    b_word: tuple


@dataclass(frozen=True)
class Relation:
    terms: tuple  # ((coeff, word), ...) with nonempty words
    source: object
    target: object
    tag: str


def g_run(tq, arrow, length):
    """The path that starts with `arrow` and follows g."""
    out = []
    cur = arrow
    for _ in range(length):
        out.append(cur)
        cur = tq.g[cur]
    return tuple(out)


def cycle_paths(spec, arrow):
    q = spec.q(arrow)
    b = g_run(spec.tq, arrow, q)
    return CyclePaths(arrow, b[: q - 1], b[1 : q - 1], b)


def relation_generators(spec, kind="weighted"):
    """The defining generators of the selected quotient's ideal.

    For the full quotient these are, per arrow a: the cyclic relation
    a.f(a) - c A', and the two zero monomials a.f(a).g(f(a)) and
    a.g(a).f(g(a)).  A zero monomial is omitted when it is not actually a
    relation: besides the two standard virtual exceptions, this happens
    whenever every interior letter of the companion cycle path A_bar(a)
    has a virtual partner arrow -- the cyclic relations then rewrite the
    monomial into a nonzero multiple of a shorter cycle path.
    """
    require_assumptions(spec)
    tq = spec.tq
    field = spec.field
    virt = virtual_arrows(spec)
    gens = []
    if kind == "weighted":
        for a in tq.f:
            fa = tq.f[a]
            bar = tq.bar[a]
            cbar = spec.c_of(bar)
            a_bar = cycle_paths(spec, bar).a_word
            gens.append(
                Relation(
                    ((field.one, (a, fa)), (field.neg(cbar), a_bar)),
                    tq.source(a),
                    tq.target(fa),
                    "cyclic",
                )
            )
        for a in tq.f:
            fa = tq.f[a]
            inner = cycle_paths(spec, tq.bar[a]).a_word[1:]
            companion_ok = any(tq.bar[x] not in virt for x in inner)
            if tq.f[fa] not in virt and companion_ok:
                w = (a, fa, tq.g[fa])
                gens.append(Relation(((field.one, w),), tq.source(a), tq.target(w[-1]), "zero-ffg"))
            ga = tq.g[a]
            if fa not in virt and companion_ok:
                w = (a, ga, tq.f[ga])
                gens.append(Relation(((field.one, w),), tq.source(a), tq.target(w[-1]), "zero-ggf"))
    elif kind == "biserial":
        for a in tq.f:
            fa = tq.f[a]
            gens.append(Relation(((field.one, (a, fa)),), tq.source(a), tq.target(fa), "zero-ff"))
        for a in tq.f:
            bar = tq.bar[a]
            gens.append(
                Relation(
                    (
                        (spec.c_of(a), cycle_paths(spec, a).b_word),
                        (field.neg(spec.c_of(bar)), cycle_paths(spec, bar).b_word),
                    ),
                    tq.source(a),
                    tq.source(a),
                    "socle",
                )
            )
    elif kind == "string":
        for a in tq.f:
            fa = tq.f[a]
            gens.append(Relation(((field.one, (a, fa)),), tq.source(a), tq.target(fa), "zero-ff"))
        for a in tq.f:
            w = cycle_paths(spec, a).a_word
            gens.append(Relation(((field.one, w),), tq.source(a), tq.target(w[-1]), "zero-run"))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return gens


def string_dim_formula(spec):
    """Vertex count plus the clean g-run count of the monomial quotient."""
    return len(spec.quiver.vertices) + sum(
        max(spec.q(a.name) - 2, 0) for a in spec.quiver.arrows
    )


# ---------------------------------------------------------------------------
# quotient machinery


def _forbidden_and_rules(generators, field):
    forbidden = set()
    rules = {}
    for rel in generators:
        if len(rel.terms) == 1:
            forbidden.add(rel.terms[0][1])
        elif len(rel.terms) == 2:
            (c1, w1), (c2, w2) = rel.terms
            if len(w1) == len(w2):
                continue
            if len(w1) > len(w2):
                (c1, w1), (c2, w2) = (c2, w2), (c1, w1)
            if w2 not in rules:
                rules[w2] = (field.neg(field.div(c1, c2)), w1)
    return forbidden, rules


def _contains_forbidden(word, forbidden, forb_lens):
    for ln in forb_lens:
        if ln > len(word):
            continue
        for k in range(len(word) - ln + 1):
            if word[k : k + ln] in forbidden:
                return True
    return False


class _Reducer:
    """Shorten overlong words with the invertible rules; drop zeroes."""

    def __init__(self, field, forbidden, rules, cap):
        self.field = field
        self.forbidden = forbidden
        self.forb_lens = sorted({len(w) for w in forbidden}, reverse=True)
        self.rules = rules
        self.rule_lens = sorted({len(w) for w in rules}, reverse=True)
        self.cap = cap

    def is_zero(self, word):
        return _contains_forbidden(word, self.forbidden, self.forb_lens)

    def reduce(self, coeff, word):
        """Return (coeff, word-with-len<=cap) or None when the word is 0."""
        field = self.field
        while True:
            if self.is_zero(word):
                return None
            if len(word) <= self.cap:
                return coeff, word
            hit = None
            for ln in self.rule_lens:
                if ln > len(word):
                    continue
                for k in range(len(word) - ln + 1):
                    sub = word[k : k + ln]
                    if sub in self.rules:
                        hit = (k, ln, self.rules[sub])
                        break
                if hit:
                    break
            if hit is None:
                raise DimensionMismatch(
                    f"path of length {len(word)} cannot be shortened into the "
                    f"window of length {self.cap}"
                )
            k, ln, (rc, repl) = hit
            coeff = field.mul(coeff, rc)
            word = word[:k] + repl + word[k + ln :]


def _enumerate_paths(quiver, cap, reducer):
    """All zero-free paths of length <= cap, as (word, source, target)."""
    arrows_from = {v: sorted(quiver.arrows_from(v)) for v in quiver.vertices}
    paths = []
    for v in quiver.vertices:
        paths.append(((), v, v))
        stack = [((), v)]
        while stack:
            word, at = stack.pop()
            if len(word) == cap:
                continue
            for a in arrows_from[at]:
                nw = word + (a,)
                # the prefix is clean, so only new suffixes can be zero
                bad = False
                for ln in reducer.forb_lens:
                    if ln <= len(nw) and nw[len(nw) - ln :] in reducer.forbidden:
                        bad = True
                        break
                if bad:
                    continue
                paths.append((nw, v, quiver.target(a)))
                stack.append((nw, quiver.target(a)))
    return paths


class _Block:
    """One (source, target) block of the windowed quotient."""

    def __init__(self, field, cols):
        # columns ordered longest first so the short paths survive as
        # quotient coordinates
        self.field = field
        self.cols = sorted(cols, key=lambda w: (-len(w), w))
        self.colindex = {w: k for k, w in enumerate(self.cols)}
        self.rows = []
        self.pivots = []
        self.row_of_pivot = {}
        self.quot_cols = []
        self.quot_index = {}

    def close(self, raw_rows, field):
        seen = set()
        dense = []
        for row in raw_rows:
            items = tuple(sorted(row.items()))
            if not items:
                continue
            lead = items[0][1]
            key = tuple((k, field.to_json(field.div(c, lead))) for k, c in items)
            if key in seen:
                continue
            seen.add(key)
            vec = [field.zero] * len(self.cols)
            for k, c in items:
                vec[k] = c
            dense.append(vec)
        if dense:
            self.rows, self.pivots = linalg.rref(dense, field)
        self.row_of_pivot = {c: k for k, c in enumerate(self.pivots)}
        pivset = set(self.pivots)
        self.quot_cols = [k for k in range(len(self.cols)) if k not in pivset]
        self.quot_index = {c: k for k, c in enumerate(self.quot_cols)}

    def class_of_sparse(self, sparse):
        """Quotient coordinates of a sparse column vector."""
        field = self.field
        out = {}
        for col, c in sparse.items():
            if col in self.row_of_pivot:
                row = self.rows[self.row_of_pivot[col]]
                for qc in self.quot_cols:
                    if row[qc] != field.zero:
                        k = self.quot_index[qc]
                        out[k] = field.sub(out.get(k, field.zero), field.mul(c, row[qc]))
            else:
                k = self.quot_index[col]
                out[k] = field.add(out.get(k, field.zero), c)
        return {k: v for k, v in out.items() if v != field.zero}

    @property
    def dim(self):
        return len(self.quot_cols)


def _canonical_words(spec, style):
    """Per-vertex canonical basis data: (vertex, word, scale, role, label)."""
    tq = spec.tq
    field = spec.field
    virt = virtual_arrows(spec)
    out = []
    for v in spec.quiver.vertices:
        a1, a2 = sorted(spec.quiver.arrows_from(v))
        out.append((v, (), field.one, "idempotent", f"e_{v}"))
        virtual_here = None
        if style == "weighted":
            if a1 in virt and a2 not in virt:
                virtual_here = (a1, a2)
            elif a2 in virt and a1 not in virt:
                virtual_here = (a2, a1)
        if virtual_here:
            va, other = virtual_here
            b_word = cycle_paths(spec, other).b_word
            subs = [b_word[:k] for k in range(1, len(b_word))]
            for w in sorted(subs, key=lambda w: (len(w), w)):
                out.append((v, w, field.one, "radical", "*".join(w)))
            out.append((v, b_word, field.one, "socle", "*".join(b_word)))
            short = (other, tq.f[other])
            out.append((v, short, field.one, "radical", "*".join(short)))
        else:
            words = []
            for a in (a1, a2):
                b_word = cycle_paths(spec, a).b_word
                words.extend(b_word[:k] for k in range(1, len(b_word)))
            for w in sorted(set(words), key=lambda w: (len(w), w)):
                out.append((v, w, field.one, "radical", "*".join(w)))
            out.append((v, cycle_paths(spec, a1).b_word, spec.c_of(a1), "socle", f"w_{v}"))
    return out


class AlgebraTable:
    """Finite-dimensional algebra on a labeled basis with structure constants."""

    def __init__(self, spec, kind, basis, blocks, reducer, cap):
        self.spec = spec
        self.kind = kind
        self.field = spec.field
        self.basis = basis  # list of dicts: label/source/target/word/scale/role
        self.blocks = blocks
        self.reducer = reducer
        self.cap = cap
        self.dim = len(basis)
        self.index = {b["label"]: k for k, b in enumerate(basis)}
        self.idempotents = {}
        self.socle_index = {}
        for k, b in enumerate(basis):
            if b["role"] == "idempotent":
                self.idempotents[b["source"]] = k
            elif b["role"] == "socle":
                self.socle_index[b["source"]] = k
        self._by_block = {}
        for k, b in enumerate(basis):
            self._by_block.setdefault((b["source"], b["target"]), []).append(k)
        self._block_inv = {}
        self._rmul = {}
        self._lmul = {}
        self._sc = None

    # -- construction helpers -------------------------------------------

    def _canon_from_quot(self, blockkey, quot_sparse):
        if not quot_sparse:
            return {}
        inv = self._block_inv[blockkey]
        members = self._by_block.get(blockkey, [])
        field = self.field
        out = {}
        for q, c in quot_sparse.items():
            row = inv[q]
            for j, gk in enumerate(members):
                if row[j] != field.zero:
                    out[gk] = field.add(out.get(gk, field.zero), field.mul(c, row[j]))
        return {k: v for k, v in out.items() if v != field.zero}

    def _extract_canonical(self):
        field = self.field
        for blockkey, block in self.blocks.items():
            members = self._by_block.get(blockkey, [])
            if len(members) != block.dim:
                raise DimensionMismatch(
                    f"block {blockkey}: {len(members)} canonical words for "
                    f"a quotient of dimension {block.dim}"
                )
            if not members:
                continue
            rows = []
            for k in members:
                b = self.basis[k]
                col = block.colindex.get(b["word"])
                if col is None:
                    raise DimensionMismatch(
                        f"canonical word {b['label']} vanished from the window"
                    )
                cls = block.class_of_sparse({col: b["scale"]})
                vec = [field.zero] * block.dim
                for q, c in cls.items():
                    vec[q] = c
                rows.append(vec)
            try:
                cinv = linalg.inv(rows, field)
            except ValueError:
                raise DimensionMismatch(
                    f"canonical words of block {blockkey} are linearly dependent"
                ) from None
            self._block_inv[blockkey] = cinv

    def _word_class(self, word, source):
        """Canonical coordinates of a path class (any length)."""
        field = self.field
        if not word:
            return {self.idempotents[source]: field.one}
        red = self.reducer.reduce(field.one, word)
        if red is None:
            return {}
        coeff, word = red
        quiver = self.spec.quiver
        blockkey = (source, quiver.target(word[-1]))
        block = self.blocks[blockkey]
        col = block.colindex.get(word)
        if col is None:
            # shortened word may still be absent when it contains a zero
            return {}
        return self._canon_from_quot(blockkey, block.class_of_sparse({col: coeff}))

    def _build_mult(self):
        field = self.field
        quiver = self.spec.quiver
        arrows = [a.name for a in quiver.arrows]
        for a in arrows:
            sa, ta = quiver.source(a), quiver.target(a)
            rows = {}
            for k, b in enumerate(self.basis):
                if b["target"] != sa:
                    continue
                vec = self._scaled_word_class(b["word"] + (a,), b["source"], b["scale"])
                if vec:
                    rows[k] = vec
            self._rmul[a] = rows
            lrows = {}
            for k, b in enumerate(self.basis):
                if b["source"] != ta:
                    continue
                vec = self._scaled_word_class((a,) + b["word"], sa, b["scale"])
                if vec:
                    lrows[k] = vec
            self._lmul[a] = lrows

    def _scaled_word_class(self, word, source, scale):
        vec = self._word_class(word, source)
        if scale == self.field.one:
            return vec
        return {k: self.field.mul(scale, c) for k, c in vec.items()}

    # -- public vector operations ----------------------------------------

    def zero_vec(self):
        return {}

    def unit_vec(self, k):
        return {k: self.field.one}

    def idempotent_vec(self, v):
        return {self.idempotents[v]: self.field.one}

    def identity_vec(self):
        return {k: self.field.one for k in self.idempotents.values()}

    def omega_vec(self, v):
        """The socle generator c_a B_a of the projective at v."""
        k = self.socle_index[v]
        b = self.basis[k]
        # the basis element is scale * B-word while omega is c * B-word
        return {k: self.field.div(self.spec.c_of(b["word"][0]), b["scale"])}

    def rmul_arrow(self, vec, a):
        field = self.field
        rows = self._rmul[a]
        out = {}
        for k, c in vec.items():
            row = rows.get(k)
            if not row:
                continue
            for j, r in row.items():
                out[j] = field.add(out.get(j, field.zero), field.mul(c, r))
        return {k: v for k, v in out.items() if v != field.zero}

    def lmul_arrow(self, a, vec):
        field = self.field
        rows = self._lmul[a]
        out = {}
        for k, c in vec.items():
            row = rows.get(k)
            if not row:
                continue
            for j, r in row.items():
                out[j] = field.add(out.get(j, field.zero), field.mul(c, r))
        return {k: v for k, v in out.items() if v != field.zero}

    def rmul_word(self, vec, word):
        for a in word:
            if not vec:
                return {}
            vec = self.rmul_arrow(vec, a)
        return vec

    def path_class(self, word, source=None):
        if not word:
            if source is None:
                raise ValueError("empty path needs a source vertex")
            return self.idempotent_vec(source)
        return self._word_class(tuple(word), self.spec.quiver.source(word[0]))

    def structure_constants(self):
        if self._sc is None:
            sc = {}
            field = self.field
            for x, bx in enumerate(self.basis):
                for y, by in enumerate(self.basis):
                    if bx["target"] != by["source"]:
                        continue
                    vec = self.rmul_word(self.unit_vec(x), by["word"])
                    if by["scale"] != field.one:
                        vec = {k: field.mul(by["scale"], c) for k, c in vec.items()}
                    if vec:
                        sc[(x, y)] = vec
            self._sc = sc
        return self._sc

    def mul_basis(self, x, y):
        return dict(self.structure_constants().get((x, y), {}))

    def mul_vec(self, xvec, yvec):
        field = self.field
        sc = self.structure_constants()
        out = {}
        for x, cx in xvec.items():
            for y, cy in yvec.items():
                prod = sc.get((x, y))
                if not prod:
                    continue
                c = field.mul(cx, cy)
                for k, v in prod.items():
                    out[k] = field.add(out.get(k, field.zero), field.mul(c, v))
        return {k: v for k, v in out.items() if v != field.zero}

    def vec_to_terms(self, vec):
        return sorted((k, c) for k, c in vec.items())

    # -- serialization ----------------------------------------------------

    def to_json_obj(self):
        field = self.field
        sc = self.structure_constants()
        products = []
        for (x, y), vec in sorted(sc.items()):
            for k in sorted(vec):
                products.append([x, y, k, field.to_json(vec[k])])
        return {
            "format": "surfalg-table/1",
            "generator": "surfalg 0.1.0",
            "kind": self.kind,
            "field": field.name,
            "vertices": [str(v) for v in self.spec.quiver.vertices],
            "basis": [
                {
                    "label": b["label"],
                    "source": str(b["source"]),
                    "target": str(b["target"]),
                    "word": list(b["word"]),
                    "scale": field.to_json(b["scale"]),
                    "role": b["role"],
                }
                for b in self.basis
            ],
            "idempotents": {str(v): k for v, k in self.idempotents.items()},
            "socle": {str(v): k for v, k in self.socle_index.items()},
            "products": products,
        }


class SerializedTable:
    """A table re-ingested from its canonical JSON document."""

    def __init__(self, obj, field):
        self.obj = obj
        self.field = field
        self.dim = len(obj["basis"])

    def to_json_obj(self):
        return self.obj

    def mul_basis(self, x, y):
        out = {}
        for (px, py, k, c) in self.obj["products"]:
            if px == x and py == y:
                out[k] = self.field.from_json(c)
        return out


def table_from_json(obj):
    """Re-ingest a serialized table (dict or JSON text)."""
    import json as _json

    from .fields import field_from_name

    if isinstance(obj, str):
        obj = _json.loads(obj)
    if obj.get("format") != "surfalg-table/1":
        raise ValueError("not a surfalg table document")
    return SerializedTable(obj, field_from_name(obj["field"]))


def canonical_json(obj):
    import json as _json

    return _json.dumps(obj, sort_keys=True, separators=(",", ":"))


def multiply(table, x, y):
    """Bilinear extension of the structure constants to coefficient vectors."""
    if isinstance(x, (list, tuple)):
        if len(x) != table.dim or len(y) != table.dim:
            raise ValueError("coefficient vector length mismatch")
        x = {k: c for k, c in enumerate(x) if c != table.field.zero}
        y = {k: c for k, c in enumerate(y) if c != table.field.zero}
    return table.mul_vec(x, y)


# ---------------------------------------------------------------------------
# the build


def _quotient_socle(spec, blocks, reducer):
    """Per-vertex socle dimensions and witnesses, on quotient coordinates."""
    field = spec.field
    quiver = spec.quiver
    arrows = [a.name for a in quiver.arrows]
    result = {}
    for v in quiver.vertices:
        coords = []
        for (i, j), block in blocks.items():
            if i == v:
                coords.extend(((i, j), q) for q in range(block.dim))
        if not coords:
            result[v] = (0, [])
            continue
        cindex = {c: k for k, c in enumerate(coords)}
        rows = []
        out_cols = {}
        ncols = 0
        images = []
        for (blockkey, q) in coords:
            block = blocks[blockkey]
            path = block.cols[block.quot_cols[q]]
            img = {}
            for a in arrows:
                if quiver.source(a) != blockkey[1]:
                    continue
                word = path + (a,)
                red = reducer.reduce(field.one, word)
                if red is None:
                    continue
                coeff, rword = red
                tkey = (v, quiver.target(a))
                tblock = blocks[tkey]
                col = tblock.colindex.get(rword)
                if col is None:
                    continue
                for qq, c in tblock.class_of_sparse({col: coeff}).items():
                    ck = (a, tkey, qq)
                    if ck not in out_cols:
                        out_cols[ck] = ncols
                        ncols += 1
                    img[out_cols[ck]] = field.add(img.get(out_cols[ck], field.zero), c)
            images.append(img)
        for img in images:
            rows.append([img.get(c, field.zero) for c in range(ncols)])
        if ncols == 0:
            kernel_rows = [
                [field.one if t == s else field.zero for t in range(len(coords))]
                for s in range(len(coords))
            ]
        else:
            transpose = [[rows[r][c] for r in range(len(coords))] for c in range(ncols)]
            kernel_rows = linalg.nullspace(transpose, field)
        witnesses = []
        for vec in kernel_rows:
            terms = []
            for k, c in enumerate(vec):
                if c != field.zero:
                    blockkey, q = coords[k]
                    block = blocks[blockkey]
                    terms.append((c, block.cols[block.quot_cols[q]]))
            witnesses.append(terms)
        result[v] = (len(kernel_rows), witnesses)
    return result


def _socle_witness(spec, blocks, reducer, v, witnesses):
    """A socle element at v independent of the cycle-path class."""
    field = spec.field
    a1 = sorted(spec.quiver.arrows_from(v))[0]
    b_word = cycle_paths(spec, a1).b_word
    block = blocks[(v, v)]
    omega = block.class_of_sparse({block.colindex[b_word]: field.one})

    def quot_vv(terms):
        """Quotient coordinates of the (v, v)-block part, or None if mixed."""
        vec = {}
        for c, w in terms:
            tgt = spec.quiver.target(w[-1]) if w else v
            if tgt != v:
                return None
            for q, cc in block.class_of_sparse({block.colindex[w]: c}).items():
                vec[q] = field.add(vec.get(q, field.zero), cc)
        return {q: c for q, c in vec.items() if c != field.zero}

    for terms in witnesses:
        vec = quot_vv(terms)
        if vec is None:
            return terms  # socle mass outside the (v, v) block is already extra
        ratio = None
        proportional = bool(omega)
        for q in set(vec) | set(omega):
            a = vec.get(q, field.zero)
            b = omega.get(q, field.zero)
            if b == field.zero:
                if a != field.zero:
                    proportional = False
                    break
                continue
            r = field.div(a, b)
            if ratio is None:
                ratio = r
            elif r != ratio:
                proportional = False
                break
        if not proportional:
            return terms
    return witnesses[0] if witnesses else []


def build_algebra(spec, kind="weighted", n_extra=0, allow_singular=False,
                  generators=None, basis_style=None, expected_dim=None):
    """Build the multiplication table of the selected quotient.

    `generators`, `basis_style` and `expected_dim` exist for the
    degeneration families, which reuse this machinery with their own
    relation sets.
    """
    require_assumptions(spec)
    field = spec.field
    quiver = spec.quiver
    cap = max(spec.q(a.name) for a in quiver.arrows) + 2 + n_extra
    if generators is None:
        generators = relation_generators(spec, kind)
    if basis_style is None:
        basis_style = {"weighted": "weighted", "biserial": "uniform", "string": "paths"}[kind]
    if expected_dim is None:
        expected_dim = string_dim_formula(spec) if kind == "string" else spec.dim_formula()

    forbidden, rules = _forbidden_and_rules(generators, field)
    reducer = _Reducer(field, forbidden, rules, cap)
    paths = _enumerate_paths(quiver, cap, reducer)

    by_block = {}
    for word, src, tgt in paths:
        by_block.setdefault((src, tgt), []).append(word)
    blocks = {}
    for v in quiver.vertices:
        for w in quiver.vertices:
            blocks[(v, w)] = _Block(field, by_block.get((v, w), []))

    paths_into = {}
    paths_from = {}
    for word, src, tgt in paths:
        paths_into.setdefault(tgt, []).append((word, src))
        paths_from.setdefault(src, []).append((word, tgt))

    raw_rows = {key: [] for key in blocks}
    for rel in generators:
        minlen = min(len(w) for _, w in rel.terms)
        for pword, psrc in paths_into.get(rel.source, []):
            room = cap - minlen - len(pword)
            if room < 0:
                continue
            for sword, stgt in paths_from.get(rel.target, []):
                if len(sword) > room:
                    continue
                row = {}
                blockkey = (psrc, stgt)
                block = blocks[blockkey]
                for coeff, w in rel.terms:
                    red = reducer.reduce(coeff, pword + w + sword)
                    if red is None:
                        continue
                    c, rw = red
                    col = block.colindex.get(rw)
                    if col is None:
                        continue
                    row[col] = field.add(row.get(col, field.zero), c)
                row = {k: v for k, v in row.items() if v != field.zero}
                if row:
                    raw_rows[blockkey].append(row)

    for key, block in blocks.items():
        block.close(raw_rows[key], field)

    dim = sum(block.dim for block in blocks.values())
    if dim != expected_dim:
        raise DimensionMismatch(
            f"quotient dimension {dim} != expected {expected_dim} (kind={kind})"
        )

    singular_info = None
    if basis_style == "weighted":
        socle_data = _quotient_socle(spec, blocks, reducer)
        socle_dims = {v: d for v, (d, _) in socle_data.items()}
        for v, (d, witnesses) in socle_data.items():
            if d > 1:
                witness = _socle_witness(spec, blocks, reducer, v, witnesses)
                singular_info = (v, witness, socle_dims)
                if not allow_singular:
                    raise SingularSocle(v, witness, socle_dims)
                break

    basis = []
    if basis_style == "paths":
        for v in quiver.vertices:
            basis.append({"label": f"e_{v}", "source": v, "target": v,
                          "word": (), "scale": field.one, "role": "idempotent"})
        words = sorted(
            (w for w, _, _ in paths if w),
            key=lambda w: (len(w), w),
        )
        # only quotient-surviving paths are basis words in the monomial case
        for w in words:
            src = quiver.source(w[0])
            tgt = quiver.target(w[-1])
            block = blocks[(src, tgt)]
            col = block.colindex[w]
            if col in block.quot_index:
                basis.append({"label": "*".join(w), "source": src, "target": tgt,
                              "word": w, "scale": field.one, "role": "radical"})
    else:
        for v, word, scale, role, label in _canonical_words(spec, basis_style):
            tgt = v if not word else quiver.target(word[-1])
            basis.append({"label": label, "source": v, "target": tgt,
                          "word": word, "scale": scale, "role": role})

    table = AlgebraTable(spec, kind, basis, blocks, reducer, cap)
    table._extract_canonical()
    table._build_mult()
    table.singular = singular_info is not None
    table.singular_info = singular_info

    if basis_style != "paths":
        _certify(table)
    return table


def _certify(table):
    """B nonzero and B . rad = rad . B = 0, for the cycle path of every arrow."""
    spec = table.spec
    field = table.field
    quiver = spec.quiver
    for a in quiver.arrows:
        b_word = cycle_paths(spec, a.name).b_word
        vec = table.path_class(b_word)
        if not vec:
            raise DimensionMismatch(f"cycle path of {a.name} vanished")
        for x in quiver.arrows:
            if quiver.source(x.name) == quiver.target(b_word[-1]):
                if table.rmul_arrow(vec, x.name):
                    raise DimensionMismatch(
                        f"cycle path of {a.name} not annihilated by {x.name} on the right"
                    )
            if quiver.target(x.name) == quiver.source(a.name):
                if table.lmul_arrow(x.name, vec):
                    raise DimensionMismatch(
                        f"cycle path of {a.name} not annihilated by {x.name} on the left"
                    )


# ---------------------------------------------------------------------------
# invariants of a built table


def socle(table):
    """Right-socle basis per vertex plus the singularity verdict."""
    field = table.field
    quiver = table.spec.quiver
    arrows = [a.name for a in quiver.arrows]
    per_vertex = {}
    singular = False
    for v in quiver.vertices:
        rows_idx = [k for k, b in enumerate(table.basis) if b["source"] == v]
        if not rows_idx:
            per_vertex[v] = []
            continue
        mat = []
        for k in rows_idx:
            img = []
            for a in arrows:
                row = table._rmul[a].get(k, {})
                img.extend(row.get(j, field.zero) for j in range(table.dim))
            mat.append(img)
        transpose = [[mat[r][c] for r in range(len(rows_idx))] for c in range(len(mat[0]))]
        kernel_rows = linalg.nullspace(transpose, field)
        basis_vecs = []
        for vec in kernel_rows:
            basis_vecs.append({rows_idx[k]: c for k, c in enumerate(vec) if c != field.zero})
        per_vertex[v] = basis_vecs
        if len(basis_vecs) > 1:
            singular = True
    return per_vertex, ("singular" if singular else "simple-socles")


def cartan_matrix(table):
    """Entry (i, j) counts basis elements of e_j . A . e_i."""
    verts = list(table.spec.quiver.vertices)
    counts = {}
    for b in table.basis:
        counts[(b["source"], b["target"])] = counts.get((b["source"], b["target"]), 0) + 1
    return [[counts.get((j, i), 0) for j in verts] for i in verts]


def _socle_pins(table):
    """Prescribed form values on the socle: 1/c on the full cycle path."""
    field = table.field
    pins = {}
    for v, k in table.socle_index.items():
        b = table.basis[k]
        pins[k] = field.div(b["scale"], table.spec.c_of(b["word"][0]))
    return pins


def _gram_of_phi(table, phi):
    field = table.field
    n = table.dim
    gram = [[field.zero] * n for _ in range(n)]
    for (x, y), vec in table.structure_constants().items():
        val = field.zero
        for k, c in vec.items():
            if k in phi:
                val = field.add(val, field.mul(c, phi[k]))
        if val != field.zero:
            gram[x][y] = val
    return gram


def symmetrizing_phi(table):
    """Coefficient vector of the symmetrizing trace form.

    The closed formula (1/c on each full cycle path, 0 elsewhere) is used
    whenever it is central.  On the exceptional configurations where the
    cyclic relations shortcut through a virtual pair it is not; then the
    centrality equations phi(xy) = phi(yx) are solved with the socle
    values pinned, which extends the support by the few shortcut words.
    """
    if getattr(table, "_phi", None) is not None:
        return table._phi
    field = table.field
    n = table.dim
    pins = _socle_pins(table)
    gram = _gram_of_phi(table, pins)
    if all(gram[i][j] == gram[j][i] for i in range(n) for j in range(n)):
        table._phi = pins
        return pins
    sc = table.structure_constants()
    rows = []
    rhs = []
    for x in range(n):
        for y in range(x + 1, n):
            d = {}
            for k, c in sc.get((x, y), {}).items():
                d[k] = field.add(d.get(k, field.zero), c)
            for k, c in sc.get((y, x), {}).items():
                d[k] = field.sub(d.get(k, field.zero), c)
            if any(c != field.zero for c in d.values()):
                rows.append([d.get(k, field.zero) for k in range(n)])
                rhs.append([field.zero])
    for k, val in pins.items():
        row = [field.zero] * n
        row[k] = field.one
        rows.append(row)
        rhs.append([val])
    sol = linalg.solve(rows, rhs, field)
    if sol is None:
        table._phi = pins  # defect signal: caller sees the asymmetric Gram
        return pins
    phi = {k: sol[k][0] for k in range(n) if sol[k][0] != field.zero}
    table._phi = phi
    return phi


def symmetrizing_form(table, spec=None):
    """Gram matrix of the trace form and its (symmetric, nondegenerate) verdict."""
    field = table.field
    n = table.dim
    phi = symmetrizing_phi(table)
    gram = _gram_of_phi(table, phi)
    symmetric = all(gram[i][j] == gram[j][i] for i in range(n) for j in range(n))
    nondegenerate = linalg.rank(gram, field) == n
    adjusted = set(phi) != set(_socle_pins(table))
    verdict = {"symmetric": symmetric, "nondegenerate": nondegenerate,
               "adjusted": adjusted}
    return gram, verdict


def form_value(table, vec, spec=None):
    """The trace form applied to a coefficient vector."""
    field = table.field
    phi = symmetrizing_phi(table)
    val = field.zero
    for k, c in vec.items():
        if k in phi:
            val = field.add(val, field.mul(c, phi[k]))
    return val
