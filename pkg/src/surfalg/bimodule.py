"""The 4-term bimodule resolution and the period-4 certificate.

Bimodules over the algebra are handled as modules over the enveloping
algebra with the Kronecker basis: a projective summand (a, b) has basis
u (x) w with u running over the basis of the left ideal at a and w over
the right ideal at b.  The three differentials are given on generators
and extended bimodule-linearly.
"""

from dataclasses import dataclass

from . import linalg
from .algebra import cycle_paths, symmetrizing_phi, _gram_of_phi


class CapExceeded(RuntimeError):
    pass


class SingularInput(RuntimeError):
    pass


@dataclass
class Summand:
    left: object   # vertex a: the summand is (ideal at a) (x) (ideal at b)
    right: object
    tag: str


class BiProjective:
    """Direct sum of bimodule projectives with the Kronecker basis."""

    def __init__(self, table, summands):
        self.table = table
        self.summands = summands
        self.basis = []
        left_of = {}
        right_of = {}
        for v in table.spec.quiver.vertices:
            left_of[v] = [k for k, b in enumerate(table.basis) if b["target"] == v]
            right_of[v] = [k for k, b in enumerate(table.basis) if b["source"] == v]
        for snum, s in enumerate(summands):
            for u in left_of[s.left]:
                for w in right_of[s.right]:
                    self.basis.append((snum, u, w))
        self.index = {t: k for k, t in enumerate(self.basis)}

    @property
    def dim(self):
        return len(self.basis)

    def tensor_coords(self, snum, lvec, rvec):
        """Coordinates of sum(lvec) (x) sum(rvec) inside summand snum."""
        field = self.table.field
        out = {}
        for u, cu in lvec.items():
            for w, cw in rvec.items():
                k = self.index.get((snum, u, w))
                if k is None:
                    raise RuntimeError("tensor term outside the summand grading")
                out[k] = field.add(out.get(k, field.zero), field.mul(cu, cw))
        return {k: c for k, c in out.items() if c != field.zero}


def _lmul_vec(table, u, vec):
    """Left multiply a coefficient vector by the basis element u."""
    field = table.field
    sc = table.structure_constants()
    out = {}
    for x, cx in vec.items():
        prod = sc.get((u, x))
        if not prod:
            continue
        for k, c in prod.items():
            out[k] = field.add(out.get(k, field.zero), field.mul(cx, c))
    return {k: c for k, c in out.items() if c != field.zero}


def _rmul_vec(table, vec, w):
    field = table.field
    sc = table.structure_constants()
    out = {}
    for x, cx in vec.items():
        prod = sc.get((x, w))
        if not prod:
            continue
        for k, c in prod.items():
            out[k] = field.add(out.get(k, field.zero), field.mul(cx, c))
    return {k: c for k, c in out.items() if c != field.zero}


class BiMap:
    """Bimodule map between BiProjectives, given on summand generators.

    Generator images are lists of (target summand, left vector, right
    vector) simple tensors.
    """

    def __init__(self, source, target, gen_images):
        self.source = source
        self.target = target
        self.gen_images = gen_images
        self._matrix = None

    def image_of_basis(self, snum, u, w):
        table = self.source.table
        out = {}
        field = table.field
        for (tsum, lvec, rvec) in self.gen_images[snum]:
            lv = _lmul_vec(table, u, lvec)
            if not lv:
                continue
            rv = _rmul_vec(table, rvec, w)
            if not rv:
                continue
            for k, c in self.target.tensor_coords(tsum, lv, rv).items():
                out[k] = field.add(out.get(k, field.zero), c)
        return {k: c for k, c in out.items() if c != field.zero}

    def matrix(self):
        """Dense matrix, rows = source basis, columns = target basis."""
        if self._matrix is None:
            field = self.source.table.field
            rows = []
            for (snum, u, w) in self.source.basis:
                row = [field.zero] * self.target.dim
                for k, c in self.image_of_basis(snum, u, w).items():
                    row[k] = c
                rows.append(row)
            self._matrix = rows
        return self._matrix

    def apply(self, vec):
        field = self.source.table.field
        out = {}
        for k, c in vec.items():
            snum, u, w = self.source.basis[k]
            for j, d in self.image_of_basis(snum, u, w).items():
                out[j] = field.add(out.get(j, field.zero), field.mul(c, d))
        return {k: c for k, c in out.items() if c != field.zero}


@dataclass
class BimoduleResolution:
    table: object
    p0: BiProjective
    p1: BiProjective
    p2: BiProjective
    p3: BiProjective
    d1: BiMap
    r_map: BiMap
    s_map: BiMap
    psi: dict  # vertex -> vector in p2
    p2_arrows: list
    p1_arrows: list

    def dims(self):
        return {
            "P0": self.p0.dim,
            "P1": self.p1.dim,
            "P2": self.p2.dim,
            "P3": self.p3.dim,
        }


def _expand_virtual(spec, arrow, depth=0):
    """Rewrite a virtual arrow into its length-2 word over the Gabriel quiver."""
    from .quiver import virtual_arrows

    tq = spec.tq
    virt = virtual_arrows(spec)
    if arrow not in virt:
        return (arrow,)
    if depth > 4:
        raise RuntimeError("virtual expansion did not terminate")
    bar = tq.bar[arrow]
    out = ()
    for x in (bar, tq.f[bar]):
        out = out + _expand_virtual(spec, x, depth + 1)
    return out


def _rho(table, word, coeff, arrow_index):
    """The element sum prefix (x) suffix of the level-one projective."""
    spec = table.spec
    quiver = spec.quiver
    out = []
    for r, a in enumerate(word):
        prefix = word[:r]
        suffix = word[r + 1 :]
        src = quiver.source(word[0])
        lvec = table.path_class(prefix, source=src) if not prefix else table.path_class(prefix)
        if not lvec:
            continue
        if coeff != table.field.one:
            lvec = {k: table.field.mul(coeff, c) for k, c in lvec.items()}
        rvec = (
            table.path_class(suffix)
            if suffix
            else table.idempotent_vec(quiver.target(a))
        )
        if not rvec:
            continue
        out.append((arrow_index[a], lvec, rvec))
    return out


def bimodule_resolution(table, spec=None, cap=40):
    """Construct the first four terms with the differentials d1, R, S."""
    spec = table.spec if spec is None else spec
    if table.dim > cap:
        raise CapExceeded(f"algebra dimension {table.dim} exceeds the cap {cap}")
    if getattr(table, "singular", False):
        raise SingularInput("socle is singular; no bimodule certificate")
    field = table.field
    tq = spec.tq
    from .quiver import virtual_arrows

    virt = virtual_arrows(spec)
    gabriel = [a.name for a in spec.quiver.arrows if a.name not in virt]

    p0 = BiProjective(table, [Summand(v, v, f"e_{v}") for v in spec.quiver.vertices])
    p1 = BiProjective(
        table, [Summand(tq.source(a), tq.target(a), a) for a in gabriel]
    )
    p1_arrows = {a: k for k, a in enumerate(gabriel)}
    # level two: one summand per Gabriel arrow a, at the grading of the
    # cyclic relation attached to a
    p2 = BiProjective(
        table,
        [
            Summand(tq.source(tq.bar[a]), tq.target(tq.f[tq.bar[a]]), a)
            for a in gabriel
        ],
    )
    p2_arrows = {a: k for k, a in enumerate(gabriel)}
    p3 = BiProjective(table, [Summand(v, v, f"e_{v}") for v in spec.quiver.vertices])
    vert_index = {v: k for k, v in enumerate(spec.quiver.vertices)}

    # d1 on the generator of summand a: a (x) e - e (x) a
    d1_images = []
    for a in gabriel:
        av = table.path_class((a,))
        term1 = (vert_index[tq.target(a)], av, table.idempotent_vec(tq.target(a)))
        neg = {k: field.neg(c) for k, c in av.items()}
        term2 = (vert_index[tq.source(a)], table.idempotent_vec(tq.source(a)), neg)
        d1_images.append([term1, term2])
    d1 = BiMap(p1, p0, d1_images)

    # R on the generator of summand a: rho of the cyclic relation of a
    r_images = []
    for a in gabriel:
        bar = tq.bar[a]
        word = _expand_virtual(spec, bar) + _expand_virtual(spec, tq.f[bar])
        terms = _rho(table, word, field.one, p1_arrows)
        a_word = cycle_paths(spec, a).a_word
        terms += _rho(table, a_word, field.neg(spec.c_of(a)), p1_arrows)
        r_images.append(terms)
    r_map = BiMap(p2, p1, r_images)

    # S on the generator at vertex i: the alternating element psi_i
    s_images = []
    psi = {}
    for i in spec.quiver.vertices:
        a1, a2 = sorted(spec.quiver.arrows_from(i))
        terms = []
        for x, y in ((a1, a2), (a2, a1)):
            # + gen2[bar(x)] . f^2(x), present when bar(x) is not virtual
            if tq.bar[x] not in virt:
                f2x = tq.f[tq.f[x]]
                rv = table.path_class((f2x,))
                terms.append(
                    (p2_arrows[tq.bar[x]], table.idempotent_vec(i), rv)
                )
            # - x . gen2[g(x)], present when x is not virtual
            if x not in virt:
                gx = tq.g[x]
                lv = table.path_class((x,))
                lv = {k: field.neg(c) for k, c in lv.items()}
                terms.append(
                    (p2_arrows[gx], lv, table.idempotent_vec(i))
                )
        s_images.append(terms)
        vec = {}
        for (tsum, lvec, rvec) in terms:
            for k, c in p2.tensor_coords(tsum, lvec, rvec).items():
                vec[k] = field.add(vec.get(k, field.zero), c)
        psi[i] = {k: c for k, c in vec.items() if c != field.zero}
    s_map = BiMap(p3, p2, s_images)

    return BimoduleResolution(
        table, p0, p1, p2, p3, d1, r_map, s_map, psi, gabriel, gabriel
    )


def dual_basis(table):
    """The basis dual to the table basis under the symmetrizing form."""
    field = table.field
    phi = symmetrizing_phi(table)
    gram = _gram_of_phi(table, phi)
    if linalg.rank(gram, field) != table.dim:
        raise SingularInput("symmetrizing form is degenerate")
    ginv = linalg.inv(gram, field)
    duals = []
    for c in range(table.dim):
        vec = {x: ginv[x][c] for x in range(table.dim) if ginv[x][c] != field.zero}
        duals.append(vec)
    return duals


def xi_elements(table, p3):
    """xi_i = sum of b (x) b* over the basis of the right ideal at i."""
    field = table.field
    duals = dual_basis(table)
    vert_index = {v: k for k, v in enumerate(table.spec.quiver.vertices)}
    xs = {}
    for i in table.spec.quiver.vertices:
        vec = {}
        for b, elem in enumerate(table.basis):
            if elem["source"] != i:
                continue
            tsum = vert_index[elem["target"]]
            lvec = {b: field.one}
            for k, c in p3.tensor_coords(tsum, lvec, duals[b]).items():
                vec[k] = field.add(vec.get(k, field.zero), c)
        xs[i] = {k: c for k, c in vec.items() if c != field.zero}
    return xs


def _right_act(p, vec, y):
    """Right action of the basis element y on a BiProjective vector."""
    table = p.table
    field = table.field
    out = {}
    for k, c in vec.items():
        snum, u, w = p.basis[k]
        moved = _rmul_vec(table, {w: c}, y)
        for w2, c2 in moved.items():
            j = p.index[(snum, u, w2)]
            out[j] = field.add(out.get(j, field.zero), c2)
    return {k: c for k, c in out.items() if c != field.zero}


def verify_bimodule_period(table, spec=None, cap=40):
    """Run every identity of the period-4 certificate and report a verdict."""
    spec = table.spec if spec is None else spec
    res = bimodule_resolution(table, spec, cap=cap)
    field = table.field
    checks = {}

    rmat = res.r_map.matrix()
    d1mat = res.d1.matrix()
    comp = linalg.matmul(rmat, d1mat, field)
    checks["d1-after-R-zero"] = all(
        c == field.zero for row in comp for c in row
    )

    checks["R-kills-psi"] = all(
        not res.r_map.apply(vec) for vec in res.psi.values()
    )

    smat = res.s_map.matrix()
    comp2 = linalg.matmul(smat, rmat, field)
    checks["R-after-S-zero"] = all(c == field.zero for row in comp2 for c in row)

    xs = xi_elements(table, res.p3)
    checks["S-kills-xi"] = all(not res.s_map.apply(vec) for vec in xs.values())

    # theta: columns over the table basis, theta(b) = xi_{s(b)} . b
    theta_cols = []
    omega_ok = True
    vert_index = {v: k for k, v in enumerate(spec.quiver.vertices)}
    for b, elem in enumerate(table.basis):
        vec = _right_act(res.p3, xs[elem["source"]], b)
        theta_cols.append(vec)
    for i in spec.quiver.vertices:
        om = table.omega_vec(i)
        img = {}
        for b, c in om.items():
            for k, d in theta_cols[b].items():
                img[k] = field.add(img.get(k, field.zero), field.mul(c, d))
        img = {k: c for k, c in img.items() if c != field.zero}
        expected = res.p3.tensor_coords(vert_index[i], om, om)
        if not img or img != expected:
            omega_ok = False
    checks["theta-omega-diagonal"] = omega_ok

    theta_mat = []
    for b in range(table.dim):
        row = [field.zero] * res.p3.dim
        for k, c in theta_cols[b].items():
            row[k] = c
        theta_mat.append(row)
    checks["theta-injective"] = linalg.rank(theta_mat, field) == table.dim

    transpose = [[smat[r][c] for r in range(res.p3.dim)] for c in range(res.p2.dim)]
    kernel = linalg.nullspace(transpose, field)
    checks["kernel-S-dim-matches"] = len(kernel) == table.dim

    verdict = "Periodic4" if all(checks.values()) else "failed"
    return {
        "verdict": verdict,
        "checks": checks,
        "dims": res.dims(),
        "kernel_S_dim": len(kernel),
        "algebra_dim": table.dim,
    }
