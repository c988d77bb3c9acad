"""Right modules over a built table: covers, syzygies, periods, Ext data.

Modules are given by a vertex label per coordinate and one action matrix
per arrow; vectors are rows, so x.a is x @ action[a].  Kernels are
computed gradedwise so module coordinates always stay homogeneous.
"""

import random
from dataclasses import dataclass

from . import linalg


@dataclass
class RightModule:
    table: object
    vertex_of: tuple
    action: dict  # arrow -> dense matrix (dim x dim)

    @property
    def dim(self):
        return len(self.vertex_of)

    def dim_vector(self):
        out = {}
        for v in self.vertex_of:
            out[v] = out.get(v, 0) + 1
        return out

    def act_word(self, vec, word):
        field = self.table.field
        for a in word:
            if not any(x != field.zero for x in vec):
                break
            vec = _vecmat(vec, self.action[a], field)
        return vec


@dataclass
class ModuleMap:
    source: RightModule
    target: RightModule
    matrix: list  # source.dim x target.dim


def _vecmat(vec, mat, field):
    out = [field.zero] * (len(mat[0]) if mat else 0)
    for k, c in enumerate(vec):
        if c == field.zero:
            continue
        row = mat[k]
        for j, r in enumerate(row):
            if r != field.zero:
                out[j] = field.add(out[j], field.mul(c, r))
    return out


def _zeros(n, m, field):
    return [[field.zero] * m for _ in range(n)]


def simple_module(table, i):
    """One-dimensional module at vertex i with all arrows acting by zero."""
    if i not in table.idempotents:
        raise KeyError(f"unknown vertex {i!r}")
    field = table.field
    action = {a.name: [[field.zero]] for a in table.spec.quiver.arrows}
    return RightModule(table, (i,), action)


def projective_module(table, i):
    """The right ideal at vertex i with its regular arrow action."""
    if i not in table.idempotents:
        raise KeyError(f"unknown vertex {i!r}")
    field = table.field
    coords = [k for k, b in enumerate(table.basis) if b["source"] == i]
    pos = {k: c for c, k in enumerate(coords)}
    vertex_of = tuple(table.basis[k]["target"] for k in coords)
    action = {}
    for a in table.spec.quiver.arrows:
        mat = _zeros(len(coords), len(coords), field)
        rows = table._rmul[a.name]
        for k in coords:
            for j, c in rows.get(k, {}).items():
                mat[pos[k]][pos[j]] = c
        action[a.name] = mat
    return RightModule(table, vertex_of, action)


def module_check(table, module):
    """All defining relations annihilate the module."""
    from .algebra import relation_generators

    field = table.field
    for rel in relation_generators(table.spec, table.kind):
        for k, v in enumerate(module.vertex_of):
            if v != rel.source:
                continue
            unit = [field.zero] * module.dim
            unit[k] = field.one
            total = [field.zero] * module.dim
            for coeff, word in rel.terms:
                img = module.act_word(list(unit), word)
                for j, c in enumerate(img):
                    total[j] = field.add(total[j], field.mul(coeff, c))
            if any(c != field.zero for c in total):
                return False
    return True


def radical_rows(module):
    """Row space basis of M . rad (images of all arrow actions)."""
    field = module.table.field
    stacked = []
    for a in module.action.values():
        stacked.extend(a)
    if not stacked:
        return [], []
    return linalg.rref(stacked, field)


def top_coords(module):
    """Coordinates giving a basis of M / M.rad (non-pivot standard vectors)."""
    rows, pivots = radical_rows(module)
    pivset = set(pivots)
    return [k for k in range(module.dim) if k not in pivset]


def projective_cover(table, module):
    """Minimal projective cover (P, pi) of a nonzero module."""
    if module.dim == 0:
        raise ValueError("zero module has no projective cover")
    field = table.field
    reps = top_coords(module)
    summand_vertices = [module.vertex_of[c] for c in reps]
    projectives = [projective_module(table, v) for v in summand_vertices]

    offsets = []
    total = 0
    for p in projectives:
        offsets.append(total)
        total += p.dim
    vertex_of = tuple(v for p in projectives for v in p.vertex_of)
    action = {}
    for a in table.spec.quiver.arrows:
        mat = _zeros(total, total, field)
        for off, p in zip(offsets, projectives):
            sub = p.action[a.name]
            for r in range(p.dim):
                row = sub[r]
                for c in range(p.dim):
                    if row[c] != field.zero:
                        mat[off + r][off + c] = row[c]
        action[a.name] = mat
    cover = RightModule(table, vertex_of, action)

    pi = _zeros(total, module.dim, field)
    for snum, (off, rep, vtx) in enumerate(zip(offsets, reps, summand_vertices)):
        coords = [k for k, b in enumerate(table.basis) if b["source"] == vtx]
        for local, k in enumerate(coords):
            b = table.basis[k]
            unit = [field.zero] * module.dim
            unit[rep] = field.one
            img = module.act_word(unit, b["word"])
            if b["scale"] != field.one:
                img = [field.mul(b["scale"], c) for c in img]
            pi[off + local] = img
    return cover, ModuleMap(cover, module, pi)


def _graded_left_kernel(src_vertices, mat, field):
    """Rows spanning {x : x @ mat = 0}, block by source vertex."""
    n = len(src_vertices)
    kernel = []
    for v in sorted(set(src_vertices), key=str):
        rows_idx = [k for k in range(n) if src_vertices[k] == v]
        if not rows_idx:
            continue
        block = [mat[k] for k in rows_idx]
        transpose = [[block[r][c] for r in range(len(rows_idx))] for c in range(len(mat[0]))]
        for vec in linalg.nullspace(transpose, field):
            full = [field.zero] * n
            for j, c in enumerate(vec):
                full[rows_idx[j]] = c
            kernel.append(full)
    return kernel


def syzygy(table, module, with_map=False):
    """Kernel of a minimal projective cover, with its induced action."""
    field = table.field
    cover, pi = projective_cover(table, module)
    kernel = _graded_left_kernel(cover.vertex_of, pi.matrix, field)
    krows, kpivots = (linalg.rref(kernel, field) if kernel else ([], []))
    dim = len(krows)
    vertex_of = tuple(cover.vertex_of[p] for p in kpivots)
    action = {}
    for a in table.spec.quiver.arrows:
        mat = _zeros(dim, dim, field)
        for r in range(dim):
            img = _vecmat(krows[r], cover.action[a.name], field)
            coords = linalg.express_in_rref(krows, kpivots, img, field)
            if coords is None:
                raise RuntimeError("syzygy is not arrow-stable; cover map corrupt")
            mat[r] = coords
        action[a.name] = mat
    out = RightModule(table, vertex_of, action)
    if with_map:
        return out, ModuleMap(out, cover, krows), cover, pi
    return out


def omega_period_of_simple(table, i, nmax):
    """Least n <= nmax with the n-th syzygy of S_i simple at i again."""
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    module = simple_module(table, i)
    for n in range(1, nmax + 1):
        module = syzygy(table, module)
        if module.dim == 1 and module.vertex_of[0] == i:
            return n
    return None


def resolution_shape(table, i):
    """Projectives in degrees 0..3 over S_i, with the exactness bookkeeping."""
    module = simple_module(table, i)
    degrees = []
    dims = []
    current = module
    for _ in range(4):
        reps = top_coords(current)
        degrees.append(sorted((current.vertex_of[c] for c in reps), key=str))
        cover, _ = projective_cover(table, current)
        dims.append(cover.dim)
        current = syzygy(table, current)
    alternating = sum(d if k % 2 == 0 else -d for k, d in enumerate(dims))
    returns = current.dim == 1 and current.vertex_of[0] == i
    return {
        "vertex": i,
        "degrees": degrees,
        "projective_dims": dims,
        "alternating_sum_balanced": alternating == module.dim - current.dim
        if not returns
        else alternating == 0,
        "omega4_simple": returns,
    }


def expected_resolution_shape(spec, i):
    """Degree 0..3 cover vertices predicted by the virtual-arrow configuration."""
    from .quiver import virtual_arrows

    tq = spec.tq
    virt = virtual_arrows(spec)
    a1, a2 = sorted(spec.quiver.arrows_from(i))
    virtual_here = [a for a in (a1, a2) if a in virt]
    if not virtual_here:
        deg1 = sorted((tq.target(a1), tq.target(a2)), key=str)
        deg2 = sorted((tq.target(tq.f[a1]), tq.target(tq.f[a2])), key=str)
        return [[i], deg1, deg2, [i]]
    va = virtual_here[0]
    other = a2 if va == a1 else a1
    j = tq.target(other)
    if tq.is_loop(va):
        return [[i], [j], [j], [i]]
    y = tq.target(tq.f[va])
    return [[i], [j], [y], [i]]


def ext2_dims(table):
    """Matrix of second extension space dimensions between simples."""
    verts = list(table.spec.quiver.vertices)
    out = []
    for i in verts:
        omega2 = syzygy(table, syzygy(table, simple_module(table, i)))
        tops = {}
        for c in top_coords(omega2):
            v = omega2.vertex_of[c]
            tops[v] = tops.get(v, 0) + 1
        out.append([tops.get(j, 0) for j in verts])
    return out


def hom_space(table, m, n):
    """Basis of graded module maps M -> N, as matrices."""
    field = table.field
    pairs = [
        (u, w)
        for u in range(m.dim)
        for w in range(n.dim)
        if m.vertex_of[u] == n.vertex_of[w]
    ]
    if not pairs:
        return []
    pos = {p: k for k, p in enumerate(pairs)}
    rows = []
    for a in table.spec.quiver.arrows:
        am = m.action[a.name]
        an = n.action[a.name]
        for u in range(m.dim):
            for w in range(n.dim):
                # coefficient rows of (A_m H - H A_n)[u][w] in the unknowns H
                row = [field.zero] * len(pairs)
                for t in range(m.dim):
                    if am[u][t] != field.zero and (t, w) in pos:
                        row[pos[(t, w)]] = field.add(row[pos[(t, w)]], am[u][t])
                for t in range(n.dim):
                    if an[t][w] != field.zero and (u, t) in pos:
                        row[pos[(u, t)]] = field.sub(row[pos[(u, t)]], an[t][w])
                if any(c != field.zero for c in row):
                    rows.append(row)
    if not rows:
        sols = [[field.one if k == j else field.zero for k in range(len(pairs))]
                for j in range(len(pairs))]
    else:
        sols = linalg.nullspace(rows, field)
    mats = []
    for sol in sols:
        mat = _zeros(m.dim, n.dim, field)
        for (u, w), k in pos.items():
            mat[u][w] = sol[k]
        mats.append(mat)
    return mats


def _is_invertible(mat, field):
    return linalg.rank(mat, field) == len(mat)


def modules_isomorphic(table, m, n, seed=0, trials=64):
    """Decide isomorphism: 'yes', 'no', or 'undetermined' (search-based)."""
    if m.dim != n.dim or m.dim_vector() != n.dim_vector():
        return "no"
    if m.dim == 0:
        return "yes"
    field = table.field
    homs = hom_space(table, m, n)
    if not homs:
        return "no"
    for h in homs:
        if _is_invertible(h, field):
            return "yes"
    h = len(homs)
    if field.is_modp and field.p**h <= 4096:
        coeffs_iter = _all_tuples(field.p, h)
        for coeffs in coeffs_iter:
            mat = _combine(homs, coeffs, field)
            if _is_invertible(mat, field):
                return "yes"
        return "no"  # exhaustive search over Hom found no isomorphism
    rng = random.Random(seed)
    for _ in range(trials):
        if field.is_modp:
            coeffs = [rng.randrange(field.p) for _ in range(h)]
        else:
            coeffs = [field.from_int(rng.randint(-3, 3)) for _ in range(h)]
        mat = _combine(homs, coeffs, field)
        if _is_invertible(mat, field):
            return "yes"
    return "undetermined"


def _all_tuples(p, h):
    if h == 0:
        return
    total = p**h
    for n in range(total):
        out = []
        x = n
        for _ in range(h):
            out.append(x % p)
            x //= p
        yield out


def _combine(homs, coeffs, field):
    dim_m = len(homs[0])
    dim_n = len(homs[0][0])
    out = _zeros(dim_m, dim_n, field)
    for c, hmat in zip(coeffs, homs):
        if c == field.zero:
            continue
        for u in range(dim_m):
            for w in range(dim_n):
                if hmat[u][w] != field.zero:
                    out[u][w] = field.add(out[u][w], field.mul(c, hmat[u][w]))
    return out
