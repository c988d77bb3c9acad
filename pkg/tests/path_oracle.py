"""Independent brute-force dimension oracle.

Counts the classes of short paths inside a strictly larger window, with
relation products expanded verbatim: a padded product is used only when
every component fits inside the window, so no rewriting or truncation
logic is shared with the engine.  The count is monotone non-increasing
in the window length and stabilizes at the quotient dimension.
"""

import numpy as np


def _g_walk(tq, arrow, length):
    out = []
    cur = arrow
    for _ in range(length):
        out.append(cur)
        cur = tq.g[cur]
    return tuple(out)


def _relations(spec, kind):
    """Recompute the defining relation term lists from the raw spec data."""
    tq = spec.tq
    p = spec.field.p
    rels = []
    virt = {a.name for a in spec.quiver.arrows if spec.q(a.name) == 2}
    if kind == "weighted":
        for a in tq.f:
            abar = tq.bar[a]
            a_word = _g_walk(tq, abar, spec.q(abar) - 1)
            rels.append([(1, (a, tq.f[a])), (-int(spec.c_of(abar)) % p, a_word)])
        for a in tq.f:
            fa = tq.f[a]
            inner = _g_walk(tq, tq.bar[a], spec.q(tq.bar[a]) - 1)[1:]
            usable = any(tq.bar[x] not in virt for x in inner)
            if tq.f[fa] not in virt and usable:
                rels.append([(1, (a, fa, tq.g[fa]))])
            if fa not in virt and usable:
                rels.append([(1, (a, tq.g[a], tq.f[tq.g[a]]))])
    elif kind == "biserial":
        for a in tq.f:
            rels.append([(1, (a, tq.f[a]))])
        for a in tq.f:
            abar = tq.bar[a]
            rels.append(
                [
                    (int(spec.c_of(a)) % p, _g_walk(tq, a, spec.q(a))),
                    (-int(spec.c_of(abar)) % p, _g_walk(tq, abar, spec.q(abar))),
                ]
            )
    else:
        raise ValueError(kind)
    return rels


def _paths_upto(quiver, length):
    paths = [((), v, v) for v in quiver.vertices]
    frontier = list(paths)
    while frontier:
        word, src, at = frontier.pop()
        if len(word) == length:
            continue
        for a in quiver.arrows_from(at):
            entry = (word + (a,), src, quiver.target(a))
            paths.append(entry)
            frontier.append(entry)
    return paths


class _RankAccumulator:
    """Chunked Gauss-Jordan rank over GF(p) with bounded memory."""

    def __init__(self, ncols, p, chunk=2048):
        self.ncols = ncols
        self.p = p
        self.chunk = chunk
        self.rref = np.zeros((0, ncols), dtype=np.int64)
        self.pending = []

    def add(self, row):
        self.pending.append(row)
        if len(self.pending) >= self.chunk:
            self.flush()

    def flush(self):
        if not self.pending:
            return
        block = np.zeros((len(self.pending), self.ncols), dtype=np.int64)
        for r, row in enumerate(self.pending):
            for c, v in row.items():
                block[r, c] = v
        self.pending = []
        stacked = np.concatenate([self.rref, block]) if self.rref.size else block
        self.rref = _rref_rows(stacked, self.p)

    @property
    def rank(self):
        self.flush()
        return self.rref.shape[0]


def _rref_rows(a, p):
    a = a % p
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            a[mask] = (a[mask] - np.outer(col[mask], a[r])) % p
        r += 1
    return a[:r]


def _dimension_at(spec, rels, p, n_short, window):
    quiver = spec.quiver
    paths = _paths_upto(quiver, window)
    blocks = {}
    for word, src, tgt in paths:
        blocks.setdefault((src, tgt), []).append(word)
    colindex = {}
    for key, words in blocks.items():
        words.sort(key=lambda w: (-len(w), w))
        colindex[key] = {w: k for k, w in enumerate(words)}

    into = {}
    outof = {}
    for word, src, tgt in paths:
        into.setdefault(tgt, []).append((word, src))
        outof.setdefault(src, []).append((word, tgt))

    total = 0
    for key, words in blocks.items():
        acc = _RankAccumulator(len(words), p)
        seen = set()
        for rel in rels:
            maxlen = max(len(w) for _, w in rel)
            src = quiver.source(rel[0][1][0])
            tgt = quiver.target(rel[0][1][-1])
            for pword, psrc in into.get(src, []):
                if psrc != key[0] or len(pword) + maxlen > window:
                    continue
                for sword, stgt in outof.get(tgt, []):
                    if stgt != key[1] or len(pword) + maxlen + len(sword) > window:
                        continue
                    row = {}
                    for coeff, w in rel:
                        col = colindex[key][pword + w + sword]
                        row[col] = (row.get(col, 0) + coeff) % p
                    row = {k: v for k, v in row.items() if v}
                    if not row:
                        continue
                    items = tuple(sorted(row.items()))
                    lead_inv = pow(items[0][1], p - 2, p)
                    fingerprint = tuple((k, (v * lead_inv) % p) for k, v in items)
                    if fingerprint in seen:
                        continue
                    seen.add(fingerprint)
                    acc.add(row)
        rank_ideal = acc.rank
        for w in words:
            if len(w) <= n_short:
                acc.add({colindex[key][w]: 1})
        total += acc.rank - rank_ideal
    return total


def oracle_dimension(spec, kind="weighted", start_extra=2, max_extra=6):
    """Stabilized class count of the short paths; exact over GF(p)."""
    if not spec.field.is_modp:
        raise ValueError("the oracle runs over a prime field")
    p = spec.field.p
    n_short = max(spec.q(a.name) for a in spec.quiver.arrows) + 2
    rels = _relations(spec, kind)
    prev = None
    for extra in range(start_extra, max_extra + 1):
        value = _dimension_at(spec, rels, p, n_short, n_short + extra)
        if prev is not None and value == prev:
            return value
        prev = value
    return prev
