"""Alternating walks over the monomial quotient: strings and bands.

A walk is a sequence of letters, each an arrow or a formal inverse.  It
is a string when it is composable, reduced (no x followed by x^-1), and
no direct or inverse run contains a forbidden monomial of the string
quotient.  A band is a cyclic string, primitive, with letters of both
signs, all of whose rotations are strings.
"""

from .algebra import cycle_paths
from .quiver import require_assumptions


def forbidden_monomials(spec):
    """Monomial generators of the string quotient: compositions a.f(a) and
    the long cycle runs A_a (single virtual arrows included)."""
    tq = spec.tq
    words = set()
    for a in tq.f:
        words.add((a, tq.f[a]))
        words.add(cycle_paths(spec, a).a_word)
    return words


def parse_walk(text):
    """Parse "alpha,gamma^-1,sigma" (or whitespace separated) into letters."""
    letters = []
    for raw in text.replace(",", " ").split():
        if raw.endswith("^-1") or raw.endswith("^-"):
            letters.append((raw.split("^")[0], -1))
        elif raw.endswith("-"):
            letters.append((raw[:-1], -1))
        else:
            letters.append((raw, 1))
    return letters


def _ends(quiver, letter):
    arrow, sign = letter
    if sign == 1:
        return quiver.source(arrow), quiver.target(arrow)
    return quiver.target(arrow), quiver.source(arrow)


def _contains_forbidden(word, forbidden):
    for ln in {len(w) for w in forbidden}:
        if ln > len(word):
            continue
        for k in range(len(word) - ln + 1):
            if word[k : k + ln] in forbidden:
                return True
    return False


def _runs_ok(letters, forbidden):
    """Every maximal direct run and every reversed inverse run avoids the ideal."""
    k = 0
    while k < len(letters):
        sign = letters[k][1]
        j = k
        while j < len(letters) and letters[j][1] == sign:
            j += 1
        run = tuple(a for a, _ in letters[k:j])
        if sign == -1:
            run = tuple(reversed(run))
        if _contains_forbidden(run, forbidden):
            return False
        k = j
    return True


def is_string(spec, letters, forbidden=None):
    if forbidden is None:
        forbidden = forbidden_monomials(spec)
    if not letters:
        return False
    quiver = spec.quiver
    for k in range(len(letters) - 1):
        if _ends(quiver, letters[k])[1] != _ends(quiver, letters[k + 1])[0]:
            raise ValueError(
                f"letters {letters[k]} and {letters[k + 1]} do not compose"
            )
        if letters[k][0] == letters[k + 1][0] and letters[k][1] != letters[k + 1][1]:
            return False
    return _runs_ok(letters, forbidden)


def _rotations(letters):
    n = len(letters)
    return [tuple(letters[k:]) + tuple(letters[:k]) for k in range(n)]


def _is_power(letters):
    n = len(letters)
    for d in range(1, n):
        if n % d == 0 and tuple(letters) == tuple(letters[:d]) * (n // d):
            return True
    return False


def is_band(spec, letters, forbidden=None):
    if forbidden is None:
        forbidden = forbidden_monomials(spec)
    if len(letters) < 2:
        return False
    quiver = spec.quiver
    if _ends(quiver, letters[-1])[1] != _ends(quiver, letters[0])[0]:
        return False
    signs = {s for _, s in letters}
    if signs != {1, -1}:
        return False
    if _is_power(letters):
        return False
    for rot in _rotations(list(letters)):
        try:
            if not is_string(spec, list(rot), forbidden):
                return False
        except ValueError:
            return False
    return True


def walk_classify(spec, word):
    """Classify a walk over the string quotient: string, band, or neither.

    `word` is either a letter list [(arrow, sign), ...] or a text form
    accepted by `parse_walk`.  Unknown arrows and non-composable steps are
    malformed and raise ValueError.
    """
    require_assumptions(spec)
    letters = parse_walk(word) if isinstance(word, str) else [tuple(l) for l in word]
    if not letters:
        raise ValueError("empty walk")
    known = {a.name for a in spec.quiver.arrows}
    for arrow, sign in letters:
        if arrow not in known:
            raise ValueError(f"unknown arrow {arrow!r}")
        if sign not in (1, -1):
            raise ValueError(f"bad sign {sign!r}")
    forbidden = forbidden_monomials(spec)
    try:
        stringy = is_string(spec, letters, forbidden)
    except ValueError:
        raise
    if not stringy:
        return "neither"
    if is_band(spec, letters, forbidden):
        return "band"
    return "string"


def enumerate_strings(spec, maxlen):
    """All strings of length <= maxlen, in a deterministic order."""
    require_assumptions(spec)
    forbidden = forbidden_monomials(spec)
    quiver = spec.quiver
    letters = sorted(
        [(a.name, 1) for a in quiver.arrows] + [(a.name, -1) for a in quiver.arrows]
    )
    out = []
    stack = [[l] for l in reversed(letters) if not _contains_forbidden((l[0],), forbidden)]
    stack = [w for w in stack]
    while stack:
        walk = stack.pop()
        out.append(list(walk))
        if len(walk) == maxlen:
            continue
        last = walk[-1]
        for l in letters:
            if _ends(quiver, last)[1] != _ends(quiver, l)[0]:
                continue
            cand = walk + [l]
            if not is_string(spec, cand, forbidden):
                continue
            stack.append(cand)
    out.sort(key=lambda w: (len(w), w))
    return out


def _band_key(letters):
    best = None
    for rot in _rotations(letters):
        inv = tuple((a, -s) for a, s in reversed(rot))
        for cand in (rot, inv):
            if best is None or cand < best:
                best = cand
    return best


def enumerate_bands(spec, maxlen):
    """Bands of length <= maxlen, one representative per rotation/inversion class."""
    forbidden = forbidden_monomials(spec)
    seen = {}
    for walk in enumerate_strings(spec, maxlen):
        if is_band(spec, walk, forbidden):
            key = _band_key(walk)
            if key not in seen:
                seen[key] = walk
    return [seen[k] for k in sorted(seen)]
