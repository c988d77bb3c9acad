"""Quivers, the arrow permutations, orbit data, and validity checks.

A triangulation datum is a connected 2-regular quiver together with a
permutation f of the arrows such that every arrow ends where its f-image
starts and f^3 = id.  From f we derive the source involution `bar` (the
other arrow at the same source) and g = bar . f, whose cycles carry the
multiplicity and weight data of a surface-algebra spec.
"""

import warnings
from dataclasses import dataclass, field as dc_field


class AssumptionViolated(Exception):
    """Raised when an operation requires a spec that passes all checks."""

    def __init__(self, report):
        self.report = report
        super().__init__("; ".join(m for _, _, m in report.violations))


@dataclass(frozen=True)
class Arrow:
    name: str
    source: object
    target: object


class Quiver:
    """Finite quiver with named arrows; immutable after construction."""

    def __init__(self, vertices, arrows):
        self.vertices = tuple(vertices)
        self.arrows = tuple(Arrow(str(n), s, t) for (n, s, t) in arrows)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow ids")
        vset = set(self.vertices)
        for a in self.arrows:
            if a.source not in vset or a.target not in vset:
                raise ValueError(f"arrow {a.name} references unknown vertex")
        self._by_name = {a.name: a for a in self.arrows}

    def arrow(self, name):
        return self._by_name[name]

    def source(self, name):
        return self._by_name[name].source

    def target(self, name):
        return self._by_name[name].target

    def arrows_from(self, v):
        return [a.name for a in self.arrows if a.source == v]

    def arrows_into(self, v):
        return [a.name for a in self.arrows if a.target == v]

    def is_2_regular(self):
        return all(
            len(self.arrows_from(v)) == 2 and len(self.arrows_into(v)) == 2
            for v in self.vertices
        )

    def is_connected(self):
        if not self.vertices:
            return False
        seen = {self.vertices[0]}
        frontier = [self.vertices[0]]
        adj = {v: set() for v in self.vertices}
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        while frontier:
            v = frontier.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return len(seen) == len(self.vertices)


@dataclass
class ValidationReport:
    violations: list = dc_field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def add(self, code, arrows, message):
        self.violations.append((code, tuple(arrows), message))

    def to_json(self):
        return {
            "ok": self.ok,
            "violations": [
                {"code": c, "arrows": list(ar), "message": m}
                for (c, ar, m) in self.violations
            ],
        }


def normalize_f(quiver, f_cycles):
    """Turn a cycle list over arrow ids into a total permutation dict.

    Fixed points may be omitted from the input and are inferred.
    """
    f = {}
    for cyc in f_cycles:
        for i, name in enumerate(cyc):
            if name not in quiver._by_name:
                raise ValueError(f"f mentions unknown arrow {name!r}")
            if name in f:
                raise ValueError(f"arrow {name!r} occurs twice in f")
            f[name] = cyc[(i + 1) % len(cyc)]
    for a in quiver.arrows:
        f.setdefault(a.name, a.name)
    return f


def validate_triangulation_quiver(quiver, f):
    """Check every axiom; failures are report entries, never exceptions."""
    report = ValidationReport()
    if len(quiver.vertices) < 2:
        report.add("too-few-vertices", [], f"need at least 2 vertices, have {len(quiver.vertices)}")
    for v in quiver.vertices:
        out = quiver.arrows_from(v)
        inn = quiver.arrows_into(v)
        if len(out) != 2:
            report.add("not-2-regular", out, f"vertex {v} has {len(out)} outgoing arrows")
        if len(inn) != 2:
            report.add("not-2-regular", inn, f"vertex {v} has {len(inn)} incoming arrows")
    if not quiver.is_connected():
        report.add("disconnected", [], "underlying graph is not connected")
    if isinstance(f, dict):
        fmap = dict(f)
    else:
        fmap = normalize_f(quiver, f)
    if set(fmap) != {a.name for a in quiver.arrows} or len(set(fmap.values())) != len(fmap):
        report.add("f-not-permutation", [], "f is not a permutation of the arrows")
        return report
    for a in quiver.arrows:
        if quiver.target(a.name) != quiver.source(fmap[a.name]):
            report.add(
                "f-not-composable",
                [a.name, fmap[a.name]],
                f"target of {a.name} is not the source of f({a.name}) = {fmap[a.name]}",
            )
    for a in quiver.arrows:
        if fmap[fmap[fmap[a.name]]] != a.name:
            report.add("f-cubed", [a.name], f"f^3 does not fix {a.name}")
    return report


class TriangulationQuiver:
    """Validated (Q, f) with the derived bar, g and g-orbit data."""

    def __init__(self, quiver, f):
        report = validate_triangulation_quiver(quiver, f)
        if not report.ok:
            raise AssumptionViolated(report)
        self.quiver = quiver
        self.f = f if isinstance(f, dict) else normalize_f(quiver, f)
        self.bar = {}
        for v in quiver.vertices:
            a, b = quiver.arrows_from(v)
            self.bar[a] = b
            self.bar[b] = a
        self.g = {a.name: self.bar[self.f[a.name]] for a in quiver.arrows}
        self.g_orbits = self._orbits(self.g)
        self.orbit_of = {}
        for orb in self.g_orbits:
            for name in orb:
                self.orbit_of[name] = orb

    @staticmethod
    def _orbits(perm):
        seen = set()
        orbits = []
        for start in perm:
            if start in seen:
                continue
            orb = [start]
            seen.add(start)
            nxt = perm[start]
            while nxt != start:
                orb.append(nxt)
                seen.add(nxt)
                nxt = perm[nxt]
            orbits.append(tuple(orb))
        return tuple(orbits)

    def n(self, arrow):
        return len(self.orbit_of[arrow])

    def f_orbits(self):
        return self._orbits(self.f)

    def source(self, a):
        return self.quiver.source(a)

    def target(self, a):
        return self.quiver.target(a)

    def is_loop(self, a):
        return self.source(a) == self.target(a)


def derive_permutations(quiver, f):
    """Build the TriangulationQuiver, rejecting invalid input."""
    return TriangulationQuiver(quiver, f)


class SurfaceAlgebraSpec:
    """Triangulation quiver plus multiplicity and weight per g-orbit.

    `m` and `c` are keyed by one representative arrow per orbit; naming two
    representatives of the same orbit is an input error.  Weights on
    virtual orbits are forced to 1 (with a warning), matching the
    convention the resolution formulas rely on.
    """

    def __init__(self, tq, m, c, field):
        self.tq = tq
        self.field = field
        self.m = self._orbit_map(m, "m")
        self.c = self._orbit_map(c, "c")
        for orb in tq.g_orbits:
            if orb not in self.m:
                raise ValueError(f"no multiplicity given for g-orbit of {orb[0]!r}")
            if orb not in self.c:
                self.c[orb] = field.one
        for orb, mv in self.m.items():
            if not (isinstance(mv, int) and mv >= 1):
                raise ValueError(f"multiplicity of orbit of {orb[0]!r} must be a positive integer")
        for orb, cv in self.c.items():
            if cv == field.zero:
                raise ValueError(f"weight of orbit of {orb[0]!r} must be nonzero")
        for orb in tq.g_orbits:
            if self.m[orb] * len(orb) == 2 and self.c[orb] != field.one:
                warnings.warn(
                    f"weight on the virtual g-orbit of {orb[0]!r} rewritten to 1",
                    stacklevel=2,
                )
                self.c[orb] = field.one

    def _orbit_map(self, data, what):
        out = {}
        for rep, value in data.items():
            if rep not in self.tq.orbit_of:
                raise ValueError(f"{what} keyed by unknown arrow {rep!r}")
            orb = self.tq.orbit_of[rep]
            if orb in out:
                raise ValueError(
                    f"{what} given for two representatives of the g-orbit of {orb[0]!r}"
                )
            out[orb] = value
        return out

    def m_of(self, arrow):
        return self.m[self.tq.orbit_of[arrow]]

    def c_of(self, arrow):
        return self.c[self.tq.orbit_of[arrow]]

    def q(self, arrow):
        return self.m_of(arrow) * self.tq.n(arrow)

    def dim_formula(self):
        return sum(self.m[orb] * len(orb) ** 2 for orb in self.tq.g_orbits)

    @property
    def quiver(self):
        return self.tq.quiver


def virtual_arrows(spec):
    """Arrows whose g-cycle path has length 2; closed under g."""
    return {a.name for a in spec.quiver.arrows if spec.q(a.name) == 2}


def check_assumptions(spec):
    """Flag every violated smallness condition near virtual arrows."""
    report = ValidationReport()
    tq = spec.tq
    virt = virtual_arrows(spec)
    for a in spec.quiver.arrows:
        if spec.q(a.name) < 2:
            report.add("q-below-2", [a.name], f"q({a.name}) = {spec.q(a.name)} < 2")
    for v in spec.quiver.vertices:
        out = spec.quiver.arrows_from(v)
        if len(out) == 2 and all(x in virt for x in out):
            report.add(
                "paired-virtual",
                out,
                f"both arrows at vertex {v} are virtual; the algebra is infinite-dimensional",
            )
    for a in spec.quiver.arrows:
        b = tq.bar[a.name]
        if b in virt and b != a.name:
            if tq.is_loop(b):
                if spec.q(a.name) < 4:
                    report.add(
                        "virtual-loop-companion",
                        [a.name, b],
                        f"{b} is a virtual loop but q({a.name}) = {spec.q(a.name)} < 4",
                    )
            elif spec.q(a.name) < 3:
                report.add(
                    "virtual-companion",
                    [a.name, b],
                    f"{b} is virtual but q({a.name}) = {spec.q(a.name)} < 3",
                )
    return report


def require_assumptions(spec):
    report = check_assumptions(spec)
    if not report.ok:
        raise AssumptionViolated(report)
    return report


def gabriel_quiver(spec):
    """The quiver with all virtual arrows removed."""
    virt = virtual_arrows(spec)
    return Quiver(
        spec.quiver.vertices,
        [(a.name, a.source, a.target) for a in spec.quiver.arrows if a.name not in virt],
    )
