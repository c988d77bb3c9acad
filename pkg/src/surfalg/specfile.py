"""Line-based text format for surface-algebra specs.

Grammar (one statement per line, '#' starts a comment):

    field Q | GF(p)
    vertex <id>            (or: vertices <id> <id> ...)
    arrow <name> <source> <target>
    f (<a1> <a2> <a3>) (<a4>) ...
    m <representative-arrow> <positive integer>
    c <representative-arrow> <field element>

Vertex ids that look like integers are read as integers.  The f line
lists cycles; fixed points may be omitted.  m and c are keyed by one
representative arrow per g-orbit; naming two representatives of one
orbit is an error, as is any unknown key.
"""

import re

from .fields import field_from_name
from .quiver import Quiver, SurfaceAlgebraSpec, TriangulationQuiver


class SpecParseError(ValueError):
    pass


def _vertex_id(token):
    return int(token) if re.fullmatch(r"-?\d+", token) else token


def parse_spec_text(text):
    """Parse the text format into a SurfaceAlgebraSpec."""
    field = None
    vertices = []
    arrows = []
    f_cycles = None
    m_entries = {}
    c_entries = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        key = parts[0]
        try:
            if key == "field":
                field = field_from_name(" ".join(parts[1:]))
            elif key == "vertex":
                if len(parts) != 2:
                    raise SpecParseError("vertex takes one id")
                vertices.append(_vertex_id(parts[1]))
            elif key == "vertices":
                vertices.extend(_vertex_id(p) for p in parts[1:])
            elif key == "arrow":
                if len(parts) != 4:
                    raise SpecParseError("arrow takes: name source target")
                arrows.append((parts[1], _vertex_id(parts[2]), _vertex_id(parts[3])))
            elif key == "f":
                body = line[1:].strip()
                cycles = re.findall(r"\(([^()]*)\)", body)
                if not cycles or re.sub(r"\([^()]*\)|\s", "", body):
                    raise SpecParseError("f takes a list of (cycles)")
                f_cycles = [tuple(c.split()) for c in cycles if c.split()]
            elif key == "m":
                if len(parts) != 3:
                    raise SpecParseError("m takes: arrow value")
                m_entries[parts[1]] = int(parts[2])
            elif key == "c":
                if len(parts) != 3:
                    raise SpecParseError("c takes: arrow value")
                c_entries[parts[1]] = parts[2]
            else:
                raise SpecParseError(f"unknown key {key!r}")
        except SpecParseError as exc:
            raise SpecParseError(f"line {lineno}: {exc}") from None
        except ValueError as exc:
            raise SpecParseError(f"line {lineno}: {exc}") from None
    if field is None:
        raise SpecParseError("missing 'field' declaration")
    if f_cycles is None:
        raise SpecParseError("missing 'f' declaration")
    try:
        quiver = Quiver(vertices, arrows)
    except Exception as exc:
        raise SpecParseError(str(exc)) from None
    return field, quiver, f_cycles, m_entries, c_entries


def spec_from_parts(parts):
    """Assemble the spec; invalid triangulation data raises from here."""
    field, quiver, f_cycles, m_entries, c_entries = parts
    tq = TriangulationQuiver(quiver, f_cycles)
    c_parsed = {rep: field.parse(v) for rep, v in c_entries.items()}
    return SurfaceAlgebraSpec(tq, m_entries, c_parsed, field)


def parse_spec(text):
    """Parse and assemble in one step (the common case)."""
    return spec_from_parts(parse_spec_text(text))


def load_spec(path):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_spec(handle.read())


def load_spec_parts(path):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_spec_text(handle.read())


def spec_to_text(spec):
    """Serialize a spec back into the text format."""
    lines = [f"field {spec.field.name}"]
    lines.append("vertices " + " ".join(str(v) for v in spec.quiver.vertices))
    for a in spec.quiver.arrows:
        lines.append(f"arrow {a.name} {a.source} {a.target}")
    cycles = []
    seen = set()
    for a in spec.quiver.arrows:
        if a.name in seen:
            continue
        cyc = [a.name]
        seen.add(a.name)
        nxt = spec.tq.f[a.name]
        while nxt != a.name:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = spec.tq.f[nxt]
        cycles.append("(" + " ".join(cyc) + ")")
    lines.append("f " + " ".join(cycles))
    for orb in spec.tq.g_orbits:
        lines.append(f"m {orb[0]} {spec.m[orb]}")
    for orb in spec.tq.g_orbits:
        lines.append(f"c {orb[0]} {spec.field.to_json(spec.c[orb])}")
    return "\n".join(lines) + "\n"
