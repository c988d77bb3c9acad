"""Command-line front end.

    surfalg VERB (--builtin NAME [--param k=v ...] | --input FILE)
                 [--field GF(101)|Q] [--kind weighted|biserial|string]
                 [--json] [--out FILE] [verb options]

Exit codes: 0 success, 1 validation/assumption/singular-input failure,
2 internal consistency failure, 3 unreadable file, 4 parse error,
5 usage error / unknown verb.
"""

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import algebra, bimodule, catalog, degeneration, modules, specfile, walks
from .classify import classify as classify_spec
from .classify import singular_parameter_probe
from .fields import field_from_name
from .linalg import det_exact
from .quiver import (AssumptionViolated, check_assumptions, gabriel_quiver,
                     validate_triangulation_quiver, virtual_arrows)

VERSION = "surfalg 0.1.0"

VERBS = (
    "validate", "info", "build", "cartan", "socle", "symmetric", "period",
    "resolve", "bimodule", "classify", "degenerate", "walks", "builtin",
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INTERNAL = 2
EXIT_UNREADABLE = 3
EXIT_PARSE = 4
EXIT_USAGE = 5


class CliFailure(Exception):
    def __init__(self, code, message):
        self.code = code
        self.message = message


def _parser(verb):
    p = argparse.ArgumentParser(prog=f"surfalg {verb}", add_help=True)
    p.add_argument("--builtin", help="catalogue family name")
    p.add_argument("--param", action="append", default=[], help="k=v family parameter")
    p.add_argument("--input", help="spec file path")
    p.add_argument("--field", default="GF(101)", help="coefficient field")
    p.add_argument("--kind", default="weighted",
                   choices=["weighted", "biserial", "string"])
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--out", help="write the report to a file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1,
                   help="threads for independent per-vertex analyses")
    if verb == "period":
        p.add_argument("--vertex", help="single vertex")
        p.add_argument("--all", action="store_true")
        p.add_argument("--max", type=int, default=8, dest="nmax")
    if verb == "bimodule":
        p.add_argument("--cap", type=int, default=40)
    if verb == "degenerate":
        p.add_argument("--t", required=True, help="family parameter value")
    if verb == "walks":
        p.add_argument("--walk", help="letters like alpha,gamma^-1,sigma")
        p.add_argument("--enumerate", type=int, dest="enum_len",
                       help="list strings and bands up to this length")
    return p


def _get_spec(args):
    field = field_from_name(args.field)
    if bool(args.builtin) == bool(args.input):
        raise CliFailure(EXIT_USAGE, "give exactly one of --builtin or --input")
    if args.builtin:
        try:
            params = catalog.parse_params(args.param, field)
            return catalog.builtin(args.builtin, field, **params)
        except ValueError as exc:
            raise CliFailure(EXIT_USAGE, str(exc)) from None
    try:
        with open(args.input, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise CliFailure(EXIT_UNREADABLE, f"cannot read {args.input}: {exc}") from None
    try:
        return specfile.parse_spec(text)
    except specfile.SpecParseError as exc:
        raise CliFailure(EXIT_PARSE, f"parse error: {exc}") from None
    except AssumptionViolated as exc:
        raise CliFailure(EXIT_INVALID, f"invalid triangulation data: {exc}") from None
    except ValueError as exc:
        raise CliFailure(EXIT_PARSE, f"parse error: {exc}") from None


def _report(args, payload, lines):
    text = json.dumps(payload, sort_keys=True, separators=(",", ":")) if args.json \
        else "\n".join(lines)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def _payload(verb, results, checks=None, status="ok"):
    return {
        "generator": VERSION,
        "verb": verb,
        "status": status,
        "results": results,
        "checks": checks or [],
    }


def _build(args, spec):
    try:
        return algebra.build_algebra(spec, kind=args.kind)
    except algebra.SingularSocle as exc:
        raise CliFailure(
            EXIT_INVALID,
            f"singular socle detected: {exc}",
        ) from None
    except algebra.DimensionMismatch as exc:
        raise CliFailure(EXIT_INTERNAL, f"internal consistency failure: {exc}") from None
    except AssumptionViolated as exc:
        raise CliFailure(EXIT_INVALID, f"assumptions violated: {exc}") from None


def _per_vertex(args, verts, fn):
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            return list(pool.map(fn, verts))
    return [fn(v) for v in verts]


def cmd_validate(args):
    field = field_from_name(args.field)
    if args.builtin:
        spec = _get_spec(args)
        report = check_assumptions(spec)
        ok = report.ok
        lines = ["triangulation quiver: ok"]
    else:
        try:
            with open(args.input, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise CliFailure(EXIT_UNREADABLE, f"cannot read {args.input}: {exc}") from None
        try:
            parts = specfile.parse_spec_text(text)
        except specfile.SpecParseError as exc:
            raise CliFailure(EXIT_PARSE, f"parse error: {exc}") from None
        _, quiver, f_cycles, _, _ = parts
        vreport = validate_triangulation_quiver(quiver, f_cycles)
        if not vreport.ok:
            payload = _payload("validate", vreport.to_json(), status="invalid")
            _report(args, payload, ["triangulation quiver: INVALID"] + [
                f"  [{c}] {m}" for c, _, m in vreport.violations
            ])
            return EXIT_INVALID
        spec = specfile.spec_from_parts(parts)
        report = check_assumptions(spec)
        ok = report.ok
        lines = ["triangulation quiver: ok"]
    if ok:
        lines.append("assumptions: ok")
        _report(args, _payload("validate", report.to_json()), lines)
        return EXIT_OK
    lines.append("assumptions: VIOLATED")
    lines.extend(f"  [{c}] {m}" for c, _, m in report.violations)
    _report(args, _payload("validate", report.to_json(), status="invalid"), lines)
    return EXIT_INVALID


def cmd_info(args):
    spec = _get_spec(args)
    tq = spec.tq
    virt = sorted(virtual_arrows(spec))
    proj = {
        str(v): sum(spec.q(a) for a in spec.quiver.arrows_from(v))
        for v in spec.quiver.vertices
    }
    results = {
        "vertices": [str(v) for v in spec.quiver.vertices],
        "arrows": [[a.name, str(a.source), str(a.target)] for a in spec.quiver.arrows],
        "f_orbits": [list(o) for o in tq.f_orbits()],
        "g_orbits": [list(o) for o in tq.g_orbits],
        "multiplicities": {o[0]: spec.m[o] for o in tq.g_orbits},
        "weights": {o[0]: spec.field.to_json(spec.c[o]) for o in tq.g_orbits},
        "q": {a.name: spec.q(a.name) for a in spec.quiver.arrows},
        "virtual_arrows": virt,
        "projective_dims": proj,
        "dimension": spec.dim_formula(),
        "string_dimension": algebra.string_dim_formula(spec),
        "gabriel_arrows": [a.name for a in gabriel_quiver(spec).arrows],
        "field": spec.field.name,
    }
    lines = [
        f"vertices: {len(spec.quiver.vertices)}, arrows: {len(spec.quiver.arrows)}",
        "g-orbits: " + ", ".join("(" + " ".join(o) + f") m={spec.m[o]}" for o in tq.g_orbits),
        f"virtual arrows: {', '.join(virt) if virt else 'none'}",
        "projective dims: " + ", ".join(f"{v}: {d}" for v, d in proj.items()),
        f"dimension: {results['dimension']}",
    ]
    _report(args, _payload("info", results), lines)
    return EXIT_OK


def cmd_build(args):
    spec = _get_spec(args)
    table = _build(args, spec)
    payload = table.to_json_obj()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(canonical_json(payload) + "\n")
        print(f"table written: dim {table.dim}")
    elif args.json:
        print(canonical_json(payload))
    else:
        print(f"built {args.kind} table: dim {table.dim}, basis {len(table.basis)}")
    return EXIT_OK


def cmd_cartan(args):
    spec = _get_spec(args)
    table = _build(args, spec)
    cmat = algebra.cartan_matrix(table)
    det = det_exact(cmat)
    lines = ["cartan matrix (rows/cols in vertex order):"]
    lines.extend("  " + " ".join(f"{x:3d}" for x in row) for row in cmat)
    lines.append(f"determinant: {det}")
    _report(args, _payload("cartan", {"matrix": cmat, "det": str(det)}),
            lines)
    return EXIT_OK


def cmd_socle(args):
    spec = _get_spec(args)
    try:
        table = algebra.build_algebra(spec, kind=args.kind, allow_singular=True)
    except algebra.DimensionMismatch as exc:
        raise CliFailure(EXIT_INTERNAL, str(exc)) from None
    except AssumptionViolated as exc:
        raise CliFailure(EXIT_INVALID, str(exc)) from None
    per_vertex, verdict = algebra.socle(table)
    results = {
        "dims": {str(v): len(b) for v, b in per_vertex.items()},
        "verdict": verdict,
    }
    lines = [f"socle dims: " + ", ".join(f"{v}: {len(b)}" for v, b in per_vertex.items()),
             f"verdict: {verdict}"]
    if getattr(table, "singular_info", None):
        v, witness, dims = table.singular_info
        results["witness"] = {
            "vertex": str(v),
            "element": [[spec.field.to_json(c), list(w)] for c, w in witness],
        }
        lines.append("witness at vertex %s: %s" % (
            v, " + ".join(f"({c})*{'*'.join(w)}" for c, w in witness)))
        _report(args, _payload("socle", results, status="singular"), lines)
        return EXIT_INVALID
    _report(args, _payload("socle", results), lines)
    return EXIT_OK


def cmd_symmetric(args):
    spec = _get_spec(args)
    table = _build(args, spec)
    gram, verdict = algebra.symmetrizing_form(table)
    ok = verdict["symmetric"] and verdict["nondegenerate"]
    results = {"verdict": verdict, "dim": table.dim}
    lines = [f"gram matrix: symmetric={verdict['symmetric']} "
             f"nondegenerate={verdict['nondegenerate']} adjusted={verdict['adjusted']}"]
    _report(args, _payload("symmetric", results,
                           status="ok" if ok else "fail"), lines)
    return EXIT_OK if ok else EXIT_INVALID


def cmd_period(args):
    spec = _get_spec(args)
    table = _build(args, spec)
    verts = list(spec.quiver.vertices)
    if args.vertex is not None and not args.all:
        want = [v for v in verts if str(v) == str(args.vertex)]
        if not want:
            raise CliFailure(EXIT_USAGE, f"unknown vertex {args.vertex}")
        verts = want
    periods = _per_vertex(
        args, verts, lambda v: modules.omega_period_of_simple(table, v, args.nmax)
    )
    results = {"periods": {str(v): p for v, p in zip(verts, periods)},
               "max": args.nmax}
    lines = [f"period of the simple at {v}: {p if p else 'none <= %d' % args.nmax}"
             for v, p in zip(verts, periods)]
    _report(args, _payload("period", results), lines)
    return EXIT_OK


def cmd_resolve(args):
    spec = _get_spec(args)
    table = _build(args, spec)
    verts = list(spec.quiver.vertices)
    shapes = _per_vertex(args, verts, lambda v: modules.resolution_shape(table, v))
    expected = {str(v): modules.expected_resolution_shape(spec, v) for v in verts}
    ext2 = modules.ext2_dims(table)
    gq = gabriel_quiver(spec)
    arrows_ji = [
        [sum(1 for a in gq.arrows if a.source == j and a.target == i) for j in verts]
        for i in verts
    ]
    results = {
        "shapes": {str(s["vertex"]): [[str(x) for x in deg] for deg in s["degrees"]]
                   for s in shapes},
        "expected_shapes": {v: [[str(x) for x in deg] for deg in e]
                            for v, e in expected.items()},
        "omega4_simple": {str(s["vertex"]): s["omega4_simple"] for s in shapes},
        "ext2": ext2,
        "gabriel_arrow_counts": arrows_ji,
        "ext2_matches_arrows": ext2 == arrows_ji,
    }
    lines = []
    for s in shapes:
        lines.append(
            f"S_{s['vertex']}: degrees {s['degrees']} "
            f"(returns to the simple: {s['omega4_simple']})"
        )
    lines.append(f"second-extension matrix matches arrow counts: {ext2 == arrows_ji}")
    ok = results["ext2_matches_arrows"] and all(
        results["shapes"][str(v)] == results["expected_shapes"][str(v)] for v in verts
    )
    _report(args, _payload("resolve", results, status="ok" if ok else "fail"), lines)
    return EXIT_OK if ok else EXIT_INVALID


def cmd_bimodule(args):
    spec = _get_spec(args)
    table = _build(args, spec)
    try:
        out = bimodule.verify_bimodule_period(table, cap=args.cap)
    except bimodule.CapExceeded as exc:
        raise CliFailure(EXIT_USAGE, str(exc)) from None
    except bimodule.SingularInput as exc:
        raise CliFailure(EXIT_INVALID, str(exc)) from None
    lines = [f"{k}: {'pass' if v else 'FAIL'}" for k, v in out["checks"].items()]
    lines.append(f"verdict: {out['verdict']}")
    ok = out["verdict"] == "Periodic4"
    _report(args, _payload("bimodule", out, status="ok" if ok else "fail"), lines)
    return EXIT_OK if ok else EXIT_INVALID


def cmd_classify(args):
    spec = _get_spec(args)
    try:
        result = classify_spec(spec)
    except AssumptionViolated as exc:
        raise CliFailure(EXIT_INVALID, str(exc)) from None
    probe = singular_parameter_probe(spec)
    payload = result.to_json(spec.field)
    payload["probe"] = None
    if probe:
        payload["probe"] = {
            k: (spec.field.to_json(v) if k == "value" else v)
            for k, v in probe.items()
            if k != "socle_witness"
        }
    lines = [f"family: {result.family}"]
    if result.witness:
        lines.append(f"witness arrow {result.witness['arrow']}, "
                     f"triple {result.witness['triple']}, v={result.witness['v']}")
    if probe and probe.get("singular"):
        lines.append(f"singular parameter: {spec.field.to_json(probe['value'])}")
    _report(args, _payload("classify", payload), lines)
    return EXIT_OK


def cmd_degenerate(args):
    spec = _get_spec(args)
    field = spec.field
    try:
        t = field.parse(args.t)
    except Exception as exc:
        raise CliFailure(EXIT_USAGE, f"bad --t value: {exc}") from None
    try:
        if t == field.zero:
            table = degeneration.degeneration_algebra(spec, t)
            bis = algebra.build_algebra(spec, kind="biserial")
            same = canonical_json(table.to_json_obj()["products"]) == canonical_json(
                bis.to_json_obj()["products"]
            )
            results = {"t": field.to_json(t), "dim": table.dim,
                       "equals_biserial_table": same}
            lines = [f"family member at t=0: dim {table.dim}",
                     f"structure constants equal the split table: {same}"]
            ok = same
        else:
            out = degeneration.verify_degeneration_isomorphism(spec, t)
            results = out
            lines = [f"rescaling isomorphism at t={args.t}: "
                     f"{'pass' if out['ok'] else 'FAIL'} (family {out['family']})"]
            ok = out["ok"]
    except degeneration.NonGenericWithoutFamilyTag as exc:
        raise CliFailure(EXIT_INVALID, str(exc)) from None
    except algebra.DimensionMismatch as exc:
        raise CliFailure(EXIT_INTERNAL, str(exc)) from None
    _report(args, _payload("degenerate", results, status="ok" if ok else "fail"), lines)
    return EXIT_OK if ok else EXIT_INVALID


def cmd_walks(args):
    spec = _get_spec(args)
    if bool(args.walk) == bool(args.enum_len):
        raise CliFailure(EXIT_USAGE, "give exactly one of --walk or --enumerate")
    if args.walk:
        try:
            verdict = walks.walk_classify(spec, args.walk)
        except ValueError as exc:
            raise CliFailure(EXIT_USAGE, f"malformed walk: {exc}") from None
        _report(args, _payload("walks", {"walk": args.walk, "class": verdict}),
                [f"{args.walk}: {verdict}"])
        return EXIT_OK
    strings = walks.enumerate_strings(spec, args.enum_len)
    bands = walks.enumerate_bands(spec, args.enum_len)
    fmt = lambda w: ",".join(a if s == 1 else f"{a}^-1" for a, s in w)
    results = {
        "max_length": args.enum_len,
        "strings": [fmt(w) for w in strings],
        "bands": [fmt(w) for w in bands],
    }
    lines = [f"strings up to length {args.enum_len}: {len(strings)}",
             f"bands up to length {args.enum_len}: {len(bands)}"]
    lines.extend("  band " + fmt(w) for w in bands)
    _report(args, _payload("walks", results), lines)
    return EXIT_OK


def cmd_builtin(args):
    names = catalog.builtin_names()
    results = {}
    lines = []
    for name in names:
        _, params = catalog.BUILTINS[name]
        results[name] = list(params)
        lines.append(f"{name}: parameters {', '.join(params)}")
    _report(args, _payload("builtin", results), lines)
    return EXIT_OK


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def run(argv):
    if not argv:
        print(__doc__.strip(), file=sys.stderr)
        return EXIT_USAGE
    verb = argv[0]
    if verb in ("-h", "--help"):
        print(__doc__.strip())
        print("verbs:", ", ".join(VERBS))
        return EXIT_OK
    if verb not in VERBS:
        print(f"unknown verb {verb!r}; known: {', '.join(VERBS)}", file=sys.stderr)
        return EXIT_USAGE
    parser = _parser(verb)
    try:
        args = parser.parse_args(argv[1:])
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    handler = globals()[f"cmd_{verb}"]
    try:
        return handler(args)
    except CliFailure as exc:
        print(exc.message, file=sys.stderr)
        return exc.code
    except AssumptionViolated as exc:
        print(f"assumptions violated: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
