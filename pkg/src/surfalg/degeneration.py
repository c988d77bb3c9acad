"""One-parameter families joining the full quotient to its split form.

For a generic spec the family scales the cyclic relation of each arrow
by t^v with v from the numerical profile; at t=0 this is the split
("biserial") table and at t=1 the full one.  The exceptional families
that are not generic carry bespoke exponent tables; the family relations
are rebuilt from them, with the scaling exponent of each cyclic relation
derived from the arrow exponents so that the rescaling map is an
isomorphism for every nonzero t.
"""

from . import catalog
from .algebra import Relation, build_algebra, cycle_paths, relation_generators
from .classify import classify
from .quiver import require_assumptions


class NonGenericWithoutFamilyTag(RuntimeError):
    pass


def _family_u(family, spec, r):
    if family == "S_r":
        return {
            "alpha": r, "beta": 2 * r, "gamma": r, "sigma": 4 * r,
            "rho": r, "omega": 4 * r, "nu": r, "delta": 2 * r,
            "xi": 4 * r, "eta": 4 * r, "epsilon": 4, "mu": 4,
        }
    if family == "Sigma_r":
        if r == 3:
            return {"alpha": 6, "beta": 2, "gamma": 3, "eta": 4, "delta": 4, "sigma": 3}
        return {
            "alpha": 3 * r, "beta": r, "gamma": r,
            "eta": 6, "delta": 2 * r, "sigma": 2 * r,
        }
    if family == "Omega_r":
        if r == 4:
            return {"sigma": 5, "gamma": 5, "beta": 6, "alpha": 4}
        return {"sigma": r, "gamma": r, "beta": 2 * r, "alpha": 4}
    if family == "Phi":
        return {
            "alpha": 5, "beta": 5, "gamma": 10, "xi": 10, "eta": 10,
            "delta": 4, "omega": 4, "epsilon": 4, "nu": 4, "sigma": 4,
        }
    if family == "Psi_r":
        return {
            "alpha": 3 * r, "beta": 3 * r, "gamma": 6 * r, "xi": 6 * r,
            "eta": 6 * r, "rho": 12, "delta": 2 * r, "omega": 2 * r,
            "epsilon": 2 * r, "mu": 2 * r, "nu": 2 * r, "sigma": 2 * r,
        }
    return None


_FAMILY_QUIVERS = {
    "S_r": catalog.spherical_quiver,
    "Sigma_r": catalog.sigma_quiver,
    "Omega_r": catalog.disc_quiver,
    "Phi": catalog.phi_quiver,
    "Psi_r": catalog.psi_quiver,
}

_FAMILY_R_ORBIT = {
    # arrow naming the orbit whose weight is the family parameter r
    "S_r": "mu",
    "Sigma_r": "eta",
    "Omega_r": "alpha",
    "Psi_r": "rho",
}


def _matches_catalog(spec, family):
    maker = _FAMILY_QUIVERS.get(family)
    if maker is None:
        return False
    ref = maker()
    mine = spec.tq
    if set(mine.quiver.vertices) != set(ref.quiver.vertices):
        return False
    mine_arrows = {(a.name, a.source, a.target) for a in mine.quiver.arrows}
    ref_arrows = {(a.name, a.source, a.target) for a in ref.quiver.arrows}
    return mine_arrows == ref_arrows and mine.f == ref.f


def exponent_tables(spec):
    """(v-exponents per arrow, u-exponents per arrow) for the family of spec."""
    cls = classify(spec)
    profile = cls.profile
    tq = spec.tq
    if cls.family == "Generic":
        return dict(profile.v), dict(profile.u), cls
    if cls.family in _FAMILY_QUIVERS and _matches_catalog(spec, cls.family):
        if cls.family == "Phi":
            r = 1
        else:
            rep = _FAMILY_R_ORBIT[cls.family]
            r = spec.m[tq.orbit_of[rep]]
        u = _family_u(cls.family, spec, r)
        v = {}
        for a in u:
            a_bar = cycle_paths(spec, tq.bar[a]).a_word
            v[a] = sum(u[x] for x in a_bar) - u[a] - u[tq.f[a]]
        if any(val < 1 for val in v.values()):
            raise NonGenericWithoutFamilyTag(
                f"family exponents for {cls.family} fail positivity"
            )
        return v, u, cls
    raise NonGenericWithoutFamilyTag(
        f"spec classifies as {cls.family}: no one-parameter family is defined"
    )


def degeneration_generators(spec, t, v_exp):
    """Relations of the family member at parameter t."""
    field = spec.field
    tq = spec.tq
    gens = []
    for a in tq.f:
        fa = tq.f[a]
        bar = tq.bar[a]
        coeff = spec.c_of(bar)
        tpow = field.one
        for _ in range(v_exp[a]):
            tpow = field.mul(tpow, t)
        coeff = field.mul(coeff, tpow)
        if coeff == field.zero:
            gens.append(
                Relation(((field.one, (a, fa)),), tq.source(a), tq.target(fa), "cyclic-t0")
            )
        else:
            gens.append(
                Relation(
                    ((field.one, (a, fa)), (field.neg(coeff), cycle_paths(spec, bar).a_word)),
                    tq.source(a),
                    tq.target(fa),
                    "cyclic-t",
                )
            )
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
    for rel in relation_generators(spec, "weighted"):
        if rel.tag in ("zero-ffg", "zero-ggf"):
            gens.append(rel)
    return gens


def degeneration_algebra(spec, t, n_extra=0):
    """The table of the family member at parameter t (t in the field)."""
    require_assumptions(spec)
    field = spec.field
    v_exp, u_exp, cls = exponent_tables(spec)
    gens = degeneration_generators(spec, t, v_exp)
    style = "uniform" if t == field.zero else "weighted"
    table = build_algebra(
        spec,
        kind="degeneration",
        n_extra=n_extra,
        generators=gens,
        basis_style=style,
        expected_dim=spec.dim_formula(),
    )
    table.deg_parameter = t
    return table


def verify_degeneration_isomorphism(spec, t, n_extra=0):
    """Check that rescaling arrows by t^u maps the t=1 member onto A(t)."""
    field = spec.field
    if t == field.zero:
        raise ValueError("the rescaling map needs a nonzero t")
    v_exp, u_exp, cls = exponent_tables(spec)
    table_t = degeneration_algebra(spec, t, n_extra=n_extra)
    gens_1 = degeneration_generators(spec, field.one, v_exp)

    def tpow(n):
        out = field.one
        for _ in range(n):
            out = field.mul(out, t)
        return out

    all_zero = True
    for rel in gens_1:
        total = {}
        for coeff, word in rel.terms:
            scaled = field.mul(coeff, tpow(sum(u_exp[a] for a in word)))
            vec = table_t.path_class(word)
            for k, c in vec.items():
                total[k] = field.add(total.get(k, field.zero), field.mul(scaled, c))
        if any(c != field.zero for c in total.values()):
            all_zero = False
            break

    dagger = True
    tq = spec.tq
    for a in tq.f:
        lhs = v_exp[a] + u_exp[a] + u_exp[tq.f[a]]
        rhs = sum(u_exp[x] for x in cycle_paths(spec, tq.bar[a]).a_word)
        if lhs != rhs:
            dagger = False
    dims_equal = table_t.dim == spec.dim_formula()

    ok = all_zero and dagger and dims_equal
    return {
        "ok": ok,
        "family": cls.family,
        "relations_map_into_ideal": all_zero,
        "dagger_identity": dagger,
        "dimension_equal": dims_equal,
        "t": field.to_json(t),
    }
