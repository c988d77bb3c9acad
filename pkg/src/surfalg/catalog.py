"""Built-in catalogue of triangulation quivers and named algebra families.

Arrow names follow a fixed ascii convention; every builder returns a
fresh SurfaceAlgebraSpec over the requested field.
"""

from .fields import GF
from .quiver import Quiver, SurfaceAlgebraSpec, TriangulationQuiver


def disc_quiver():
    q = Quiver(
        [1, 2],
        [("alpha", 1, 1), ("beta", 1, 2), ("gamma", 2, 1), ("sigma", 2, 2)],
    )
    return TriangulationQuiver(q, [("alpha", "beta", "gamma"), ("sigma",)])


def triangle_quiver():
    q = Quiver(
        [1, 2, 3],
        [
            ("alpha1", 1, 2),
            ("alpha2", 2, 3),
            ("alpha3", 3, 1),
            ("beta1", 2, 1),
            ("beta2", 3, 2),
            ("beta3", 1, 3),
        ],
    )
    return TriangulationQuiver(
        q, [("alpha1", "alpha2", "alpha3"), ("beta1", "beta3", "beta2")]
    )


def sigma_quiver():
    q = Quiver(
        [1, 2, 3],
        [
            ("alpha", 1, 1),
            ("beta", 1, 2),
            ("gamma", 2, 1),
            ("sigma", 2, 3),
            ("delta", 3, 2),
            ("eta", 3, 3),
        ],
    )
    return TriangulationQuiver(q, [("alpha", "beta", "gamma"), ("eta", "delta", "sigma")])


def tetrahedral_quiver():
    q = Quiver(
        [1, 2, 3, 4, 5, 6],
        [
            ("delta", 1, 5),
            ("nu", 1, 6),
            ("epsilon", 2, 5),
            ("rho", 2, 6),
            ("beta", 3, 2),
            ("sigma", 3, 1),
            ("gamma", 4, 1),
            ("alpha", 4, 2),
            ("xi", 5, 3),
            ("eta", 5, 4),
            ("omega", 6, 4),
            ("mu", 6, 3),
        ],
    )
    return TriangulationQuiver(
        q,
        [
            ("delta", "eta", "gamma"),
            ("rho", "omega", "alpha"),
            ("epsilon", "xi", "beta"),
            ("nu", "mu", "sigma"),
        ],
    )


def spherical_quiver():
    q = Quiver(
        [1, 2, 3, 4, 5, 6],
        [
            ("alpha", 1, 2),
            ("rho", 1, 6),
            ("xi", 2, 5),
            ("beta", 2, 3),
            ("nu", 3, 5),
            ("gamma", 3, 4),
            ("sigma", 4, 1),
            ("mu", 4, 6),
            ("delta", 5, 1),
            ("eta", 5, 2),
            ("epsilon", 6, 4),
            ("omega", 6, 3),
        ],
    )
    return TriangulationQuiver(
        q,
        [
            ("alpha", "xi", "delta"),
            ("beta", "nu", "eta"),
            ("rho", "epsilon", "sigma"),
            ("gamma", "mu", "omega"),
        ],
    )


def phi_quiver():
    q = Quiver(
        [1, 2, 3, 4, 5],
        [
            ("alpha", 1, 2),
            ("omega", 1, 5),
            ("delta", 4, 1),
            ("eta", 4, 2),
            ("xi", 2, 4),
            ("beta", 2, 3),
            ("sigma", 3, 4),
            ("gamma", 3, 1),
            ("nu", 5, 3),
            ("epsilon", 5, 5),
        ],
    )
    return TriangulationQuiver(
        q,
        [
            ("alpha", "xi", "delta"),
            ("beta", "sigma", "eta"),
            ("gamma", "omega", "nu"),
            ("epsilon",),
        ],
    )


def psi_quiver():
    q = Quiver(
        [1, 2, 3, 4, 5, 6],
        [
            ("alpha", 1, 2),
            ("omega", 1, 5),
            ("delta", 4, 1),
            ("eta", 4, 2),
            ("xi", 2, 4),
            ("beta", 2, 3),
            ("sigma", 3, 4),
            ("gamma", 3, 1),
            ("nu", 5, 3),
            ("epsilon", 5, 6),
            ("mu", 6, 5),
            ("rho", 6, 6),
        ],
    )
    return TriangulationQuiver(
        q,
        [
            ("alpha", "xi", "delta"),
            ("beta", "sigma", "eta"),
            ("gamma", "omega", "nu"),
            ("epsilon", "rho", "mu"),
        ],
    )


def disc2_quiver():
    q = Quiver(
        [1, 2, 3, 4],
        [
            ("beta", 1, 4),
            ("xi", 1, 2),
            ("delta", 2, 3),
            ("eta", 2, 1),
            ("alpha", 3, 1),
            ("rho", 3, 3),
            ("nu", 4, 2),
            ("gamma", 4, 4),
        ],
    )
    return TriangulationQuiver(
        q, [("alpha", "xi", "delta"), ("beta", "nu", "eta"), ("rho",), ("gamma",)]
    )


def _spec(tq, m, c, field):
    return SurfaceAlgebraSpec(tq, m, c, field)


def _check_r(r, minimum, name):
    if not (isinstance(r, int) and r >= minimum):
        raise ValueError(f"{name} needs an integer r >= {minimum}, got {r!r}")


def make_disc(field, a=None, b=None, m_alpha=3, m_beta=1):
    """Two-vertex family: loop weight m_alpha (3 for the classical case)."""
    tq = disc_quiver()
    if a is None:
        a = field.one if m_alpha == 2 else field.from_int(2)
    b = field.one if b is None else b
    if m_alpha < 2:
        raise ValueError("disc needs m_alpha >= 2")
    return _spec(tq, {"alpha": m_alpha, "beta": m_beta}, {"alpha": a, "beta": b}, field)


def make_omega_r(field, r, a=None, b=None):
    _check_r(r, 4, "Omega_r")
    tq = disc_quiver()
    a = field.from_int(2) if a is None else a
    b = field.one if b is None else b
    return _spec(tq, {"alpha": r, "beta": 1}, {"alpha": a, "beta": b}, field)


def make_triangle(field, c1=None, c2=None, c3=None, m1=2, m2=2, m3=1):
    tq = triangle_quiver()
    c1 = field.from_int(2) if c1 is None else c1
    c2 = field.one if c2 is None else c2
    c3 = field.one if c3 is None else c3
    return _spec(
        tq,
        {"alpha1": m1, "alpha2": m2, "alpha3": m3},
        {"alpha1": c1, "alpha2": c2, "alpha3": c3},
        field,
    )


def make_sigma(field, a=None, b=None, c=None):
    tq = sigma_quiver()
    a = field.one if a is None else a
    b = field.from_int(2) if b is None else b
    c = field.one if c is None else c
    return _spec(tq, {"alpha": 2, "beta": 1, "eta": 2}, {"alpha": a, "beta": b, "eta": c}, field)


def make_sigma_r(field, r, a=None, b=None, c=None):
    _check_r(r, 3, "Sigma_r")
    tq = sigma_quiver()
    a = field.one if a is None else a
    b = field.from_int(2) if b is None else b
    c = field.from_int(2) if c is None else c
    return _spec(tq, {"alpha": 2, "beta": 1, "eta": r}, {"alpha": a, "beta": b, "eta": c}, field)


def make_tetrahedral(field, lam=None):
    tq = tetrahedral_quiver()
    lam = field.from_int(2) if lam is None else lam
    m = {"alpha": 1, "beta": 1, "gamma": 1, "delta": 1}
    c = {"alpha": lam, "beta": field.one, "gamma": field.one, "delta": field.one}
    return _spec(tq, m, c, field)


def make_spherical(field, a=None, b=None, c=None, d=None):
    tq = spherical_quiver()
    a = field.from_int(2) if a is None else a
    b = field.one if b is None else b
    c = field.one if c is None else c
    d = field.one if d is None else d
    m = {"alpha": 1, "rho": 1, "xi": 1, "mu": 1}
    return _spec(tq, m, {"alpha": a, "rho": b, "xi": c, "mu": d}, field)


def make_s_r(field, r, a=None, b=None, c=None, d=None):
    _check_r(r, 2, "S_r")
    tq = spherical_quiver()
    a = field.from_int(2) if a is None else a
    b = field.from_int(2) if b is None else b
    c = field.one if c is None else c
    d = field.from_int(2) if d is None else d
    m = {"alpha": 1, "rho": 1, "xi": 1, "mu": r}
    return _spec(tq, m, {"alpha": a, "rho": b, "xi": c, "mu": d}, field)


def make_phi(field, a=None, b=None, c=None):
    tq = phi_quiver()
    a = field.from_int(2) if a is None else a
    b = field.from_int(2) if b is None else b
    c = field.one if c is None else c
    m = {"alpha": 1, "delta": 1, "xi": 1}
    return _spec(tq, m, {"alpha": a, "delta": b, "xi": c}, field)


def make_psi_r(field, r, a=None, b=None, c=None, d=None):
    _check_r(r, 2, "Psi_r")
    tq = psi_quiver()
    a = field.from_int(2) if a is None else a
    b = field.from_int(2) if b is None else b
    c = field.one if c is None else c
    if d is None:
        # the loop orbit is virtual exactly when r = 2
        d = field.one if r == 2 else field.from_int(2)
    m = {"alpha": 1, "delta": 1, "xi": 1, "rho": r}
    return _spec(tq, m, {"alpha": a, "delta": b, "xi": c, "rho": d}, field)


def make_disc2(field, a=None, b=None):
    tq = disc2_quiver()
    a = field.from_int(2) if a is None else a
    b = field.one if b is None else b
    return _spec(tq, {"alpha": 1, "xi": 1}, {"alpha": a, "xi": b}, field)


BUILTINS = {
    "disc": (make_disc, ("a", "b", "m_alpha", "m_beta")),
    "triangle": (make_triangle, ("c1", "c2", "c3", "m1", "m2", "m3")),
    "sigma": (make_sigma, ("a", "b", "c")),
    "tetrahedral": (make_tetrahedral, ("lam",)),
    "spherical": (make_spherical, ("a", "b", "c", "d")),
    "s_r": (make_s_r, ("r", "a", "b", "c", "d")),
    "sigma_r": (make_sigma_r, ("r", "a", "b", "c")),
    "omega_r": (make_omega_r, ("r", "a", "b")),
    "phi": (make_phi, ("a", "b", "c")),
    "psi_r": (make_psi_r, ("r", "a", "b", "c", "d")),
    "disc2": (make_disc2, ("a", "b")),
}

_INT_PARAMS = {"r", "m_alpha", "m_beta", "m1", "m2", "m3"}


def builtin(name, field=None, **params):
    """Construct a catalogued spec; unknown names and bad params raise."""
    key = name.lower()
    if key not in BUILTINS:
        raise ValueError(f"unknown builtin {name!r}; known: {', '.join(sorted(BUILTINS))}")
    maker, accepted = BUILTINS[key]
    field = GF(101) if field is None else field
    for p in params:
        if p not in accepted:
            raise ValueError(f"builtin {name!r} does not take parameter {p!r}")
    return maker(field, **params)


def builtin_names():
    return sorted(BUILTINS)


def parse_params(pairs, field):
    """Parse CLI-style k=v parameter pairs for `builtin`."""
    out = {}
    for pair in pairs:
        if "=" not in pair:
            raise ValueError(f"parameter must look like key=value, got {pair!r}")
        key, value = pair.split("=", 1)
        key = key.strip()
        if key in _INT_PARAMS:
            out[key] = int(value)
        elif key == "lam" or len(key) <= 2:
            out[key] = field.parse(value)
        else:
            raise ValueError(f"unknown parameter {key!r}")
    return out
