"""Catalogue structure checks against the documented orbit data."""

import pytest

from surfalg.catalog import builtin, builtin_names, parse_params
from surfalg.fields import GF, QQ


def test_names_complete():
    assert builtin_names() == sorted(
        ["disc", "triangle", "sigma", "tetrahedral", "spherical",
         "s_r", "sigma_r", "omega_r", "phi", "psi_r", "disc2"]
    )


def test_disc_shape():
    spec = builtin("disc", GF(7), a=1)
    assert len(spec.quiver.vertices) == 2 and len(spec.quiver.arrows) == 4
    assert spec.dim_formula() == 12


def test_tetrahedral_shape():
    spec = builtin("tetrahedral", GF(5), lam=2)
    assert len(spec.quiver.vertices) == 6 and len(spec.quiver.arrows) == 12
    assert all(spec.m[o] == 1 for o in spec.tq.g_orbits)
    assert sorted(len(o) for o in spec.tq.g_orbits) == [3, 3, 3, 3]


def test_psi_orbit_lengths():
    spec = builtin("psi_r", GF(7), r=2)
    assert len(spec.quiver.vertices) == 6
    assert sorted(len(o) for o in spec.tq.g_orbits) == [1, 2, 3, 6]
    fixed = [o for o in spec.tq.g_orbits if len(o) == 1]
    assert fixed == [("rho",)]


def test_spherical_orbits():
    spec = builtin("spherical", GF(7))
    lens = sorted(len(o) for o in spec.tq.g_orbits)
    assert lens == [2, 2, 4, 4]


def test_sigma_r_range():
    with pytest.raises(ValueError):
        builtin("sigma_r", GF(7), r=2)
    with pytest.raises(ValueError):
        builtin("s_r", GF(7), r=1)
    with pytest.raises(ValueError):
        builtin("omega_r", GF(7), r=3)
    with pytest.raises(ValueError):
        builtin("psi_r", GF(7), r=1)


def test_unknown_name_and_param():
    with pytest.raises(ValueError):
        builtin("moebius", GF(7))
    with pytest.raises(ValueError):
        builtin("disc", GF(7), r=3)


def test_parse_params():
    f = GF(7)
    out = parse_params(["r=4", "a=3", "b=1/2"], f)
    assert out == {"r": 4, "a": 3, "b": f.div(1, 2)}
    with pytest.raises(ValueError):
        parse_params(["nope"], f)


def test_dim_formulas():
    f = QQ
    expected = {
        ("disc", ()): 12,
        ("triangle", ()): 20,
        ("sigma", ()): 20,
        ("tetrahedral", ()): 36,
        ("spherical", ()): 40,
        ("phi", ()): 38,
        ("disc2", ()): 40,
        ("s_r", (("r", 2),)): 44,
        ("sigma_r", (("r", 4),)): 22,
        ("omega_r", (("r", 5),)): 14,
        ("psi_r", (("r", 3),)): 52,
    }
    for (name, params), dim in expected.items():
        assert builtin(name, f, **dict(params)).dim_formula() == dim
