"""String and band classification over the monomial quotient."""

import pytest

from surfalg.catalog import builtin
from surfalg.fields import GF
from surfalg.walks import (enumerate_bands, enumerate_strings, parse_walk,
                           walk_classify)


def test_parse_walk():
    assert parse_walk("alpha,gamma^-1,sigma") == [
        ("alpha", 1), ("gamma", -1), ("sigma", 1)
    ]
    assert parse_walk("alpha beta^-1") == [("alpha", 1), ("beta", -1)]


def test_band_on_two_vertex_family():
    spec = builtin("omega_r", GF(7), r=4)
    assert walk_classify(spec, "alpha,gamma^-1,sigma,beta^-1") == "band"


def test_composition_pair_is_neither():
    spec = builtin("omega_r", GF(7), r=4)
    # alpha . f(alpha) generates the monomial ideal
    assert walk_classify(spec, "alpha,beta") == "neither"


def test_cancellation_is_neither():
    spec = builtin("omega_r", GF(7), r=4)
    assert walk_classify(spec, [("alpha", 1), ("alpha", -1)]) == "neither"


def test_long_run_is_neither():
    spec = builtin("disc", GF(7))  # q(alpha) = 3, so alpha^2 is a zero run
    assert walk_classify(spec, "alpha,alpha") == "neither"
    spec = builtin("omega_r", GF(7), r=4)  # q(alpha) = 4 allows alpha^2
    assert walk_classify(spec, "alpha,alpha") == "string"


def test_virtual_arrow_is_zero():
    spec = builtin("triangle", GF(7))
    assert walk_classify(spec, "alpha3") == "neither"
    assert walk_classify(spec, "alpha1") == "string"


def test_malformed_walks():
    spec = builtin("disc", GF(7))
    with pytest.raises(ValueError):
        walk_classify(spec, "alpha,zeta")
    with pytest.raises(ValueError):
        walk_classify(spec, "beta,beta")  # beta ends at 2, starts at 1
    with pytest.raises(ValueError):
        walk_classify(spec, "")


def test_noncyclic_string_not_band():
    spec = builtin("omega_r", GF(7), r=4)
    assert walk_classify(spec, "gamma^-1,sigma") == "string"


def test_direct_only_cycle_not_band():
    spec = builtin("omega_r", GF(7), r=5)
    # cyclic and reduced, but has no inverse letter
    assert walk_classify(spec, "alpha,alpha") != "band"


def test_power_not_band():
    spec = builtin("omega_r", GF(7), r=5)
    v = "alpha,gamma^-1,sigma,beta^-1"
    assert walk_classify(spec, v) == "band"
    assert walk_classify(spec, v + "," + v) == "string"  # a proper power


def test_enumeration_contains_band():
    spec = builtin("omega_r", GF(7), r=4)
    bands = enumerate_bands(spec, 4)
    assert len(bands) >= 1
    strings = enumerate_strings(spec, 2)
    assert all(walk_classify(spec, w) in ("string", "band") for w in strings)


def test_enumeration_deterministic():
    spec = builtin("sigma_r", GF(7), r=3)
    a = enumerate_strings(spec, 3)
    b = enumerate_strings(spec, 3)
    assert a == b
