"""Text format: parsing, rejection of bad input, serialization."""

import pytest

from surfalg.catalog import builtin
from surfalg.fields import GF
from surfalg.specfile import (SpecParseError, parse_spec, parse_spec_text,
                              spec_from_parts, spec_to_text)

DISC = """
# two-vertex example
field GF(7)
vertices 1 2
arrow alpha 1 1
arrow beta 1 2
arrow gamma 2 1
arrow sigma 2 2
f (alpha beta gamma) (sigma)
m alpha 3
m beta 1
c alpha 2
c beta 1
"""


def test_parse_disc():
    spec = parse_spec(DISC)
    assert spec.dim_formula() == 12
    assert spec.field == GF(7)
    assert spec.q("alpha") == 3
    assert spec.c_of("alpha") == 2


def test_fixed_points_inferred():
    text = DISC.replace("f (alpha beta gamma) (sigma)", "f (alpha beta gamma)")
    spec = parse_spec(text)
    assert spec.tq.f["sigma"] == "sigma"


def test_roundtrip():
    spec = parse_spec(DISC)
    text = spec_to_text(spec)
    again = parse_spec(text)
    assert spec_to_text(again) == text
    assert again.dim_formula() == 12


def test_roundtrip_builtin():
    spec = builtin("psi_r", GF(11), r=3)
    again = parse_spec(spec_to_text(spec))
    assert again.dim_formula() == spec.dim_formula()
    assert again.tq.f == spec.tq.f


def test_unknown_key_rejected():
    with pytest.raises(SpecParseError):
        parse_spec(DISC + "\nweight alpha 3\n")


def test_missing_field_rejected():
    with pytest.raises(SpecParseError):
        parse_spec(DISC.replace("field GF(7)", ""))


def test_bad_f_rejected():
    with pytest.raises(SpecParseError):
        parse_spec(DISC.replace("f (alpha beta gamma) (sigma)", "f alpha beta"))


def test_conflicting_representatives_rejected():
    with pytest.raises((SpecParseError, ValueError)):
        parse_spec(DISC + "m gamma 2\n")


def test_rational_field_and_fractions():
    text = DISC.replace("field GF(7)", "field Q").replace("c alpha 2", "c alpha 3/4")
    spec = parse_spec(text)
    from fractions import Fraction
    assert spec.c_of("alpha") == Fraction(3, 4)


def test_invalid_f_surfaces_through_parts():
    text = DISC.replace("f (alpha beta gamma) (sigma)", "f (alpha gamma beta) (sigma)")
    parts = parse_spec_text(text)
    from surfalg.quiver import AssumptionViolated
    with pytest.raises(AssumptionViolated):
        spec_from_parts(parts)
