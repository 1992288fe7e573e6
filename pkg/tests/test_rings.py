"""Presentations, the standard-monomial basis, and element arithmetic."""

import random

import pytest

from cyclicideals import (DimensionLimitError, NotExpressibleError,
                          PresentationError, RingPresentation, RingSyntaxError,
                          build_algebra, parse_element, parse_presentation,
                          power_form, pres_str)
from cyclicideals.rings import mono_str
from conftest import (AXIS_SOCLE, PAIR_N3, POWER_SERIES, TWO_AXES, build,
                      build_pres)


# ---------------------------------------------------------------------------
# parsing


def test_parse_pair_n3():
    pres = parse_presentation(PAIR_N3)
    assert pres.p == 2
    assert pres.vars == ("x", "y")
    assert pres.relations == ((0, 3), (1, 1), (3, 0))
    assert pres.truncate is None
    assert pres.nonnilpotent == (False, False)


def test_slash_and_newline_forms_agree():
    multiline = "field 2\nvars x y\nrel x^3\nrel y^3\nrel x*y  # socle note\n"
    assert parse_presentation(multiline) == parse_presentation(PAIR_N3)


def test_parse_repeated_factor_accumulates():
    pres = parse_presentation("field 2 / vars x y / rel x*x*y / rel x^4 / rel y^2")
    assert (2, 1) in pres.relations


def test_syntax_error_position():
    with pytest.raises(RingSyntaxError) as info:
        parse_presentation("field 2\nvars x\nrel x*z\n")
    assert info.value.line == 3
    assert info.value.column == 7
    assert "unknown variable 'z'" in str(info.value)


@pytest.mark.parametrize("text,fragment", [
    ("field 2 / field 3 / vars x / rel x^2", "duplicate field"),
    ("field two / vars x / rel x^2", "field expects an integer"),
    ("vars x / rel x^2 / field 2 / rel x^2 / vars y", "duplicate vars"),
    ("field 2 / rel x^2 / vars x", "rel before vars"),
    ("field 2 / vars x / rel x^0", "exponent must be a positive integer"),
    ("field 2 / vars x / rel", "empty monomial"),
    ("field 2 / vars x / rel *x", "unexpected '*'"),
    ("field 2 / vars x / rel x x", "between factors"),
    ("field 2 / vars x / ideal x", "unknown declaration"),
    ("field 2 / vars x / truncate 4 / truncate 5", "duplicate truncate"),
])
def test_syntax_errors(text, fragment):
    with pytest.raises(RingSyntaxError, match=fragment):
        parse_presentation(text)


@pytest.mark.parametrize("text,fragment", [
    ("field 4 / vars x / rel x^2", "field size not prime"),
    ("field 2 / vars x x / rel x^2", "duplicate variable"),
    ("field 2 / vars x y / rel x / rel y^2", "degree-1 relation"),
    ("field 2 / vars x", "infinite dimensional without truncate"),
    ("field 2 / vars x / truncate 1", "truncate bound must be at least 2"),
    ("vars x / rel x^2", "missing field"),
    ("field 2", "missing vars"),
])
def test_presentation_errors(text, fragment):
    with pytest.raises(PresentationError, match=fragment):
        parse_presentation(text)


def test_presentation_error_no_vars():
    with pytest.raises(PresentationError, match="no variables"):
        RingPresentation.make(2, (), [])


def test_mono_and_pres_rendering():
    assert mono_str((2, 1), ("x", "y")) == "x^2*y"
    assert mono_str((0, 0), ("x", "y")) == "1"
    pres = parse_presentation(PAIR_N3)
    assert pres_str(pres) == "GF(2)[x,y]/(y^3,x*y,x^3)"
    trunc = parse_presentation(POWER_SERIES)
    assert pres_str(trunc) == "GF(2)[x] truncated at degree 6"


def test_nonnilpotent_flags():
    assert parse_presentation(TWO_AXES).nonnilpotent == (True, True)
    assert parse_presentation(AXIS_SOCLE).nonnilpotent == (True, False)


# ---------------------------------------------------------------------------
# basis enumeration


def test_pair_n3_basis():
    alg = build(PAIR_N3)
    assert alg.dim == 5
    assert alg.basis == ((0, 0), (1, 0), (0, 1), (2, 0), (0, 2))


def test_truncated_chain_basis():
    alg = build(POWER_SERIES)
    assert alg.dim == 6
    x = alg.var("x")
    assert not (x ** 5).is_zero()
    assert (x ** 6).is_zero()


def test_impure_relation_prunes_basis():
    alg = build("field 2 / vars x y / rel x^3 / rel y^3 / rel x^2*y")
    assert (2, 1) not in alg.basis
    assert (1, 2) in alg.basis
    x, y = alg.gens
    assert (x * x * y).is_zero()
    assert not (x * y * y).is_zero()


def test_dimension_limit():
    pres = parse_presentation(PAIR_N3)
    with pytest.raises(DimensionLimitError):
        build_algebra(pres, max_dim=3)
    with pytest.raises(DimensionLimitError):
        build_algebra(parse_presentation("field 2 / vars x / truncate 5000"),
                      max_dim=4096)


# ---------------------------------------------------------------------------
# element arithmetic


def _random_element(rng, alg):
    return alg.element([rng.randrange(alg.p) for _ in range(alg.dim)])


@pytest.mark.parametrize("text", [PAIR_N3, "field 3 / vars x y / rel x^3 / rel y^2",
                                  AXIS_SOCLE])
def test_ring_axioms_sampled(text):
    alg = build(text)
    rng = random.Random(len(text))
    one = alg.unit()
    for _ in range(60):
        a, b, c = (_random_element(rng, alg) for _ in range(3))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * one == a
        assert (a - a).is_zero()


def test_maximal_ideal_elements_nilpotent():
    alg = build("field 3 / vars x y / rel x^3 / rel y^2")
    rng = random.Random(7)
    for _ in range(40):
        coeffs = [0] + [rng.randrange(3) for _ in range(alg.dim - 1)]
        v = alg.element(coeffs)
        assert (v ** alg.dim).is_zero()


def test_unit_detection():
    alg = build(PAIR_N3)
    x, y = alg.gens
    assert (alg.unit() + x).is_unit()
    assert not (x + y).is_unit()


def test_element_str():
    alg = build("field 3 / vars x y / rel x^3 / rel y^2")
    z = parse_element(alg, "1 + 2*x^2 + x*y")
    # basis order is by degree, then earlier-variable powers first
    assert str(z) == "1 + 2*x^2 + x*y"
    assert str(alg.zero()) == "0"


# ---------------------------------------------------------------------------
# element expressions


def test_parse_element_basic():
    alg = build(PAIR_N3)
    x, y = alg.gens
    assert parse_element(alg, "x+y") == x + y
    assert parse_element(alg, "x^2 + x*y") == x * x  # x*y dies in the quotient
    assert parse_element(alg, "0").is_zero()
    assert parse_element(alg, "1") == alg.unit()


def test_parse_element_signs_mod_p():
    alg = build("field 3 / vars x y / rel x^3 / rel y^2")
    x, y = alg.gens
    assert parse_element(alg, "-x + 4*y") == x.scale(2) + y
    assert parse_element(alg, "2*x - y") == x.scale(2) - y


@pytest.mark.parametrize("text", ["", "x +", "q", "x^", "x^y", "1 2", "(x)"])
def test_parse_element_errors(text):
    alg = build(PAIR_N3)
    with pytest.raises(ValueError):
        parse_element(alg, text)


# ---------------------------------------------------------------------------
# unit-times-power form


def test_power_form_chain():
    alg = build("field 2 / vars x / rel x^4")
    x = alg.gens[0]
    z = x ** 2 + x ** 3
    a, n = power_form(alg, x, z)
    assert n == 2
    assert a.is_unit()
    assert a * x ** n == z
    assert power_form(alg, x, x) == (alg.unit(), 1)


def test_power_form_gf3():
    alg = build("field 3 / vars x / rel x^4 / rel x*x^3")  # plain chain, p = 3
    x = alg.gens[0]
    z = x.scale(2) * x  # 2x^2
    a, n = power_form(alg, x, z)
    assert n == 2 and a * x ** n == z and a.is_unit()


def test_power_form_rejects():
    alg = build(PAIR_N3)
    x, y = alg.gens
    with pytest.raises(NotExpressibleError):
        power_form(alg, x, alg.zero())
    with pytest.raises(NotExpressibleError):
        power_form(alg, x, y)  # outside Rx
    # inside Rx but with no unit-times-power expression: x*y in a ring
    # where Rx is not a chain
    wide = build("field 2 / vars x y / rel x^2 / rel y^2")
    wx, wy = wide.gens
    with pytest.raises(NotExpressibleError):
        power_form(wide, wx, wx * wy)


def test_power_form_every_member_of_chain():
    _, alg = build_pres(POWER_SERIES)
    x = alg.gens[0]
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randrange(1, 6)
        unit = alg.unit() + _random_element(rng, alg) * alg.gens[0]
        z = unit * x ** n
        a, m = power_form(alg, x, z)
        assert m == n
        assert a * x ** m == z
