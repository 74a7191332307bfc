"""Exterior calculus with exact coefficients and the four-slot complex."""

import random
from fractions import Fraction

import pytest

from bvdouble.exterior import (
    DifferentialForm,
    YMElement,
    dform,
    form_integral,
    hodge,
    random_form,
    random_ym_element,
    wedge,
    ym_cinf_residuals,
    ym_mu_sym,
    ym_nu_sym,
    ym_q,
)
from bvdouble.scalars import FourierScalar, GaussRational, Metric

DIM = 3
LORENTZ = Metric.diagonal([1, 1, -1])
EUCLID = Metric.diagonal([1, 1, 1])


@pytest.fixture
def rng():
    return random.Random(24680)


def _harm(mode, coeff=1):
    return FourierScalar.harmonic(DIM, mode, coeff)


def _basis_one_form(slot, value):
    comps = [FourierScalar.zero(DIM) for _ in range(DIM)]
    comps[slot] = value
    return DifferentialForm.one_form(comps)


# -- wedge and d -----------------------------------------------------------


@pytest.mark.parametrize("p,q", [(0, 1), (1, 1), (1, 2), (2, 1), (0, 3)])
def test_wedge_graded_commutativity(rng, p, q):
    for _ in range(5):
        a = random_form(rng, DIM, 2, p)
        b = random_form(rng, DIM, 2, q)
        sgn = -1 if (p * q) % 2 else 1
        assert wedge(a, b) == sgn * wedge(b, a)


def test_wedge_associativity(rng):
    for _ in range(5):
        a = random_form(rng, DIM, 1, 1)
        b = random_form(rng, DIM, 1, 1)
        c = random_form(rng, DIM, 1, 1)
        assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


@pytest.mark.parametrize("p", [0, 1, 2, 3])
def test_d_squared_vanishes(rng, p):
    for _ in range(5):
        a = random_form(rng, DIM, 2, p)
        first = dform(a)
        assert dform(first).is_zero()


@pytest.mark.parametrize("p,q", [(0, 0), (0, 1), (1, 1), (1, 2), (2, 0)])
def test_d_is_a_graded_derivation_of_wedge(rng, p, q):
    for _ in range(5):
        a = random_form(rng, DIM, 2, p)
        b = random_form(rng, DIM, 2, q)
        sgn = -1 if p % 2 else 1
        lhs = dform(wedge(a, b))
        rhs = wedge(dform(a), b) + sgn * wedge(a, dform(b))
        assert lhs == rhs


def test_d_of_function_collects_partials():
    f = _harm((1, 2, 0))
    df = dform(DifferentialForm.from_scalar(f))
    assert df.component((0,)) == _harm((1, 2, 0), GaussRational(0, 1))
    assert df.component((1,)) == _harm((1, 2, 0), GaussRational(0, 2))
    assert df.component((2,)).is_zero()


# -- Hodge star ------------------------------------------------------------


def test_star_on_basis_forms_signature_two_one():
    one = FourierScalar.one(DIM)
    vol = DifferentialForm(DIM, 3, {(0, 1, 2): one})
    assert hodge(DifferentialForm.from_scalar(one), LORENTZ) == vol
    # spacelike direction keeps its sign, timelike flips it
    assert hodge(_basis_one_form(0, one), LORENTZ) == DifferentialForm(
        DIM, 2, {(1, 2): one}
    )
    assert hodge(_basis_one_form(2, one), LORENTZ) == DifferentialForm(
        DIM, 2, {(0, 1): -one}
    )


@pytest.mark.parametrize("metric,det_sign", [(EUCLID, 1), (LORENTZ, -1)])
@pytest.mark.parametrize("p", [0, 1, 2, 3])
def test_star_squared_sign_law(rng, metric, det_sign, p):
    for _ in range(4):
        a = random_form(rng, DIM, 2, p)
        sgn = -1 if (p * (DIM - p)) % 2 else 1
        assert hodge(hodge(a, metric), metric) == (det_sign * sgn) * a


def test_star_uses_the_metric_volume_weight():
    stretched = Metric.diagonal([1, 4])
    one = FourierScalar.one(2)
    out = hodge(DifferentialForm.from_scalar(one), stretched)
    assert out == DifferentialForm(2, 2, {(0, 1): one * Fraction(1, 2)})


def test_star_rejects_non_square_volume():
    with pytest.raises(ValueError, match="square"):
        hodge(
            DifferentialForm.from_scalar(FourierScalar.one(2)),
            Metric.diagonal([1, 2]),
        )


def test_integral_reads_the_constant_volume_mode(rng):
    top = random_form(rng, DIM, 2, DIM)
    assert form_integral(top) == top.component((0, 1, 2)).integral()
    shifted = DifferentialForm(DIM, 3, {(0, 1, 2): _harm((1, 0, 0))})
    assert not form_integral(shifted)


def test_pairing_symmetry_on_equal_degrees(rng):
    for p in range(DIM + 1):
        a = random_form(rng, DIM, 2, p)
        b = random_form(rng, DIM, 2, p)
        lhs = form_integral(wedge(a, hodge(b, LORENTZ)))
        rhs = form_integral(wedge(b, hodge(a, LORENTZ)))
        assert lhs == rhs


# -- the four-slot complex -------------------------------------------------


@pytest.mark.parametrize("degree,form_degree", [(0, 0), (1, 1), (2, 2), (3, 3)])
def test_slot_degrees(degree, form_degree):
    x = YMElement.zero(degree, DIM)
    assert x.form.degree == form_degree
    with pytest.raises(AssertionError):
        YMElement(degree, DifferentialForm.zero(DIM, (form_degree + 1) % (DIM + 1)))


def test_degree_mismatch_add_raises(rng):
    x = random_ym_element(rng, DIM, 1, 1)
    y = random_ym_element(rng, DIM, 1, 2)
    with pytest.raises(AssertionError):
        x + y
    assert (x + YMElement.zero(2, DIM)) == x


@pytest.mark.parametrize("degree", [0, 1, 2, 3])
def test_differential_squares_to_zero(rng, degree):
    for _ in range(4):
        x = random_ym_element(rng, DIM, 2, degree)
        assert ym_q(ym_q(x, LORENTZ), LORENTZ).is_zero()


def test_second_slot_differential_is_the_wave_operator():
    # on a transverse harmonic one-form, d*d computes the signed Laplacian
    x = YMElement(1, _basis_one_form(1, _harm((1, 0, 0))))
    out = ym_q(x, LORENTZ)
    assert out.degree == 2
    assert out.form.component((0, 2)) == _harm((1, 0, 0), GaussRational(-1))
    assert out.form.component((0, 1)).is_zero()
    assert out.form.component((1, 2)).is_zero()


def test_product_of_one_forms_lands_in_the_dual_slot(rng):
    x = random_ym_element(rng, DIM, 1, 1)
    y = random_ym_element(rng, DIM, 1, 1)
    out = ym_mu_sym(x, y, LORENTZ)
    assert out.degree == 2 and out.form.degree == DIM - 1
    # odd times odd: the graded-commutative product antisymmetrizes here
    assert (out + ym_mu_sym(y, x, LORENTZ)).is_zero()


def test_trilinear_homotopy_supported_on_one_forms(rng):
    ones = [random_ym_element(rng, DIM, 1, 1) for _ in range(3)]
    assert not ym_nu_sym(*ones, LORENTZ).is_zero() or all(
        o.form.is_zero() for o in ones
    )
    mixed = [random_ym_element(rng, DIM, 1, d) for d in (0, 1, 2)]
    assert ym_nu_sym(*mixed, LORENTZ).is_zero()


def test_residual_battery_is_clean():
    rows = ym_cinf_residuals(6, LORENTZ, random.Random(5), cutoff=1)
    assert [r["passed"] for r in rows] == [True] * len(rows)
    names = {r["id"] for r in rows}
    assert {
        "exterior-d-squared",
        "exterior-star-square",
        "exterior-pairing-symmetry",
        "ym-q-squared",
        "ym-mu-commutativity",
        "ym-q-derivation",
        "ym-homotopy-associativity",
        "ym-shuffle",
        "ym-transport-q",
        "ym-transport-mu",
        "ym-transport-nu",
    } <= names
