"""The four-term complex: odd operators, pairing, and the half splitting."""

import random
from fractions import Fraction

import pytest

from bvdouble.bvcomplex import (
    BVElement,
    in_complement,
    in_half,
    odd_pairing,
    op_b,
    op_c,
    op_q,
    project_half,
    random_element,
)
from bvdouble.bvops import sign
from bvdouble.scalars import GaussRational, random_scalar
from bvdouble.sections import GenSection, divergence, d_scalar, random_section

DIM = 3
TRIALS = 8


@pytest.fixture
def rng():
    return random.Random(31415)


def elem(rng, degree):
    return random_element(rng, DIM, 2, degree)


# -- slot tables of the three operators ------------------------------------


def test_b_slot_table(rng):
    u = random_scalar(rng, DIM, 2)
    a = random_section(rng, DIM, 2)
    v = random_scalar(rng, DIM, 2)

    assert op_b(BVElement.deg0(u)).is_zero()

    down = op_b(BVElement.deg1(a, v))
    assert down.degree == 0 and (down.scalar - v).is_zero()

    down = op_b(BVElement.deg2(a, v))
    assert down.degree == 1
    assert (down.section + a).is_zero() and down.scalar.is_zero()

    down = op_b(BVElement.deg3(u))
    assert down.degree == 2
    assert down.section.is_zero() and (down.scalar + u).is_zero()


def test_c_slot_table(rng):
    u = random_scalar(rng, DIM, 2)
    a = random_section(rng, DIM, 2)
    v = random_scalar(rng, DIM, 2)

    up = op_c(BVElement.deg0(u))
    assert up.degree == 1 and up.section.is_zero() and (up.scalar - u).is_zero()

    up = op_c(BVElement.deg1(a, v))
    assert up.degree == 2 and (up.section + a).is_zero() and up.scalar.is_zero()

    up = op_c(BVElement.deg2(a, v))
    assert up.degree == 3 and (up.scalar + v).is_zero()

    assert op_c(BVElement.deg3(u)).is_zero()


def test_q_slot_table(rng):
    u = random_scalar(rng, DIM, 2)
    a = random_section(rng, DIM, 2)
    v = random_scalar(rng, DIM, 2)
    half = Fraction(1, 2)

    up = op_q(BVElement.deg0(u))
    assert up.degree == 1
    assert (up.section - d_scalar(u)).is_zero() and up.scalar.is_zero()

    up = op_q(BVElement.deg1(a, v))
    assert up.degree == 2
    assert (up.section - d_scalar(v)).is_zero()
    assert (up.scalar - divergence(a) * half - v).is_zero()

    up = op_q(BVElement.deg2(a, v))
    assert up.degree == 3
    assert (up.scalar + divergence(a) * half).is_zero()

    assert op_q(BVElement.deg3(u)).is_zero()


# -- operator algebra across every degree ----------------------------------


@pytest.mark.parametrize("degree", range(4))
def test_squares_vanish(rng, degree):
    for _ in range(TRIALS):
        x = elem(rng, degree)
        assert op_q(op_q(x)).is_zero()
        assert op_b(op_b(x)).is_zero()
        assert op_c(op_c(x)).is_zero()


@pytest.mark.parametrize("degree", range(4))
def test_q_b_anticommute(rng, degree):
    for _ in range(TRIALS):
        x = elem(rng, degree)
        assert (op_q(op_b(x)) + op_b(op_q(x))).is_zero()


@pytest.mark.parametrize("degree", range(4))
def test_b_c_composition_is_identity(rng, degree):
    for _ in range(TRIALS):
        x = elem(rng, degree)
        assert (op_b(op_c(x)) + op_c(op_b(x)) - x).is_zero()


# -- odd pairing -----------------------------------------------------------


def test_pairing_supported_on_complementary_degrees(rng):
    for d1 in range(4):
        for d2 in range(4):
            p = odd_pairing(elem(rng, d1), elem(rng, d2))
            if d1 + d2 != 3:
                assert not p


def test_pairing_is_symmetric(rng):
    for d1 in range(4):
        x, y = elem(rng, d1), elem(rng, 3 - d1)
        assert odd_pairing(x, y) == odd_pairing(y, x)


def test_pairing_is_nondegenerate_somewhere(rng):
    found = False
    for _ in range(20):
        if odd_pairing(elem(rng, 1), elem(rng, 2)):
            found = True
            break
    assert found


@pytest.mark.parametrize("d1,d2", [(d1, d2) for d1 in range(4) for d2 in range(4)])
def test_pairing_covariance(rng, d1, d2):
    x, y = elem(rng, d1), elem(rng, d2)
    s = sign(d1 * d2)
    assert not (odd_pairing(op_q(x), y) + s * odd_pairing(op_q(y), x))
    assert not (odd_pairing(op_b(x), y) - s * odd_pairing(op_b(y), x))
    assert not (odd_pairing(op_c(x), y) + s * odd_pairing(op_c(y), x))


# -- half splitting --------------------------------------------------------


@pytest.mark.parametrize("degree", range(4))
def test_projection_splits_the_complex(rng, degree):
    for _ in range(TRIALS):
        x = elem(rng, degree)
        px = project_half(x)
        assert (project_half(px) - px).is_zero()
        assert in_half(px)
        assert in_complement(x - px)
        assert in_half(op_q(px))


def test_half_and_complement_are_orthogonal(rng):
    for d1 in range(4):
        for _ in range(TRIALS):
            x, y = elem(rng, d1), elem(rng, 3 - d1)
            assert not odd_pairing(project_half(x), y - project_half(y))


def test_complement_is_q_stable_and_q_injective(rng):
    # the complement piece in degree 1 is (0, v); Q maps it to ((0, dv), v),
    # again in the complement, and the scalar slot still carries v, so Q is
    # injective there: the complement contributes no Q-cohomology in degree 1
    v = random_scalar(rng, DIM, 2)
    x = BVElement.deg1(GenSection.zero(DIM), v)
    assert in_complement(x)
    qx = op_q(x)
    assert in_complement(qx)
    assert (qx.scalar - v).is_zero()


# -- element bookkeeping ---------------------------------------------------


def test_zero_tolerant_addition_rejects_degree_mixing(rng):
    x = elem(rng, 1)
    z3 = BVElement.zero(3, DIM)
    assert ((x + z3) - x).is_zero()
    with pytest.raises(AssertionError):
        _ = x + elem(rng, 2)


def test_scalar_multiple_and_negation(rng):
    x = elem(rng, 2)
    two_x = x * GaussRational(2)
    assert (two_x - x - x).is_zero()
    assert (x + (-x)).is_zero()
