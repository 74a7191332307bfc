"""Product, homotopies, derived bracket: the full relation battery."""

import itertools
import random
from fractions import Fraction

import pytest

from bvdouble.bvcomplex import BVElement, op_b, op_c, op_q, project_half, random_element
from bvdouble.bvcomplex import odd_pairing
from bvdouble.bvops import (
    brack,
    l2,
    l3,
    m_op,
    mu,
    musym,
    n_op,
    nprime,
    nu,
    nusym,
    sign,
)
from bvdouble.scalars import FourierScalar, GaussRational
from bvdouble.sections import GenSection, dorfman, random_section

DIM = 3
PAIRS = [(d1, d2) for d1 in range(4) for d2 in range(4)]
TRIPLES = [t for t in itertools.product(range(4), repeat=3)]


@pytest.fixture
def rng():
    return random.Random(16180)


def elem(rng, degree, cutoff=1):
    return random_element(rng, DIM, cutoff, degree)


# -- frozen product values (worked by hand on two-mode inputs) -------------


def _harm(mode, coeff=1):
    return FourierScalar.harmonic(DIM, mode, coeff)


def test_product_on_crafted_degree_one_pair():
    zero = FourierScalar.zero(DIM)
    f = _harm((1, 0, 0))
    a = GenSection((f, zero, zero), (zero, zero, zero))
    b = GenSection((zero, zero, zero), (f, zero, zero))
    out = mu(BVElement.deg1(a), BVElement.deg1(b))
    assert out.degree == 2
    # transport of the one-form along the vector: 2i e^{2i x0} in slot 0
    assert out.section.vec == (zero, zero, zero)
    assert out.section.form[0] == _harm((2, 0, 0), GaussRational(0, 2))
    assert out.section.form[1].is_zero() and out.section.form[2].is_zero()
    # half the contraction: e^{2i x0} / 2
    assert out.scalar == _harm((2, 0, 0), GaussRational(Fraction(1, 2)))


def test_right_scalar_action_twists_the_scalar_slot():
    zero = FourierScalar.zero(DIM)
    f = _harm((1, 0, 0))
    a = GenSection((f, zero, zero), (zero, zero, zero))
    x = BVElement.deg1(a)
    out = mu(x, BVElement.deg0(f))
    assert out.degree == 1
    assert out.section.vec[0] == _harm((2, 0, 0))
    # the scalar slot picks up minus the anchor action: -i e^{2i x0}
    assert out.scalar == _harm((2, 0, 0), GaussRational(0, -1))


def test_left_scalar_action_scales_slots(rng):
    u = BVElement.deg0(_harm((0, 1, 0)))
    for degree in range(4):
        x = elem(rng, degree)
        out = mu(u, x)
        assert out.degree == degree
        if x.section is not None:
            assert (out.section - x.section * u.scalar).is_zero()
        assert (out.scalar - x.scalar * u.scalar).is_zero()


def test_commutativity_homotopy_is_the_section_pairing(rng):
    x, y = elem(rng, 1), elem(rng, 1)
    out = m_op(x, y)
    assert out.degree == 1 and out.section.is_zero()
    from bvdouble.sections import pairing

    assert (out.scalar - pairing(x.section, y.section)).is_zero()


def test_trilinear_support_patterns(rng):
    live_nu = {(1, 1, 1), (2, 1, 1), (1, 2, 1)}
    live_nusym = {(1, 1, 1), (1, 1, 2), (2, 1, 1), (1, 2, 1)}
    for degs in TRIPLES:
        xs = [elem(rng, d) for d in degs]
        if degs not in live_nu:
            assert nu(*xs).is_zero()
        if degs not in live_nusym:
            assert nusym(*xs).is_zero()


# -- the homotopy relations, swept over every degree pattern ---------------


@pytest.mark.parametrize("d1,d2", PAIRS)
def test_q_derives_the_product(rng, d1, d2):
    x, y = elem(rng, d1), elem(rng, d2)
    res = op_q(mu(x, y)) - mu(op_q(x), y) - sign(d1) * mu(x, op_q(y))
    assert res.is_zero()


@pytest.mark.parametrize("d1,d2", PAIRS)
def test_commutativity_up_to_homotopy(rng, d1, d2):
    x, y = elem(rng, d1), elem(rng, d2)
    res = (
        mu(x, y)
        - sign(d1 * d2) * mu(y, x)
        - op_q(m_op(x, y))
        - m_op(op_q(x), y)
        - sign(d1) * m_op(x, op_q(y))
    )
    assert res.is_zero()


@pytest.mark.parametrize("degs", TRIPLES)
def test_associativity_up_to_homotopy(rng, degs):
    x, y, z = (elem(rng, d) for d in degs)
    res = (
        mu(mu(x, y), z)
        - mu(x, mu(y, z))
        - op_q(nu(x, y, z))
        - nu(op_q(x), y, z)
        - sign(degs[0]) * nu(x, op_q(y), z)
        - sign(degs[0] + degs[1]) * nu(x, y, op_q(z))
    )
    assert res.is_zero()


@pytest.mark.parametrize("d1,d2", PAIRS)
def test_q_derives_the_bracket(rng, d1, d2):
    x, y = elem(rng, d1), elem(rng, d2)
    res = (
        op_q(brack(x, y))
        - brack(op_q(x), y)
        - sign(d1 - 1) * brack(x, op_q(y))
    )
    assert res.is_zero()


@pytest.mark.parametrize("d1,d2", PAIRS)
def test_b_derives_the_bracket(rng, d1, d2):
    x, y = elem(rng, d1), elem(rng, d2)
    res = (
        op_b(brack(x, y))
        - brack(op_b(x), y)
        - sign(d1 - 1) * brack(x, op_b(y))
    )
    assert res.is_zero()


@pytest.mark.parametrize("degs", TRIPLES)
def test_bracket_is_a_first_slot_derivation(rng, degs):
    x, y, z = (elem(rng, d) for d in degs)
    res = (
        brack(x, mu(y, z))
        - mu(brack(x, y), z)
        - sign((degs[0] - 1) * degs[1]) * mu(y, brack(x, z))
    )
    assert res.is_zero()


@pytest.mark.parametrize("d1,d2", PAIRS)
def test_bracket_symmetric_part_is_exact(rng, d1, d2):
    x, y = elem(rng, d1), elem(rng, d2)
    res = brack(x, y) + sign((d1 - 1) * (d2 - 1)) * brack(y, x) - sign(d1 - 1) * (
        op_q(n_op(x, y)) - n_op(op_q(x), y) - sign(d1) * n_op(x, op_q(y))
    )
    assert res.is_zero()


@pytest.mark.parametrize("degs", TRIPLES)
def test_bracket_jacobi(rng, degs):
    x, y, z = (elem(rng, d) for d in degs)
    res = (
        brack(brack(x, y), z)
        - brack(x, brack(y, z))
        + sign((degs[0] - 1) * (degs[1] - 1)) * brack(y, brack(x, z))
    )
    assert res.is_zero()


@pytest.mark.parametrize("degs", TRIPLES)
def test_second_slot_leibniz_defect_is_exact(rng, degs):
    x, y, z = (elem(rng, d) for d in degs)
    d1, d2, d3 = degs
    lhs = (
        brack(mu(x, y), z)
        - mu(x, brack(y, z))
        - sign((d3 - 1) * d2) * mu(brack(x, z), y)
    )
    homotopy = (
        op_q(nprime(x, y, z))
        - nprime(op_q(x), y, z)
        - sign(d1) * nprime(x, op_q(y), z)
        - sign(d1 + d2) * nprime(x, y, op_q(z))
    )
    assert (lhs - sign(d1 + d2 - 1) * homotopy).is_zero()


@pytest.mark.parametrize("d1,d2", PAIRS)
def test_c_compatibilities(rng, d1, d2):
    x, y = elem(rng, d1), elem(rng, d2)
    assert (op_c(mu(x, y)) - sign(d1) * mu(x, op_c(y))).is_zero()
    assert (op_c(brack(x, y)) - sign(d1 - 1) * brack(x, op_c(y))).is_zero()


def test_bracket_restricts_to_dorfman(rng):
    for _ in range(6):
        a = random_section(rng, DIM, 2)
        b = random_section(rng, DIM, 2)
        out = brack(BVElement.deg1(a), BVElement.deg1(b))
        assert (out - BVElement.deg1(dorfman(a, b))).is_zero()


# -- symmetrized structure -------------------------------------------------


@pytest.mark.parametrize("d1,d2", PAIRS)
def test_symmetrized_product_is_commutative(rng, d1, d2):
    x, y = elem(rng, d1), elem(rng, d2)
    assert (musym(x, y) - sign(d1 * d2) * musym(y, x)).is_zero()


@pytest.mark.parametrize("degs", TRIPLES)
def test_symmetrized_associator_is_exact(rng, degs):
    x, y, z = (elem(rng, d) for d in degs)
    res = (
        musym(musym(x, y), z)
        - musym(x, musym(y, z))
        - op_q(nusym(x, y, z))
        - nusym(op_q(x), y, z)
        - sign(degs[0]) * nusym(x, op_q(y), z)
        - sign(degs[0] + degs[1]) * nusym(x, y, op_q(z))
    )
    assert res.is_zero()


@pytest.mark.parametrize("degs", TRIPLES)
def test_shuffle_vanishing(rng, degs):
    x, y, z = (elem(rng, d) for d in degs)
    res = (
        nusym(x, y, z)
        - sign(degs[0] * degs[1]) * nusym(y, x, z)
        + sign(degs[0] * (degs[1] + degs[2])) * nusym(y, z, x)
    )
    assert res.is_zero()


def test_pentagon_on_random_quadruples(rng):
    for _ in range(10):
        degs = [rng.randint(0, 3) for _ in range(4)]
        a1, a2, a3, a4 = (elem(rng, d) for d in degs)
        res = (
            sign(degs[0]) * musym(a1, nusym(a2, a3, a4))
            + musym(nusym(a1, a2, a3), a4)
            - nusym(musym(a1, a2), a3, a4)
            + nusym(a1, musym(a2, a3), a4)
            - nusym(a1, a2, musym(a3, a4))
        )
        assert res.is_zero()


# -- antisymmetrized (shifted) structure -----------------------------------


@pytest.mark.parametrize("d1,d2", PAIRS)
def test_shifted_bracket_antisymmetry(rng, d1, d2):
    x, y = elem(rng, d1), elem(rng, d2)
    assert (l2(x, y) + sign((d1 - 1) * (d2 - 1)) * l2(y, x)).is_zero()


def test_jacobiator_is_a_q_boundary_on_sections(rng):
    for _ in range(6):
        a1, a2, a3 = (
            BVElement.deg1(random_section(rng, DIM, 1)) for _ in range(3)
        )
        res = (
            l2(l2(a1, a2), a3)
            + l2(l2(a3, a1), a2)
            + l2(l2(a2, a3), a1)
            - op_q(l3(a1, a2, a3))
        )
        assert res.is_zero()


def test_trilinear_b_compatibility(rng):
    for _ in range(6):
        x, y = elem(rng, 1, 2), elem(rng, 1, 2)
        zt = elem(rng, 2, 2)
        assert (op_b(l3(x, y, zt)) + l3(x, y, op_b(zt))).is_zero()


# -- cyclic structure on the half complex ----------------------------------


def _projected(rng, degs):
    return [project_half(elem(rng, d, 2)) for d in degs]


def test_two_point_form_is_cyclic(rng):
    for degs in [(0, 2), (1, 1), (2, 0)]:
        ps = _projected(rng, degs)
        lhs = odd_pairing(op_q(ps[0]), ps[1])
        rhs = sign(1) * sign(degs[1] * degs[0]) * odd_pairing(op_q(ps[1]), ps[0])
        assert lhs == rhs


def test_three_point_form_is_cyclic(rng):
    for degs in [t for t in TRIPLES if sum(t) == 3]:
        p1, p2, p3 = _projected(rng, degs)
        lhs = odd_pairing(musym(p1, p2), p3)
        rhs = sign(2) * sign(degs[2] * (degs[0] + degs[1])) * odd_pairing(
            musym(p3, p1), p2
        )
        assert lhs == rhs


def test_four_point_form_is_cyclic(rng):
    quads = [q for q in itertools.product(range(4), repeat=4) if sum(q) == 4]
    for degs in quads:
        p1, p2, p3, p4 = _projected(rng, degs)
        lhs = odd_pairing(nusym(p1, p2, p3), p4)
        rhs = sign(3) * sign(degs[3] * (degs[0] + degs[1] + degs[2])) * odd_pairing(
            nusym(p4, p1, p2), p3
        )
        assert lhs == rhs
