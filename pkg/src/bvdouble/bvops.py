"""Bilinear and trilinear operations on the graded complex.

The product ``mu`` is the degree-0 bilinear operation whose restriction to
degree 0 x degree 1 is the module action of scalars on (section, scalar)
pairs and whose degree 1 x degree 1 part combines the Dorfman bracket with
the canonical pairing.  It is associative and commutative only up to
homotopy:

  * ``m``  (degree -1) repairs commutativity,
  * ``nu`` (degree -1, trilinear) repairs associativity,
  * ``brack`` is the odd bracket derived from mu and b,
  * ``n_op = [b, m]`` is the symmetric pairing appearing in the bracket's
    homotopy-symmetry relation.

``musym``/``nusym`` are the commutative (shuffle-vanishing) counterparts,
and ``l2``/``l3`` implement the antisymmetrized bracket with the trilinear
homotopy for its Jacobi identity.
"""

from __future__ import annotations

from fractions import Fraction

from .bvcomplex import BVElement, op_b
from .scalars import FourierScalar
from .sections import GenSection, anchor, divergence, dorfman, pairing

__all__ = [
    "sign",
    "mu",
    "m_op",
    "n_op",
    "nu",
    "brack",
    "nu_b_commutator",
    "nprime",
    "musym",
    "nusym",
    "l2",
    "l3",
]

_HALF = Fraction(1, 2)


def sign(exponent: int) -> int:
    """(-1)**exponent for Koszul bookkeeping."""
    return -1 if exponent % 2 else 1


def _scale_section_pair(u: FourierScalar, x: BVElement, degree: int) -> BVElement:
    """(section, scalar) slots of x both multiplied by the scalar u."""
    return BVElement(degree, x.dim, x.section * u, x.scalar * u)


def mu(x: BVElement, y: BVElement) -> BVElement:
    """The degree-0 product."""
    assert x.dim == y.dim
    d1, d2 = x.degree, y.degree
    dim = x.dim

    if d1 == 0:
        # Scalars act from the left on every slot of degrees 0..3.
        if d2 == 0 or d2 == 3:
            return BVElement(d2, dim, None, x.scalar * y.scalar)
        if d2 in (1, 2):
            return _scale_section_pair(x.scalar, y, d2)
    if d2 == 0:
        if d1 == 3:
            return BVElement.deg3(x.scalar * y.scalar)
        if d1 == 1:
            # Right action of a scalar twists the scalar slot by the anchor.
            u = y.scalar
            return BVElement.deg1(
                x.section * u, x.scalar * u - anchor(x.section, u)
            )
        if d1 == 2:
            return _scale_section_pair(y.scalar, x, 2)
    if d1 == 1 and d2 == 1:
        at = (
            dorfman(x.section, y.section)
            + y.scalar * x.section
            - x.scalar * y.section
        )
        vt = pairing(x.section, y.section) * _HALF
        return BVElement.deg2(at, vt)
    if d1 == 1 and d2 == 2:
        ut = (
            -(pairing(x.section, y.section) * _HALF)
            + anchor(x.section, y.scalar)
            - x.scalar * y.scalar
        )
        return BVElement.deg3(ut)
    if d1 == 2 and d2 == 1:
        ut = (
            -(pairing(x.section, y.section) * _HALF)
            + anchor(y.section, x.scalar)
            - x.scalar * y.scalar
        )
        return BVElement.deg3(ut)
    return BVElement.zero(d1 + d2, dim)


def m_op(x: BVElement, y: BVElement) -> BVElement:
    """Homotopy for commutativity; nonzero only on two degree-1 sections."""
    assert x.dim == y.dim
    if x.degree == 1 and y.degree == 1:
        return BVElement.deg1(GenSection.zero(x.dim), pairing(x.section, y.section))
    return BVElement.zero(x.degree + y.degree - 1, x.dim)


def n_op(x: BVElement, y: BVElement) -> BVElement:
    """The graded commutator [b, m], a symmetric pairing."""
    return (
        op_b(m_op(x, y))
        + m_op(op_b(x), y)
        + sign(x.degree) * m_op(x, op_b(y))
    )


def nu(x: BVElement, y: BVElement, z: BVElement) -> BVElement:
    """Homotopy for associativity of mu.

    Nonzero only for (1,1,1) and for a degree-2 argument in the first or
    second slot paired with two degree-1 arguments; in the latter cases only
    the scalar slot of the degree-2 argument contributes.
    """
    assert x.dim == y.dim == z.dim
    pattern = (x.degree, y.degree, z.degree)
    if pattern == (1, 1, 1):
        return mu(m_op(x, z), y) - mu(m_op(y, z), x)
    if pattern == (2, 1, 1):
        return -mu(m_op(y, z), x)
    if pattern == (1, 2, 1):
        return -mu(m_op(x, z), y)
    return BVElement.zero(x.degree + y.degree + z.degree - 1, x.dim)


def brack(x: BVElement, y: BVElement) -> BVElement:
    """The odd bracket derived from the product and the operator b."""
    s = sign(x.degree)
    return s * (
        op_b(mu(x, y)) - mu(op_b(x), y) - s * mu(x, op_b(y))
    )


def musym(x: BVElement, y: BVElement) -> BVElement:
    """Graded-symmetrized product."""
    return _HALF * (mu(x, y) + sign(x.degree * y.degree) * mu(y, x))


def nusym(x: BVElement, y: BVElement, z: BVElement) -> BVElement:
    """Trilinear operation of the commutative (shuffle-vanishing) structure."""
    assert x.dim == y.dim == z.dim
    pattern = (x.degree, y.degree, z.degree)
    if pattern == (1, 1, 1):
        return (
            mu(m_op(x, z), y)
            - _HALF * mu(m_op(y, z), x)
            - _HALF * mu(m_op(x, y), z)
        )
    if pattern == (1, 1, 2):
        return -_HALF * mu(m_op(x, y), z)
    if pattern == (2, 1, 1):
        return -_HALF * mu(m_op(y, z), x)
    if pattern == (1, 2, 1):
        return -mu(m_op(x, z), y)
    return BVElement.zero(x.degree + y.degree + z.degree - 1, x.dim)


def nu_b_commutator(x: BVElement, y: BVElement, z: BVElement) -> BVElement:
    """The graded commutator [b, nu] with b inserted in every slot."""
    return (
        op_b(nu(x, y, z))
        + nu(op_b(x), y, z)
        + sign(x.degree) * nu(x, op_b(y), z)
        + sign(x.degree + y.degree) * nu(x, y, op_b(z))
    )


def nprime(x: BVElement, y: BVElement, z: BVElement) -> BVElement:
    """Homotopy for the mixed derivation rule of the bracket over the product.

    Combines the symmetric pairing m applied to the second argument and the
    bracket of the outer two with the commutator of b and the associativity
    homotopy.
    """
    s = sign((x.degree + 1) * (y.degree + 1))
    return s * m_op(y, brack(x, z)) + nu_b_commutator(x, y, z)


def l2(x: BVElement, y: BVElement) -> BVElement:
    """Antisymmetrization of the odd bracket (degree shifted by one)."""
    s = sign((x.degree - 1) * (y.degree - 1))
    return _HALF * (brack(x, y) - s * brack(y, x))


def l3(x: BVElement, y: BVElement, z: BVElement) -> BVElement:
    """Trilinear homotopy for the Jacobi identity of ``l2``.

    Nontrivial for three degree-1 arguments (value in degree 0, one sixth of
    the cyclic sum of n paired with the bracket of the other two) and for
    (degree 1, degree 1, degree 2) (value in degree 1); zero elsewhere.
    """
    assert x.dim == y.dim == z.dim
    sixth = Fraction(1, 6)
    pattern = (x.degree, y.degree, z.degree)
    if pattern == (1, 1, 1):
        return sixth * (
            n_op(x, l2(y, z)) + n_op(y, l2(z, x)) + n_op(z, l2(x, y))
        )
    if pattern == (1, 1, 2):
        bz = op_b(z)
        return (-sixth) * (
            m_op(x, l2(y, bz)) + m_op(y, l2(bz, x)) + m_op(bz, l2(x, y))
        )
    return BVElement.zero(x.degree + y.degree + z.degree - 3, x.dim)
