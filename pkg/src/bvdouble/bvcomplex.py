"""The four-term graded complex and its odd operators.

Degrees and slots (D = torus dimension):

    degree 0:  u                  one scalar
    degree 1:  (A, v)             generalized section + scalar
    degree 2:  (At, vt)           generalized section + scalar
    degree 3:  ut                 one scalar

An element is stored uniformly as (degree, section-or-None, scalar).  The
three odd endomorphisms are

    b:  (A, v) -> v,     (At, vt) -> (-At, 0),   ut -> (0, -ut),   u -> 0
    c:  u -> (0, u),     (A, v) -> (-A, 0),      (At, vt) -> -vt,  ut -> 0
    Q:  u -> ((0, du), 0)
        (A, v) -> ((0, dv), div A / 2 + v)
        (At, vt) -> -div At / 2
        ut -> 0

which satisfy Q^2 = b^2 = c^2 = 0, Qb + bQ = 0 and bc + cb = id.

The complex splits orthogonally (for the degree-complementary pairing
defined below) into the subcomplex where v = -div A / 2 and vt = 0 after
removing the exact dvt part, and an acyclic complement spanned by (0, v) in
degree 1 and ((0, dv), v) in degree 2; ``project_half`` is the projection
onto the first summand.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import FourierScalar, GaussRational, Metric
from .sections import GenSection, d_scalar, divergence, pairing, random_section
from .scalars import random_scalar

__all__ = [
    "BVElement",
    "Metric",
    "op_b",
    "op_c",
    "op_q",
    "project_half",
    "in_half",
    "in_complement",
    "odd_pairing",
    "random_element",
]

_HALF = Fraction(1, 2)


class BVElement:
    """A homogeneous element of the graded complex."""

    __slots__ = ("degree", "dim", "section", "scalar")

    def __init__(self, degree: int, dim: int, section, scalar):
        # Degrees outside 0..3 only ever hold the zero element; they appear
        # transiently when operators walk off the end of the complex.
        if degree in (1, 2):
            assert section is None or isinstance(section, GenSection)
            section = GenSection.zero(dim) if section is None else section
        else:
            assert section is None or section.is_zero()
            section = None
        scalar = FourierScalar.zero(dim) if scalar is None else scalar
        if degree not in (0, 1, 2, 3):
            assert scalar.is_zero(), f"degree {degree} space is zero"
        assert isinstance(scalar, FourierScalar) and scalar.dim == dim
        self.degree = degree
        self.dim = dim
        self.section = section
        self.scalar = scalar

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(degree: int, dim: int) -> "BVElement":
        return BVElement(degree, dim, None, None)

    @staticmethod
    def deg0(u: FourierScalar) -> "BVElement":
        return BVElement(0, u.dim, None, u)

    @staticmethod
    def deg1(a: GenSection, v: FourierScalar | None = None) -> "BVElement":
        return BVElement(1, a.dim, a, v)

    @staticmethod
    def deg2(at: GenSection, vt: FourierScalar | None = None) -> "BVElement":
        return BVElement(2, at.dim, at, vt)

    @staticmethod
    def deg3(ut: FourierScalar) -> "BVElement":
        return BVElement(3, ut.dim, None, ut)

    # -- linear structure --------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, BVElement):
            return NotImplemented
        assert self.dim == other.dim
        if self.is_zero() and self.degree != other.degree:
            return other
        if other.is_zero() and self.degree != other.degree:
            return self
        assert self.degree == other.degree, (
            f"cannot add degrees {self.degree} and {other.degree}"
        )
        section = None
        if self.section is not None:
            section = self.section + other.section
        return BVElement(self.degree, self.dim, section, self.scalar + other.scalar)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        section = None if self.section is None else -self.section
        return BVElement(self.degree, self.dim, section, -self.scalar)

    def __mul__(self, const):
        """Multiplication by a constant from Q(i) (not by a scalar field)."""
        assert isinstance(const, (int, Fraction, GaussRational))
        section = None if self.section is None else self.section * const
        return BVElement(self.degree, self.dim, section, self.scalar * const)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return (self.section is None or self.section.is_zero()) and self.scalar.is_zero()

    def __eq__(self, other):
        if not isinstance(other, BVElement):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return (
            self.degree == other.degree
            and self.dim == other.dim
            and (self.section or GenSection.zero(self.dim))
            == (other.section or GenSection.zero(self.dim))
            and self.scalar == other.scalar
        )

    def __repr__(self):
        return (
            f"BVElement(degree={self.degree}, section={self.section!r}, "
            f"scalar={self.scalar!r})"
        )


def op_b(x: BVElement) -> BVElement:
    """The degree -1 operator b."""
    d = x.degree
    if d == 1:
        return BVElement.deg0(x.scalar)
    if d == 2:
        return BVElement.deg1(-x.section, None)
    if d == 3:
        return BVElement.deg2(GenSection.zero(x.dim), -x.scalar)
    return BVElement.zero(d - 1, x.dim)


def op_c(x: BVElement) -> BVElement:
    """The degree +1 operator c, a contracting homotopy for b."""
    d = x.degree
    if d == 0:
        return BVElement.deg1(GenSection.zero(x.dim), x.scalar)
    if d == 1:
        return BVElement.deg2(-x.section, None)
    if d == 2:
        return BVElement.deg3(-x.scalar)
    return BVElement.zero(d + 1, x.dim)


def op_q(x: BVElement) -> BVElement:
    """The differential Q."""
    d = x.degree
    if d == 0:
        return BVElement.deg1(d_scalar(x.scalar), None)
    if d == 1:
        return BVElement.deg2(
            d_scalar(x.scalar), divergence(x.section) * _HALF + x.scalar
        )
    if d == 2:
        return BVElement.deg3(-(divergence(x.section) * _HALF))
    return BVElement.zero(d + 1, x.dim)


# -- the orthogonal splitting ---------------------------------------------


def project_half(x: BVElement) -> BVElement:
    """Projection onto the constrained subcomplex.

    Degree 1: (A, v) -> (A, -div A / 2).  Degree 2: (At, vt) -> (At - (0, dvt), 0).
    Degrees 0 and 3 are untouched.
    """
    if x.degree == 1:
        return BVElement.deg1(x.section, -(divergence(x.section) * _HALF))
    if x.degree == 2:
        return BVElement.deg2(x.section - d_scalar(x.scalar), None)
    return x


def in_half(x: BVElement) -> bool:
    """Membership in the constrained subcomplex."""
    return project_half(x) == x


def in_complement(x: BVElement) -> bool:
    """Membership in the acyclic complement: (0, v) resp. ((0, dv), v)."""
    if x.degree == 1:
        return x.section.is_zero()
    if x.degree == 2:
        return x.section == d_scalar(x.scalar)
    return x.is_zero()


# -- the degree-complementary pairing --------------------------------------


def odd_pairing(x: BVElement, y: BVElement) -> GaussRational:
    """Symmetric pairing between degrees d and 3 - d.

    (u, ut) = -2 int u ut;   ((A, v), (At, vt)) = int <A, At> - 2 int v vt;
    zero unless the degrees sum to 3.
    """
    assert x.dim == y.dim
    if x.degree + y.degree != 3:
        return GaussRational(0)
    if x.degree > y.degree:
        return odd_pairing(y, x)
    if x.degree == 0:
        return (x.scalar * y.scalar).integral() * (-2)
    return pairing(x.section, y.section).integral() - (
        (x.scalar * y.scalar).integral() * 2
    )


def random_element(rng, dim: int, cutoff: int, degree: int) -> BVElement:
    """A random sparse element of the requested degree."""
    if degree == 0:
        return BVElement.deg0(random_scalar(rng, dim, cutoff))
    if degree == 1:
        return BVElement.deg1(random_section(rng, dim, cutoff), random_scalar(rng, dim, cutoff))
    if degree == 2:
        return BVElement.deg2(random_section(rng, dim, cutoff), random_scalar(rng, dim, cutoff))
    if degree == 3:
        return BVElement.deg3(random_scalar(rng, dim, cutoff))
    return BVElement.zero(degree, dim)
