"""Generalized sections (vector field + one-form) over the torus algebra.

A generalized section is a pair (X, xi) of a vector field and a one-form,
each stored as a tuple of exact Fourier scalars.  This module provides the
standard Courant-algebroid package on such sections:

  * the Dorfman bracket  (A, B) -> (L_X Y,  L_X eta - i_Y d xi),
  * the canonical symmetric pairing  <A, B> = X.eta + Y.xi,
  * the anchor action  A.u = X^i d_i u,
  * the derivation  d u = (0, du)  and the divergence  div A = d_i X^i,

together with randomized section generators for identity checks.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import FourierScalar, GaussRational, random_scalar

__all__ = [
    "GenSection",
    "dorfman",
    "pairing",
    "anchor",
    "d_scalar",
    "divergence",
    "lie_bracket_vec",
    "random_section",
    "coordinate_section",
]


class GenSection:
    """A pair (vector components, one-form components) of exact scalars."""

    __slots__ = ("dim", "vec", "form")

    def __init__(self, vec, form):
        vec = tuple(vec)
        form = tuple(form)
        assert vec and len(vec) == len(form)
        dim = vec[0].dim
        assert all(s.dim == dim for s in vec + form)
        self.dim = dim
        self.vec = vec
        self.form = form

    @staticmethod
    def zero(dim: int) -> "GenSection":
        z = FourierScalar.zero(dim)
        return GenSection((z,) * dim, (z,) * dim)

    @staticmethod
    def from_vec(vec) -> "GenSection":
        vec = tuple(vec)
        z = FourierScalar.zero(vec[0].dim)
        return GenSection(vec, (z,) * len(vec))

    @staticmethod
    def from_form(form) -> "GenSection":
        form = tuple(form)
        z = FourierScalar.zero(form[0].dim)
        return GenSection((z,) * len(form), form)

    def __add__(self, other):
        assert isinstance(other, GenSection) and other.dim == self.dim
        return GenSection(
            tuple(a + b for a, b in zip(self.vec, other.vec)),
            tuple(a + b for a, b in zip(self.form, other.form)),
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return GenSection(tuple(-a for a in self.vec), tuple(-a for a in self.form))

    def __mul__(self, scalar):
        """Module action of a scalar (or constant) on the section."""
        return GenSection(
            tuple(scalar * a for a in self.vec), tuple(scalar * a for a in self.form)
        )

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(s.is_zero() for s in self.vec) and all(s.is_zero() for s in self.form)

    def __eq__(self, other):
        if not isinstance(other, GenSection):
            return NotImplemented
        return self.dim == other.dim and self.vec == other.vec and self.form == other.form

    def __hash__(self):
        return hash((self.vec, self.form))

    def __repr__(self):
        return f"GenSection(vec={self.vec!r}, form={self.form!r})"


def lie_bracket_vec(x, y):
    """Lie bracket of two vector fields, [X, Y]^j = X^i d_i Y^j - Y^i d_i X^j."""
    dim = len(x)
    return tuple(
        sum(
            (x[i] * y[j].derivative(i) - y[i] * x[j].derivative(i) for i in range(dim)),
            FourierScalar.zero(x[0].dim),
        )
        for j in range(dim)
    )


def _lie_form(x, zeta):
    """Lie derivative of a one-form: (L_X zeta)_j = X^i d_i zeta_j + zeta_i d_j X^i."""
    dim = len(x)
    return tuple(
        sum(
            (x[i] * zeta[j].derivative(i) + zeta[i] * x[i].derivative(j) for i in range(dim)),
            FourierScalar.zero(x[0].dim),
        )
        for j in range(dim)
    )


def _contract_dform(y, zeta):
    """(i_Y d zeta)_j = Y^i (d_i zeta_j - d_j zeta_i)."""
    dim = len(y)
    return tuple(
        sum(
            (y[i] * (zeta[j].derivative(i) - zeta[i].derivative(j)) for i in range(dim)),
            FourierScalar.zero(y[0].dim),
        )
        for j in range(dim)
    )


def dorfman(a: GenSection, b: GenSection) -> GenSection:
    """Dorfman bracket (A, B) -> (L_X Y, L_X eta_B - i_Y d xi_A)."""
    assert a.dim == b.dim
    lie_form = _lie_form(a.vec, b.form)
    corr = _contract_dform(b.vec, a.form)
    return GenSection(
        lie_bracket_vec(a.vec, b.vec), tuple(p - q for p, q in zip(lie_form, corr))
    )


def pairing(a: GenSection, b: GenSection) -> FourierScalar:
    """Canonical symmetric pairing <A, B> = X_A . xi_B + X_B . xi_A."""
    assert a.dim == b.dim
    return sum(
        (a.vec[i] * b.form[i] + b.vec[i] * a.form[i] for i in range(a.dim)),
        FourierScalar.zero(a.dim),
    )


def anchor(a: GenSection, u: FourierScalar) -> FourierScalar:
    """Anchor action A.u = X^i d_i u (one-form part is inert)."""
    return sum((a.vec[i] * u.derivative(i) for i in range(a.dim)), FourierScalar.zero(a.dim))


def d_scalar(u: FourierScalar) -> GenSection:
    """The derivation u -> (0, du)."""
    return GenSection.from_form(tuple(u.derivative(i) for i in range(u.dim)))


def divergence(a: GenSection) -> FourierScalar:
    """div A = d_i X^i (flat volume form; one-forms are divergence-free)."""
    return sum(
        (a.vec[i].derivative(i) for i in range(a.dim)), FourierScalar.zero(a.dim)
    )


def coordinate_section(dim: int, i: int) -> GenSection:
    """The constant coordinate vector field e_i as a generalized section."""
    one = FourierScalar.one(dim)
    z = FourierScalar.zero(dim)
    return GenSection(tuple(one if j == i else z for j in range(dim)), (z,) * dim)


def random_section(rng, dim: int, cutoff: int) -> GenSection:
    """A random sparse generalized section (every component 1-2 modes)."""
    return GenSection(
        tuple(random_scalar(rng, dim, cutoff) for _ in range(dim)),
        tuple(random_scalar(rng, dim, cutoff) for _ in range(dim)),
    )
