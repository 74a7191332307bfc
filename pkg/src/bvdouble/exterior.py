"""Exact exterior calculus on the torus for a constant metric.

Differential forms carry Fourier-sum components on strictly increasing index
tuples.  The module provides wedge, the de Rham differential, and a Hodge
star for any symmetric invertible rational metric whose determinant has a
rational square root.  On top of these it realizes the four-slot complex

    W0 = functions, W1 = one-forms, W2 = (D-1)-forms, W3 = top forms,

with differentials d, d*d, d, together with its graded-commutative product
and the trilinear homotopy for associativity acting on one-form triples.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .scalars import FourierScalar, GaussRational, Metric, random_scalar

__all__ = [
    "DifferentialForm",
    "YMElement",
    "wedge",
    "dform",
    "hodge",
    "form_integral",
    "ym_q",
    "ym_mu_sym",
    "ym_nu_sym",
    "ym_cinf_residuals",
    "random_form",
    "random_ym_element",
]


def _merge_sign(left: tuple, right: tuple):
    """Sign sorting the concatenation of two increasing tuples, or None."""
    merged = left + right
    if len(set(merged)) != len(merged):
        return None, None
    order = sorted(range(len(merged)), key=lambda t: merged[t])
    inversions = 0
    for a in range(len(order)):
        for b in range(a + 1, len(order)):
            if order[a] > order[b]:
                inversions += 1
    return tuple(sorted(merged)), (-1 if inversions % 2 else 1)


class DifferentialForm:
    """A p-form with FourierScalar components on increasing index tuples."""

    __slots__ = ("dim", "degree", "comps")

    def __init__(self, dim: int, degree: int, comps=None):
        assert 0 <= degree <= dim
        self.dim = dim
        self.degree = degree
        clean = {}
        if comps:
            for idx, f in comps.items():
                idx = tuple(idx)
                assert len(idx) == degree and list(idx) == sorted(set(idx))
                assert all(0 <= i < dim for i in idx)
                if not f.is_zero():
                    clean[idx] = f
        self.comps = clean

    @staticmethod
    def zero(dim: int, degree: int) -> "DifferentialForm":
        return DifferentialForm(dim, degree)

    @staticmethod
    def from_scalar(u: FourierScalar) -> "DifferentialForm":
        return DifferentialForm(u.dim, 0, {(): u})

    @staticmethod
    def one_form(comps) -> "DifferentialForm":
        comps = tuple(comps)
        dim = comps[0].dim
        return DifferentialForm(dim, 1, {(j,): comps[j] for j in range(dim)})

    def component(self, idx) -> FourierScalar:
        return self.comps.get(tuple(idx), FourierScalar.zero(self.dim))

    def one_form_components(self):
        assert self.degree == 1
        return tuple(self.component((j,)) for j in range(self.dim))

    def __add__(self, other):
        if not isinstance(other, DifferentialForm):
            return NotImplemented
        assert self.dim == other.dim and self.degree == other.degree
        comps = dict(self.comps)
        for idx, f in other.comps.items():
            comps[idx] = comps.get(idx, FourierScalar.zero(self.dim)) + f
        return DifferentialForm(self.dim, self.degree, comps)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return DifferentialForm(
            self.dim, self.degree, {i: -f for i, f in self.comps.items()}
        )

    def __mul__(self, other):
        """Multiplication by a scalar function or constant."""
        if isinstance(other, (int, Fraction, GaussRational, FourierScalar)):
            return DifferentialForm(
                self.dim, self.degree, {i: f * other for i, f in self.comps.items()}
            )
        return NotImplemented

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.comps

    def __eq__(self, other):
        if not isinstance(other, DifferentialForm):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.degree == other.degree
            and self.comps == other.comps
        )

    def __hash__(self):
        return hash((self.dim, self.degree, frozenset(self.comps.items())))

    def __repr__(self):
        if not self.comps:
            return f"DifferentialForm({self.dim}, {self.degree}, 0)"
        parts = ", ".join(f"dx{list(i)}: {f!r}" for i, f in sorted(self.comps.items()))
        return f"DifferentialForm({self.dim}, {self.degree}, {{{parts}}})"


def wedge(alpha: DifferentialForm, beta: DifferentialForm) -> DifferentialForm:
    """Exterior product; degree overflow gives the zero top-degree form."""
    assert alpha.dim == beta.dim
    dim = alpha.dim
    degree = alpha.degree + beta.degree
    if degree > dim:
        return DifferentialForm.zero(dim, dim)
    comps = {}
    for i1, f1 in alpha.comps.items():
        for i2, f2 in beta.comps.items():
            idx, sgn = _merge_sign(i1, i2)
            if idx is None:
                continue
            term = f1 * f2 * sgn
            acc = comps.get(idx)
            comps[idx] = term if acc is None else acc + term
    return DifferentialForm(dim, degree, comps)


def dform(alpha: DifferentialForm) -> DifferentialForm:
    """De Rham differential."""
    dim = alpha.dim
    if alpha.degree == dim:
        return DifferentialForm.zero(dim, dim)
    comps = {}
    for idx, f in alpha.comps.items():
        for k in range(dim):
            if k in idx:
                continue
            pos = sum(1 for i in idx if i < k)
            sgn = -1 if pos % 2 else 1
            new = tuple(sorted(idx + (k,)))
            term = f.derivative(k) * sgn
            acc = comps.get(new)
            comps[new] = term if acc is None else acc + term
    return DifferentialForm(dim, alpha.degree + 1, comps)


def _sqrt_fraction(value: Fraction) -> Fraction:
    """Exact square root of a nonnegative rational, or raise."""
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise ValueError(f"|det eta| = {value} is not a perfect rational square")
    return Fraction(rn, rd)


def _perm_sign(seq) -> int:
    inversions = 0
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                inversions += 1
    return -1 if inversions % 2 else 1


def hodge(alpha: DifferentialForm, metric: Metric) -> DifferentialForm:
    """Hodge star for the constant metric (lower-index determinant weight).

    Indices are raised with the upper metric; the result satisfies
    ** = sgn(det) * (-1)^{p(D-p)}.
    """
    dim, p = alpha.dim, alpha.degree
    det_lower = 1 / metric.det_upper
    root = _sqrt_fraction(abs(det_lower))
    comps = {}
    for raised in itertools.combinations(range(dim), p):
        # alpha with all indices raised, component on the increasing tuple
        lifted = FourierScalar.zero(dim)
        for idx, f in alpha.comps.items():
            minor = [[metric.up(l, i) for i in idx] for l in raised]
            det = _det_fraction(minor)
            if det:
                lifted = lifted + f * det
        if lifted.is_zero():
            continue
        rest = tuple(i for i in range(dim) if i not in raised)
        sgn = _perm_sign(raised + rest)
        comps[rest] = comps.get(rest, FourierScalar.zero(dim)) + lifted * (
            root * sgn
        )
    return DifferentialForm(dim, dim - p, comps)


def _det_fraction(rows) -> Fraction:
    """Exact determinant of a small square Fraction matrix."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = Fraction(0)
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * _det_fraction(minor)
        total += term if j % 2 == 0 else -term
    return total


def form_integral(alpha: DifferentialForm) -> GaussRational:
    """Normalised integral of a top form (coefficient of the volume basis)."""
    assert alpha.degree == alpha.dim
    return alpha.component(tuple(range(alpha.dim))).integral()


# -- the four-slot complex -------------------------------------------------


class YMElement:
    """Element of the four-slot complex; degree fixes the form type."""

    __slots__ = ("degree", "form")

    _FORM_DEGREE = staticmethod(
        lambda degree, dim: {0: 0, 1: 1, 2: dim - 1, 3: dim}[degree]
    )

    def __init__(self, degree: int, form: DifferentialForm):
        assert 0 <= degree <= 3
        assert form.degree == YMElement._FORM_DEGREE(degree, form.dim)
        self.degree = degree
        self.form = form

    @property
    def dim(self):
        return self.form.dim

    @staticmethod
    def zero(degree: int, dim: int) -> "YMElement":
        return YMElement(
            degree, DifferentialForm.zero(dim, YMElement._FORM_DEGREE(degree, dim))
        )

    def __add__(self, other):
        if not isinstance(other, YMElement):
            return NotImplemented
        if self.degree != other.degree:
            # zero summands of a clamped degree are absorbed silently
            if self.is_zero():
                return other
            if other.is_zero():
                return self
            raise AssertionError(
                f"degree mismatch {self.degree} vs {other.degree}"
            )
        return YMElement(self.degree, self.form + other.form)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return YMElement(self.degree, -self.form)

    def __mul__(self, other):
        return YMElement(self.degree, self.form * other)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.form.is_zero()

    def __eq__(self, other):
        if not isinstance(other, YMElement):
            return NotImplemented
        return self.degree == other.degree and self.form == other.form

    def __repr__(self):
        return f"YMElement({self.degree}, {self.form!r})"


def ym_q(x: YMElement, metric: Metric) -> YMElement:
    """Differential of the four-slot complex: d, then d*d, then d."""
    dim = x.dim
    if x.degree == 0:
        return YMElement(1, dform(x.form))
    if x.degree == 1:
        return YMElement(2, dform(hodge(dform(x.form), metric)))
    if x.degree == 2:
        return YMElement(3, dform(x.form))
    return YMElement.zero(3, dim)


def ym_mu_sym(x: YMElement, y: YMElement, metric: Metric) -> YMElement:
    """The graded-commutative product of the four-slot complex."""
    assert x.dim == y.dim
    dim = x.dim
    d1, d2 = x.degree, y.degree
    if d1 + d2 > 3:
        return YMElement.zero(min(d1 + d2, 3), dim)
    if d1 == 0 or d2 == 0:
        scalar, other = (x, y) if d1 == 0 else (y, x)
        u = scalar.form.component(())
        return YMElement(other.degree, other.form * u)
    if d1 == 1 and d2 == 1:
        a, b = x.form, y.form
        value = (
            wedge(a, hodge(dform(b), metric))
            - wedge(b, hodge(dform(a), metric))
            + dform(hodge(wedge(a, b), metric))
        )
        return YMElement(2, value)
    if {d1, d2} == {1, 2}:
        one = x.form if d1 == 1 else y.form
        big = y.form if d1 == 1 else x.form
        return YMElement(3, wedge(one, big))
    return YMElement.zero(d1 + d2, dim)


def ym_nu_sym(x: YMElement, y: YMElement, z: YMElement, metric: Metric) -> YMElement:
    """Trilinear homotopy; nonzero only on three degree-1 arguments."""
    assert x.dim == y.dim == z.dim
    dim = x.dim
    if (x.degree, y.degree, z.degree) != (1, 1, 1):
        out = x.degree + y.degree + z.degree - 1
        return YMElement.zero(min(max(out, 0), 3), dim)
    a, b, c = x.form, y.form, z.form
    value = wedge(a, hodge(wedge(b, c), metric)) - wedge(
        c, hodge(wedge(a, b), metric)
    )
    return YMElement(2, value)


def _cinf_identity_pool(eta: Metric, rng, cutoff: int):
    """Named residual callables for the four-slot complex, keyed by identity.

    Each value is (arity, fn) where fn maps that many YMElements to an
    object that must vanish exactly.  ``rng`` is only consulted by the
    pairing-symmetry row, which re-rolls its second argument onto a matching
    form degree.
    """
    from .bvcomplex import BVElement
    from .bvops import nusym
    from .deform import Q_eta, musym_eta, ym_embed

    dim = eta.dim
    det_sign = 1 if 1 / eta.det_upper > 0 else -1

    def embed(x: YMElement) -> BVElement:
        # degree (D-1) and D slots enter the big complex through the star
        if x.degree == 0:
            return BVElement.deg0(x.form.component(()))
        if x.degree == 1:
            return ym_embed("f1", x.form, eta)
        if x.degree == 2:
            return (-det_sign) * ym_embed("g1", hodge(x.form, eta), eta)
        return det_sign * BVElement.deg3(hodge(x.form, eta).component(()))

    def sgn(e):
        return -1 if e % 2 else 1

    def _match(y, x):
        # pairing symmetry wants equal form degrees; re-roll y onto x's slot
        if y.form.degree == x.form.degree:
            return y
        return YMElement(x.degree, random_form(rng, dim, cutoff, x.form.degree))

    return {
        "exterior-d-squared": (
            1,
            lambda x: dform(dform(x.form))
            if x.form.degree + 2 <= dim
            else DifferentialForm.zero(dim, dim),
        ),
        "exterior-star-square": (
            1,
            lambda x: hodge(hodge(x.form, eta), eta)
            - det_sign * sgn(x.form.degree * (dim - x.form.degree)) * x.form,
        ),
        "exterior-pairing-symmetry": (
            2,
            lambda x, y, _m=_match: (
                lambda ym: form_integral(wedge(x.form, hodge(ym.form, eta)))
                - form_integral(wedge(ym.form, hodge(x.form, eta)))
            )(_m(y, x)),
        ),
        "ym-q-squared": (1, lambda x: ym_q(ym_q(x, eta), eta)),
        "ym-mu-commutativity": (
            2,
            lambda x, y: ym_mu_sym(x, y, eta)
            - sgn(x.degree * y.degree) * ym_mu_sym(y, x, eta),
        ),
        "ym-q-derivation": (
            2,
            lambda x, y: ym_q(ym_mu_sym(x, y, eta), eta)
            - ym_mu_sym(ym_q(x, eta), y, eta)
            - sgn(x.degree) * ym_mu_sym(x, ym_q(y, eta), eta),
        ),
        "ym-homotopy-associativity": (
            3,
            lambda x, y, z: ym_mu_sym(ym_mu_sym(x, y, eta), z, eta)
            - ym_mu_sym(x, ym_mu_sym(y, z, eta), eta)
            - ym_q(ym_nu_sym(x, y, z, eta), eta)
            - ym_nu_sym(ym_q(x, eta), y, z, eta)
            - sgn(x.degree) * ym_nu_sym(x, ym_q(y, eta), z, eta)
            - sgn(x.degree + y.degree) * ym_nu_sym(x, y, ym_q(z, eta), eta),
        ),
        "ym-shuffle": (
            3,
            lambda x, y, z: ym_nu_sym(x, y, z, eta)
            - sgn(x.degree * y.degree) * ym_nu_sym(y, x, z, eta)
            + sgn(x.degree * (y.degree + z.degree)) * ym_nu_sym(y, z, x, eta),
        ),
        "ym-transport-q": (
            1,
            lambda x: Q_eta(embed(x), eta) - embed(ym_q(x, eta)),
        ),
        "ym-transport-mu": (
            2,
            lambda x, y: musym_eta(embed(x), embed(y), eta)
            - embed(ym_mu_sym(x, y, eta)),
        ),
        "ym-transport-nu": (
            3,
            lambda x, y, z: nusym(embed(x), embed(y), embed(z))
            - embed(ym_nu_sym(x, y, z, eta)),
        ),
    }


def ym_cinf_residuals(samples: int, eta: Metric = None, rng=None, cutoff: int = 2):
    """Residual battery for the four-slot complex and its transport dictionary.

    Covers the calculus laws (d², star squared, pairing symmetry), the
    homotopy-commutative-algebra relations of the complex, and the slotwise
    comparison with the deformed product on the big graded complex through
    the one-form embeddings and the Hodge identification of the top slots.
    Returns rows {"id", "samples", "passed"}.
    """
    import random as _random

    eta = eta or Metric.diagonal([1, 1, -1])
    rng = rng or _random.Random(0)
    rows = []
    for name, (arity, fn) in _cinf_identity_pool(eta, rng, cutoff).items():
        ok = True
        for _ in range(samples):
            args = [
                random_ym_element(rng, eta.dim, cutoff, rng.randint(0, 3))
                for _ in range(arity)
            ]
            out = fn(*args)
            vanished = out.is_zero() if hasattr(out, "is_zero") else not out
            if not vanished:
                ok = False
        rows.append({"id": name, "samples": samples, "passed": ok})
    return rows


def random_form(rng, dim: int, cutoff: int, degree: int) -> DifferentialForm:
    comps = {}
    for idx in itertools.combinations(range(dim), degree):
        comps[idx] = random_scalar(rng, dim, cutoff)
    return DifferentialForm(dim, degree, comps)


def random_ym_element(rng, dim: int, cutoff: int, degree: int) -> YMElement:
    return YMElement(
        degree, random_form(rng, dim, cutoff, YMElement._FORM_DEGREE(degree, dim))
    )
