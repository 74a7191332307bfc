"""Double-copy structures: the C-bracket and the doubled-torus bivector system.

Two related constructions live here.

The first is the C-bracket on vector fields over T^D,

    [A, B]^{eta, j} = antisym of  A^i d_i B^j - d_i A^j B^i
                                  + eta^{rj} eta_{kl} d_r A^k B^l,

an eta-corrected antisymmetric bracket.  It fails the Jacobi identity for
generic fields; the Jacobiator vanishes exactly when every participating
field is annihilated by the eta-wave operator and every pair has vanishing
eta-contracted gradient product.  Fields built from Fourier modes along a
single eta-null covector satisfy both constraints, and this module provides
a generator for that family.

The second lives on the doubled torus T^{2D}, whose function algebra carries
two derivative families: d_i along the first D coordinates and dt^i along
the last D.  On doubled scalars we implement the cross-sector wave operator
Delta_- = 2 sum_i d_i dt^i and the section (strong-constraint) residual
sum_i (d_i f dt^i g + dt^i f d_i g).  On bivectors g^{kl} with one leg in
each sector we implement the symmetric second-order double bracket [[g, h]],
the volume-weighted divergence div_Omega with weight e^{-2 phi}, the Lie
derivative along the resulting vector field, and the two Maurer-Cartan
residuals  [[g, g]] + L_{div_Omega(g)} g  and  div_Omega(div_Omega(g)).
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import (
    FourierScalar,
    GaussRational,
    Metric,
    laplacian,
    random_coefficient,
    random_scalar,
)

__all__ = [
    "c_half_bracket",
    "c_bracket",
    "c_jacobiator",
    "wave_constraint",
    "pair_constraint",
    "null_covector",
    "null_family_field",
    "random_vector_field",
    "DoubledScalar",
    "delta_minus",
    "section_pair_residual",
    "strong_constraint_check",
    "Bivector",
    "double_bracket",
    "div_omega",
    "div_omega_vector",
    "lie_derivative_bivector",
    "bivector_mc_residual",
    "random_doubled_scalar",
    "random_bivector",
]


# -- the C-bracket on vector fields ----------------------------------------
#
# Vector fields are tuples of FourierScalar holding the contravariant
# components A^j; all index raising/lowering uses the constant metric eta.


def _zsum(terms, dim):
    return sum(terms, FourierScalar.zero(dim))


def c_half_bracket(a, b, eta: Metric):
    """The one-sided expression F(A,B)^j = A^i d_i B^j - d_i A^j B^i
    + eta^{rj} eta_{kl} d_r A^k B^l (not antisymmetric on its own)."""
    a, b = tuple(a), tuple(b)
    n = len(a)
    assert len(b) == n == eta.dim
    dim = a[0].dim
    # eta_{kl} d_r A^k B^l for each r, shared across output components.
    graded = [
        _zsum(
            (
                a[k].derivative(r) * b[l] * eta.down(k, l)
                for k in range(n)
                for l in range(n)
                if eta.down(k, l)
            ),
            dim,
        )
        for r in range(n)
    ]
    out = []
    for j in range(n):
        transport = _zsum((a[i] * b[j].derivative(i) for i in range(n)), dim)
        backreact = _zsum((a[j].derivative(i) * b[i] for i in range(n)), dim)
        correction = _zsum(
            (graded[r] * eta.up(r, j) for r in range(n) if eta.up(r, j)), dim
        )
        out.append(transport - backreact + correction)
    return tuple(out)


def c_bracket(a, b, eta: Metric):
    """The C-bracket: the antisymmetrization (F(A,B) - F(B,A)) / 2."""
    fwd = c_half_bracket(a, b, eta)
    rev = c_half_bracket(b, a, eta)
    half = Fraction(1, 2)
    return tuple((p - q) * half for p, q in zip(fwd, rev))


def c_jacobiator(a, b, c, eta: Metric):
    """Cyclic Jacobiator [[A,B],C] + [[B,C],A] + [[C,A],B] of the C-bracket.

    Nonzero for generic fields.  On fields whose modes run along a single
    eta-null covector n (so the wave and pair constraints hold) the
    Jacobiator collapses to a gradient along the raised covector n^sharp;
    it vanishes identically when every field's oscillating part is also
    polarized along n^sharp.
    """
    j1 = c_bracket(c_bracket(a, b, eta), c, eta)
    j2 = c_bracket(c_bracket(b, c, eta), a, eta)
    j3 = c_bracket(c_bracket(c, a, eta), b, eta)
    return tuple(p + q + r for p, q, r in zip(j1, j2, j3))


def wave_constraint(a, eta: Metric):
    """Componentwise eta-wave residuals eta^{ij} d_i d_j A^k."""
    return tuple(laplacian(comp, eta) for comp in a)


def pair_constraint(a, b, eta: Metric):
    """Gradient-product residuals eta^{ij} d_i A^k d_j B^l for all k, l."""
    a, b = tuple(a), tuple(b)
    dim = a[0].dim
    n = eta.dim
    return tuple(
        tuple(
            _zsum(
                (
                    a[k].derivative(i) * b[l].derivative(j) * eta.up(i, j)
                    for i in range(n)
                    for j in range(n)
                    if eta.up(i, j)
                ),
                dim,
            )
            for l in range(n)
        )
        for k in range(n)
    )


def null_covector(eta: Metric, search: int = 6):
    """A small nonzero integer covector n with eta^{ij} n_i n_j = 0, or None.

    Searched in order of increasing max-norm up to the bound; definite
    metrics admit none.
    """
    from itertools import product

    for s in range(1, search + 1):
        for n in product(range(-s, s + 1), repeat=eta.dim):
            if max(abs(v) for v in n) != s:
                continue
            if (
                sum(
                    eta.up(i, j) * n[i] * n[j]
                    for i in range(eta.dim)
                    for j in range(eta.dim)
                )
                == 0
            ):
                return n
    return None


def null_family_field(rng, eta: Metric, direction, cutoff: int, aligned: bool = True):
    """A random vector field with all modes along the given null covector n.

    The oscillating part is a sum of harmonics e^{i m (n.x)}, 1 <= |m| <=
    cutoff, plus a random constant vector, so the wave constraint holds for
    the field and the pair constraint holds for any two members of the
    family sharing n.  With aligned=True the oscillating part is polarized
    along the raised covector n^sharp = eta^{.r} n_r; that subfamily is
    closed under the C-bracket and strictly Jacobi.  With aligned=False the
    polarization is a random constant vector, which keeps the constraints
    but leaves the Jacobiator a gradient along n^sharp.  When direction is
    None (definite metric), constant fields are produced.
    """
    n = eta.dim
    const = [random_coefficient(rng) for _ in range(n)]
    if direction is None:
        return tuple(FourierScalar.const(n, c) for c in const)
    profiles = []
    for _ in range(rng.randint(1, 2)):
        m = rng.choice([s for s in range(-cutoff, cutoff + 1) if s])
        mode = tuple(m * d for d in direction)
        if aligned:
            pol = tuple(
                sum(eta.up(j, r) * direction[r] for r in range(n)) for j in range(n)
            )
        else:
            pol = tuple(random_coefficient(rng) for _ in range(n))
        profiles.append((mode, random_coefficient(rng), pol))
    out = []
    for k in range(n):
        coeffs = {(0,) * n: const[k]}
        for mode, c, pol in profiles:
            if not pol[k]:
                continue
            prev = coeffs.get(mode)
            term = c * pol[k]
            coeffs[mode] = term if prev is None else prev + term
        out.append(FourierScalar(n, coeffs))
    return tuple(out)


def random_vector_field(rng, dim: int, cutoff: int):
    """A random unconstrained vector field (sparse Fourier components)."""
    return tuple(random_scalar(rng, dim, cutoff) for _ in range(dim))


# -- doubled scalars -------------------------------------------------------


class DoubledScalar:
    """A scalar on T^{2D}: modes (k, kt) with sector derivatives dx and dt."""

    __slots__ = ("halfdim", "fun")

    def __init__(self, halfdim: int, fun: FourierScalar):
        assert fun.dim == 2 * halfdim
        self.halfdim = halfdim
        self.fun = fun

    @staticmethod
    def zero(halfdim: int) -> "DoubledScalar":
        return DoubledScalar(halfdim, FourierScalar.zero(2 * halfdim))

    @staticmethod
    def const(halfdim: int, value) -> "DoubledScalar":
        return DoubledScalar(halfdim, FourierScalar.const(2 * halfdim, value))

    @staticmethod
    def harmonic(halfdim: int, k, ktilde, coeff=1) -> "DoubledScalar":
        assert len(k) == len(ktilde) == halfdim
        return DoubledScalar(
            halfdim, FourierScalar.harmonic(2 * halfdim, tuple(k) + tuple(ktilde), coeff)
        )

    def dx(self, i: int) -> "DoubledScalar":
        """Derivative along the i-th first-sector coordinate."""
        return DoubledScalar(self.halfdim, self.fun.derivative(i))

    def dt(self, i: int) -> "DoubledScalar":
        """Derivative along the i-th second-sector coordinate."""
        return DoubledScalar(self.halfdim, self.fun.derivative(self.halfdim + i))

    def __add__(self, other):
        assert isinstance(other, DoubledScalar) and other.halfdim == self.halfdim
        return DoubledScalar(self.halfdim, self.fun + other.fun)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return DoubledScalar(self.halfdim, -self.fun)

    def __mul__(self, other):
        if isinstance(other, DoubledScalar):
            assert other.halfdim == self.halfdim
            return DoubledScalar(self.halfdim, self.fun * other.fun)
        return DoubledScalar(self.halfdim, self.fun * other)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.fun.is_zero()

    def __eq__(self, other):
        if not isinstance(other, DoubledScalar):
            return NotImplemented
        return self.halfdim == other.halfdim and self.fun == other.fun

    def __hash__(self):
        return hash((self.halfdim, self.fun))

    def __repr__(self):
        return f"DoubledScalar({self.halfdim}, {self.fun!r})"


def delta_minus(f: DoubledScalar) -> DoubledScalar:
    """The cross-sector wave operator 2 sum_i d_i dt^i; modewise -2 k.kt."""
    out = DoubledScalar.zero(f.halfdim)
    for i in range(f.halfdim):
        out = out + f.dx(i).dt(i)
    return out * 2


def section_pair_residual(f: DoubledScalar, g: DoubledScalar) -> DoubledScalar:
    """The strong-constraint residual sum_i (d_i f dt^i g + dt^i f d_i g)."""
    assert f.halfdim == g.halfdim
    out = DoubledScalar.zero(f.halfdim)
    for i in range(f.halfdim):
        out = out + f.dx(i) * g.dt(i) + f.dt(i) * g.dx(i)
    return out


def strong_constraint_check(f: DoubledScalar, g: DoubledScalar):
    """(both arguments Delta_- closed, pair residual vanishes) as booleans."""
    closed = delta_minus(f).is_zero() and delta_minus(g).is_zero()
    return closed, section_pair_residual(f, g).is_zero()


# -- bivectors on the doubled torus ----------------------------------------


class Bivector:
    """A D x D matrix g^{kl} of doubled scalars, one leg per sector."""

    __slots__ = ("halfdim", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(row) for row in entries)
        halfdim = len(rows)
        assert halfdim >= 1 and all(len(row) == halfdim for row in rows)
        assert all(
            isinstance(s, DoubledScalar) and s.halfdim == halfdim for row in rows for s in row
        )
        self.halfdim = halfdim
        self.entries = rows

    @staticmethod
    def zero(halfdim: int) -> "Bivector":
        z = DoubledScalar.zero(halfdim)
        return Bivector(((z,) * halfdim,) * halfdim)

    def entry(self, k: int, l: int) -> DoubledScalar:
        return self.entries[k][l]

    def __add__(self, other):
        assert isinstance(other, Bivector) and other.halfdim == self.halfdim
        return Bivector(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Bivector(tuple(tuple(-s for s in row) for row in self.entries))

    def __mul__(self, scalar):
        return Bivector(tuple(tuple(s * scalar for s in row) for row in self.entries))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(s.is_zero() for row in self.entries for s in row)

    def __eq__(self, other):
        if not isinstance(other, Bivector):
            return NotImplemented
        return self.halfdim == other.halfdim and self.entries == other.entries

    def __repr__(self):
        return f"Bivector({self.entries!r})"


def double_bracket(g: Bivector, h: Bivector) -> Bivector:
    """[[g,h]]^{kl} = sum_{ij} ( g^{ij} d_i dt_j h^{kl} + h^{ij} d_i dt_j g^{kl}
    - d_i g^{kj} dt_j h^{il} - d_i h^{kj} dt_j g^{il} );  symmetric in g, h."""
    assert g.halfdim == h.halfdim
    n = g.halfdim
    out = []
    for k in range(n):
        row = []
        for l in range(n):
            acc = DoubledScalar.zero(n)
            for i in range(n):
                for j in range(n):
                    acc = acc + g.entry(i, j) * h.entry(k, l).dx(i).dt(j)
                    acc = acc + h.entry(i, j) * g.entry(k, l).dx(i).dt(j)
                    acc = acc - g.entry(k, j).dx(i) * h.entry(i, l).dt(j)
                    acc = acc - h.entry(k, j).dx(i) * g.entry(i, l).dt(j)
            row.append(acc)
        out.append(tuple(row))
    return Bivector(tuple(out))


def div_omega(g: Bivector, phi: DoubledScalar):
    """Volume-weighted divergence of a bivector, one vector per sector:

        v^k  = sum_j ( dt_j g^{kj} - 2 g^{kj} dt_j phi ),
        vt^l = sum_i ( d_i g^{il} - 2 g^{il} d_i phi ),

    the divergence against the weighted volume e^{-2 phi} vol."""
    n = g.halfdim
    assert phi.halfdim == n
    vec = []
    for k in range(n):
        acc = DoubledScalar.zero(n)
        for j in range(n):
            acc = acc + g.entry(k, j).dt(j) - g.entry(k, j) * phi.dt(j) * 2
        vec.append(acc)
    tvec = []
    for l in range(n):
        acc = DoubledScalar.zero(n)
        for i in range(n):
            acc = acc + g.entry(i, l).dx(i) - g.entry(i, l) * phi.dx(i) * 2
        tvec.append(acc)
    return tuple(vec), tuple(tvec)


def div_omega_vector(vec, tvec, phi: DoubledScalar) -> DoubledScalar:
    """Weighted divergence of a split vector field (one component per sector)."""
    n = phi.halfdim
    assert len(vec) == len(tvec) == n
    acc = DoubledScalar.zero(n)
    for i in range(n):
        acc = acc + vec[i].dx(i) - vec[i] * phi.dx(i) * 2
        acc = acc + tvec[i].dt(i) - tvec[i] * phi.dt(i) * 2
    return acc


def lie_derivative_bivector(vec, tvec, g: Bivector) -> Bivector:
    """(L_w g)^{kl} = w.d g^{kl} - g^{il} d_i v^k - g^{kj} dt_j vt^l for the
    split vector field w = (vec, tvec)."""
    n = g.halfdim
    assert len(vec) == len(tvec) == n
    out = []
    for k in range(n):
        row = []
        for l in range(n):
            acc = DoubledScalar.zero(n)
            for i in range(n):
                acc = acc + vec[i] * g.entry(k, l).dx(i)
                acc = acc + tvec[i] * g.entry(k, l).dt(i)
                acc = acc - g.entry(i, l) * vec[k].dx(i)
                acc = acc - g.entry(k, i) * tvec[l].dt(i)
            row.append(acc)
        out.append(tuple(row))
    return Bivector(tuple(out))


def bivector_mc_residual(g: Bivector, phi: DoubledScalar):
    """The two Maurer-Cartan residuals of a bivector with volume shift phi:

        [[g, g]] + L_{div_Omega(g)} g      (a bivector)
        div_Omega(div_Omega(g))            (a scalar)

    Both vanish for constant g with phi = 0; for divergence-free g the first
    reduces to [[g, g]] alone."""
    vec, tvec = div_omega(g, phi)
    tensor = double_bracket(g, g) + lie_derivative_bivector(vec, tvec, g)
    scalar = div_omega_vector(vec, tvec, phi)
    return tensor, scalar


# -- randomised inputs -----------------------------------------------------


def random_doubled_scalar(
    rng, halfdim: int, cutoff: int, sector: str = "both"
) -> DoubledScalar:
    """A sparse random doubled scalar; sector limits modes to "x", "xt" or "both"."""
    assert sector in ("x", "xt", "both"), f"unknown sector {sector!r}"
    coeffs = {}
    for _ in range(rng.randint(1, 2)):
        k = tuple(rng.randint(-cutoff, cutoff) for _ in range(halfdim))
        kt = tuple(rng.randint(-cutoff, cutoff) for _ in range(halfdim))
        if sector == "x":
            kt = (0,) * halfdim
        elif sector == "xt":
            k = (0,) * halfdim
        mode = k + kt
        c = random_coefficient(rng)
        prev = coeffs.get(mode)
        coeffs[mode] = c if prev is None else prev + c
    return DoubledScalar(halfdim, FourierScalar(2 * halfdim, coeffs))


def random_bivector(rng, halfdim: int, cutoff: int, sector: str = "both") -> Bivector:
    """A random bivector with sparse doubled-scalar entries."""
    return Bivector(
        tuple(
            tuple(random_doubled_scalar(rng, halfdim, cutoff, sector) for _ in range(halfdim))
            for _ in range(halfdim)
        )
    )
