"""Exact scalar arithmetic on a torus.

Scalars are finite Fourier sums

    f(x) = sum_k  c_k  e^{i k.x},      k in Z^D,

with coefficients c_k in Q(i), stored sparsely as a dict mapping the integer
mode vector (a tuple) to a Gaussian rational.  In this model

  * the product of two scalars is the convolution of their coefficient dicts,
  * the partial derivative d/dx^j multiplies the coefficient of mode k by i*k_j,
  * the normalised integral over the torus picks out the mode-0 coefficient,

so every operation stays inside Q(i) and all identity checks are exact.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "GaussRational",
    "FourierScalar",
    "Metric",
    "laplacian",
    "random_coefficient",
    "random_scalar",
]


class GaussRational:
    """A Gaussian rational re + im*i with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    @staticmethod
    def coerce(value) -> "GaussRational":
        if isinstance(value, GaussRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussRational(value)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    def __add__(self, other):
        if not isinstance(other, (GaussRational, int, Fraction)):
            return NotImplemented
        other = GaussRational.coerce(other)
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (GaussRational, int, Fraction)):
            return NotImplemented
        other = GaussRational.coerce(other)
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        if not isinstance(other, (GaussRational, int, Fraction)):
            return NotImplemented
        return GaussRational.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (GaussRational, int, Fraction)):
            return NotImplemented
        other = GaussRational.coerce(other)
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussRational.coerce(other)
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussRational(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def __rtruediv__(self, other):
        return GaussRational.coerce(other) / self

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def conjugate(self):
        return GaussRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            other = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        if not self.im:
            return f"{self.re}"
        if not self.re:
            return f"{self.im}*i"
        return f"({self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}*i)"


_ZERO = GaussRational(0)
_I = GaussRational(0, 1)


class FourierScalar:
    """A finite Fourier sum on the torus T^dim with Q(i) coefficients."""

    __slots__ = ("dim", "coeffs")

    def __init__(self, dim: int, coeffs=None):
        assert dim >= 1
        self.dim = dim
        clean = {}
        if coeffs:
            for mode, c in coeffs.items():
                c = GaussRational.coerce(c)
                if c:
                    assert len(mode) == dim, f"mode {mode} has wrong arity"
                    clean[tuple(int(m) for m in mode)] = c
        self.coeffs = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(dim: int) -> "FourierScalar":
        return FourierScalar(dim)

    @staticmethod
    def const(dim: int, value) -> "FourierScalar":
        return FourierScalar(dim, {(0,) * dim: GaussRational.coerce(value)})

    @staticmethod
    def one(dim: int) -> "FourierScalar":
        return FourierScalar.const(dim, 1)

    @staticmethod
    def harmonic(dim: int, mode, coeff=1) -> "FourierScalar":
        return FourierScalar(dim, {tuple(mode): GaussRational.coerce(coeff)})

    # -- ring structure ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussRational)):
            other = FourierScalar.const(self.dim, other)
        if not isinstance(other, FourierScalar):
            return NotImplemented
        assert self.dim == other.dim
        coeffs = dict(self.coeffs)
        for mode, c in other.coeffs.items():
            coeffs[mode] = coeffs.get(mode, _ZERO) + c
        return FourierScalar(self.dim, coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return FourierScalar(self.dim, {m: -c for m, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRational)):
            s = GaussRational.coerce(other)
            return FourierScalar(self.dim, {m: c * s for m, c in self.coeffs.items()})
        if not isinstance(other, FourierScalar):
            return NotImplemented
        assert self.dim == other.dim
        coeffs = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                mode = tuple(a + b for a, b in zip(m1, m2))
                acc = coeffs.get(mode)
                coeffs[mode] = c1 * c2 if acc is None else acc + c1 * c2
        return FourierScalar(self.dim, coeffs)

    __rmul__ = __mul__

    # -- calculus ----------------------------------------------------------

    def derivative(self, j: int) -> "FourierScalar":
        """d/dx^j: the coefficient of mode k picks up a factor i*k_j."""
        assert 0 <= j < self.dim
        return FourierScalar(
            self.dim, {m: c * GaussRational(0, m[j]) for m, c in self.coeffs.items()}
        )

    def integral(self) -> GaussRational:
        """Normalised integral over the torus (the mode-0 coefficient)."""
        return self.coeffs.get((0,) * self.dim, _ZERO)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussRational)):
            other = FourierScalar.const(self.dim, other)
        if not isinstance(other, FourierScalar):
            return NotImplemented
        return self.dim == other.dim and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.dim, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = [f"{c}*e[{','.join(map(str, m))}]" for m, c in sorted(self.coeffs.items())]
        return " + ".join(terms)


class Metric:
    """A constant symmetric invertible matrix with exact rational entries.

    ``upper`` holds the contravariant components eta^{ij} used in all index
    contractions; ``lower`` is the exact matrix inverse eta_{ij}.
    """

    __slots__ = ("dim", "upper", "lower", "det_upper")

    def __init__(self, rows):
        mat = tuple(tuple(Fraction(x) for x in row) for row in rows)
        n = len(mat)
        assert all(len(row) == n for row in mat), "metric must be square"
        assert all(mat[i][j] == mat[j][i] for i in range(n) for j in range(n)), (
            "metric must be symmetric"
        )
        self.dim = n
        self.upper = mat
        self.lower, self.det_upper = _invert(mat)

    @staticmethod
    def diagonal(entries) -> "Metric":
        n = len(entries)
        return Metric(
            [[Fraction(entries[i]) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        )

    def up(self, i: int, j: int) -> Fraction:
        return self.upper[i][j]

    def down(self, i: int, j: int) -> Fraction:
        return self.lower[i][j]


def laplacian(f: FourierScalar, metric: Metric) -> FourierScalar:
    """The constant-coefficient Laplacian sum_{ij} eta^{ij} d_i d_j f."""
    out = FourierScalar.zero(f.dim)
    for i in range(f.dim):
        for j in range(f.dim):
            w = metric.up(i, j)
            if w:
                out = out + f.derivative(i).derivative(j) * w
    return out


def _invert(mat):
    """Exact inverse and determinant by Gauss-Jordan elimination."""
    n = len(mat)
    a = [list(row) for row in mat]
    inv = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ValueError("metric is singular")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            inv[col], inv[pivot] = inv[pivot], inv[col]
            det = -det
        p = a[col][col]
        det *= p
        a[col] = [x / p for x in a[col]]
        inv[col] = [x / p for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return tuple(tuple(row) for row in inv), det


# -- randomised inputs -----------------------------------------------------
#
# Identity checks run on random sparse scalars: one or two Fourier modes with
# small coefficients.  Sparsity keeps the exact convolutions cheap while still
# exercising every term of the identities (derivatives, convolutions and index
# contractions all mix modes).


def random_coefficient(rng) -> GaussRational:
    """A small nonzero Gaussian rational with denominator 1 or 2."""
    while True:
        a = rng.randint(-2, 2)
        b = rng.randint(-2, 2)
        if a or b:
            d = rng.choice((1, 2))
            return GaussRational(Fraction(a, d), Fraction(b, d))


def random_scalar(rng, dim: int, cutoff: int, max_modes: int = 2) -> FourierScalar:
    """A sparse random scalar with 1..max_modes modes in [-cutoff, cutoff]^dim."""
    coeffs = {}
    for _ in range(rng.randint(1, max_modes)):
        mode = tuple(rng.randint(-cutoff, cutoff) for _ in range(dim))
        c = random_coefficient(rng)
        coeffs[mode] = coeffs.get(mode, _ZERO) + c
    return FourierScalar(dim, coeffs)
