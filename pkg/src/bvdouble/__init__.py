"""Exact checker for the graded Batalin-Vilkovisky algebra over a torus.

The library builds, in exact arithmetic over Q(i), the four-term graded
complex whose degree-1 part is the space of generalized sections (vector
field plus one-form) over a torus function algebra, together with:

  * the differential Q, the odd operators b and c,
  * the product mu, its commutativity homotopy m, the associativity
    homotopy nu, and the derived bracket { , },
  * the symmetrized product/trilinear operation and the cyclic pairing,
  * the flat-metric deformation Q + R of the differential together with the
    deformed product, and the induced matrix-valued Maurer-Cartan theory
    equivalent to Yang-Mills equations,
  * the differential-form model of the deformed subcomplex,
  * the doubled-coordinate structures (eta-twisted bracket on vector fields,
    bivector double bracket, divergence residuals).

Every asserted identity is checked exactly (zero tolerance) on randomized
sparse Fourier data; see :mod:`bvdouble.suites` for the identity registry and
:mod:`bvdouble.cli` for the command-line runner.
"""

__version__ = "0.1.0"
