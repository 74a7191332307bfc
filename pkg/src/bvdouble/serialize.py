"""Canonical JSON encoding for reports and failure witnesses.

Every report is rendered through :func:`to_jsonable` and then dumped with
sorted keys, so equal data structures serialize to byte-identical text.
Exact numbers never pass through floats:

* ``Fraction`` -> ``"p/q"`` (or ``"p"`` when the denominator is 1),
* ``GaussRational`` -> ``{"re": "p/q", "im": "p/q"}``,
* ``FourierScalar`` -> sorted list of ``{"mode": [...], "value": ...}``,
* ``DoubledScalar`` -> sorted list of ``{"k": [...], "ktilde": [...],
  "value": ...}`` with the mode split between the two coordinate sectors.

Structured algebra elements (sections, graded elements, forms, matrices,
bivectors) are encoded slot by slot with self-describing keys, which keeps
failure witnesses in reports legible without any out-of-band schema.
"""

from __future__ import annotations

import json
from fractions import Fraction

__all__ = ["encode_fraction", "parse_fraction", "to_jsonable", "canonical_dumps"]


def encode_fraction(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text) -> Fraction:
    """Exact rational from an int or a "p/q" string; floats are rejected."""
    if isinstance(text, bool) or isinstance(text, float):
        raise ValueError(f"expected an exact rational, got {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        return Fraction(text)
    raise ValueError(f"expected an exact rational, got {text!r}")


def _encode_gauss(g):
    return {"re": encode_fraction(g.re), "im": encode_fraction(g.im)}


def _encode_scalar(f):
    return [
        {"mode": list(mode), "value": _encode_gauss(coeff)}
        for mode, coeff in sorted(f.coeffs.items())
    ]


def _encode_doubled(f):
    h = f.halfdim
    return [
        {"k": list(mode[:h]), "ktilde": list(mode[h:]), "value": _encode_gauss(coeff)}
        for mode, coeff in sorted(f.fun.coeffs.items())
    ]


def to_jsonable(obj):
    """Recursively rewrite an algebra object into JSON-ready primitives."""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Fraction):
        return encode_fraction(obj)
    if isinstance(obj, float):
        raise TypeError("refusing to serialize a float in an exact report")
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]

    name = type(obj).__name__
    if name == "GaussRational":
        return _encode_gauss(obj)
    if name == "FourierScalar":
        return _encode_scalar(obj)
    if name == "DoubledScalar":
        return _encode_doubled(obj)
    if name == "GenSection":
        return {
            "vec": [_encode_scalar(c) for c in obj.vec],
            "form": [_encode_scalar(c) for c in obj.form],
        }
    if name == "BVElement":
        out = {"degree": obj.degree, "scalar": _encode_scalar(obj.scalar)}
        if obj.section is not None:
            out["section"] = to_jsonable(obj.section)
        return out
    if name == "DifferentialForm":
        return {
            "degree": obj.degree,
            "components": [
                {"index": list(idx), "value": _encode_scalar(comp)}
                for idx, comp in sorted(obj.comps.items())
            ],
        }
    if name == "YMElement":
        return {"degree": obj.degree, "form": to_jsonable(obj.form)}
    if name == "MatrixCoefficient":
        return {"rows": [[_encode_gauss(x) for x in row] for row in obj.rows]}
    if name == "MatrixFunction":
        return {"rows": [[_encode_scalar(x) for x in row] for row in obj.rows]}
    if name == "LieValuedBVElement":
        return {
            "degree": obj.degree,
            "grid": [[to_jsonable(e) for e in row] for row in obj.grid],
        }
    if name == "Bivector":
        return {"entries": [[to_jsonable(e) for e in row] for row in obj.entries]}
    if name == "Metric":
        return [[encode_fraction(x) for x in row] for row in obj.upper]
    raise TypeError(f"no canonical encoding for {type(obj)!r}")


def canonical_dumps(obj) -> str:
    """Deterministic JSON text: sorted keys, fixed separators, one newline."""
    return (
        json.dumps(to_jsonable(obj), sort_keys=True, indent=2, ensure_ascii=True)
        + "\n"
    )
