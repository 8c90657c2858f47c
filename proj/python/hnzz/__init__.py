"""Exact zigzag barcodes, Harder-Narasimhan filtrations and affine lifts."""

from fractions import Fraction

from ._core import (
    GuardExceeded,
    Instance,
    InternalError,
    InvalidArgument,
    ParseError,
    _hn,
    barcode,
    generate_persistence,
    indec_N,
    indec_T,
    lift,
    verify,
)

__all__ = [
    "GuardExceeded",
    "Instance",
    "InternalError",
    "InvalidArgument",
    "ParseError",
    "barcode",
    "generate_persistence",
    "hn",
    "indec_N",
    "indec_T",
    "lift",
    "verify",
]


def hn(instance, weights=None, oracle=False):
    """HN quotients as (slope, dims) pairs, slopes descending.

    `weights` is a sequence of vertex weights (ints, Fractions or "a/b"
    strings); the Euler condition is used when it is None. With
    oracle=True the result is a pair (steps, agrees), where `agrees` is None
    when only the brute-force route applies.
    """
    if weights is not None:
        weights = [str(Fraction(w)) for w in weights]
    steps, agrees = _hn(instance, weights, oracle)
    steps = [(Fraction(s), dims) for s, dims in steps]
    return (steps, agrees) if oracle else steps
