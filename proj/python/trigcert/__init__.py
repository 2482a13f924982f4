"""Exact nonnegativity certification for sine/cosine polynomials on [0, pi].

Thin wrapper over the C++ core. Exact rationals are passed as "p/q" strings.
"""

try:
    # installed layout: the extension lives inside the package
    from ._trigcert import (
        boundary_sweep,
        certify_cosine,
        certify_sine,
        characterize_cosine2,
        characterize_sine3,
        cos_enclosure,
        criteria,
        eval_sine,
        family,
        kappa0,
        membership,
        sin_enclosure,
        __version__,
    )
except ImportError:  # build-tree layout: top-level extension on PYTHONPATH
    from _trigcert import (
        boundary_sweep,
        certify_cosine,
        certify_sine,
        characterize_cosine2,
        characterize_sine3,
        cos_enclosure,
        criteria,
        eval_sine,
        family,
        kappa0,
        membership,
        sin_enclosure,
        __version__,
    )

__all__ = [
    "boundary_sweep",
    "certify_cosine",
    "certify_sine",
    "characterize_cosine2",
    "characterize_sine3",
    "cos_enclosure",
    "criteria",
    "eval_sine",
    "family",
    "kappa0",
    "membership",
    "sin_enclosure",
    "__version__",
]
