"""Exact linear algebra: characteristic polynomials, spectra, determinants."""
from .exact import (
    NotSymmetricError,
    char_poly,
    det,
    faddeev_leverrier,
    is_psd,
    is_symmetric,
    matrix_identity_check,
)
from .spectrum import AlgebraicRoot, Spectrum, compare, spectrum

__all__ = [
    "AlgebraicRoot",
    "NotSymmetricError",
    "Spectrum",
    "char_poly",
    "compare",
    "det",
    "faddeev_leverrier",
    "is_psd",
    "is_symmetric",
    "matrix_identity_check",
    "spectrum",
]
