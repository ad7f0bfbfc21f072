"""Exact characteristic polynomials, enumeration and classification of
Bohemian upper Hessenberg matrix families."""
from .charpoly import (
    CharpolyResult,
    charpoly,
    charpoly_oracle,
    charpoly_result,
    charpoly_uh,
    charpoly_uh_coeffs,
    charpoly_uht,
    det_oracle,
)
from .core import (
    POPULATIONS,
    FamilySpec,
    GaussInt,
    I,
    Poly,
    Population,
    SubdiagAngle,
    UHMatrix,
    UHTMatrix,
    matrix_height,
    poly_height,
)

__version__ = "0.1.0"
