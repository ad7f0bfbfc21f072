"""Floating-point root radius via Aberth-Ehrlich iteration.

Advisory only: the exact classifiers never consult it.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from ..core import Poly

__all__ = ["RootRadius", "RootFindingError", "aberth_roots", "numeric_root_radius"]


class RootFindingError(RuntimeError):
    def __init__(self, message, roots, iterations):
        super().__init__(message)
        self.roots = roots
        self.iterations = iterations


class RootRadius(NamedTuple):
    max_modulus: float
    max_real: float
    error_bound: float
    roots: np.ndarray


def _to_complex(c) -> complex:
    return complex(c)


def aberth_roots(coeffs, *, max_iter: int = 1000, tol: float = 4 * np.finfo(float).eps):
    """All roots of sum(coeffs[j] z**j) by simultaneous Aberth-Ehrlich steps.

    Returns ``(roots, inclusion_radii)``; each radius is n|p(z)|/|p'(z)|.
    Iteration stops once every residual is at the rounding-error level of a
    Horner evaluation.
    """
    a = np.array([_to_complex(c) for c in coeffs], dtype=complex)
    zeros_at_origin = 0
    while len(a) > 1 and a[0] == 0:
        a = a[1:]
        zeros_at_origin += 1
    deg = len(a) - 1
    if deg < 0 or a[-1] == 0:
        raise ValueError("leading coefficient must be nonzero")
    if deg == 0:
        z = np.zeros(zeros_at_origin, dtype=complex)
        return z, np.zeros(zeros_at_origin)

    desc = a[::-1]
    dp = np.polyder(desc)
    absdesc = np.abs(desc)
    # initial guesses on a circle whose radius is the geometric mean root size
    radius = (abs(a[0]) / abs(a[-1])) ** (1.0 / deg) if a[0] != 0 else 1.0
    angles = 2 * np.pi * np.arange(deg) / deg + 0.4
    z = radius * np.exp(1j * angles)
    converged = np.zeros(deg, dtype=bool)
    for it in range(1, max_iter + 1):
        pz = np.polyval(desc, z)
        dpz = np.polyval(dp, z)
        bound = np.polyval(absdesc, np.abs(z)) * tol * (2 * deg + 1)
        converged = np.abs(pz) <= bound
        if converged.all():
            break
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pz / dpz
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            s = inv.sum(axis=1)
            step = ratio / (1 - ratio * s)
        step = np.where(converged | ~np.isfinite(step), 0, step)
        z = z - step
    else:
        raise RootFindingError(
            f"Aberth iteration did not converge in {max_iter} steps",
            np.concatenate([z, np.zeros(zeros_at_origin)]), max_iter)
    pz = np.polyval(desc, z)
    dpz = np.polyval(dp, z)
    with np.errstate(divide="ignore", invalid="ignore"):
        radii = np.where(dpz != 0, deg * np.abs(pz) / np.abs(dpz), np.inf)
    roots = np.concatenate([z, np.zeros(zeros_at_origin, dtype=complex)])
    radii = np.concatenate([radii, np.zeros(zeros_at_origin)])
    return roots, radii


def numeric_root_radius(p) -> RootRadius:
    """Largest root modulus and largest real part, with an error estimate."""
    coeffs = p.coeffs if isinstance(p, Poly) else tuple(p)
    if len(coeffs) < 2:
        raise ValueError("degree must be at least 1")
    roots, radii = aberth_roots(coeffs)
    err = float(radii.max()) if len(radii) else 0.0
    return RootRadius(float(np.abs(roots).max()), float(roots.real.max()), err, roots)
