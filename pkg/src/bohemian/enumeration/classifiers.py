"""Exact per-matrix predicates."""
from __future__ import annotations

from fractions import Fraction

from ..charpoly import charpoly, det_oracle, nonderogatory_certificate
from ..core import GaussInt, UHMatrix, UHTMatrix, conj, to_dense

__all__ = [
    "is_singular",
    "is_normal",
    "is_nilpotent",
    "is_type1_stable",
    "is_type2_stable",
    "is_nonderogatory",
    "routh_first_column",
    "CLASSIFIERS",
]


def _matmul(a, b):
    n = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def is_singular(m) -> bool:
    return det_oracle(m) == 0


def is_normal(m) -> bool:
    """Exact test of A A* == A* A."""
    a = to_dense(m)
    n = len(a)
    ah = [[conj(a[j][i]) for j in range(n)] for i in range(n)]
    return _matmul(a, ah) == _matmul(ah, a)


def is_nilpotent(m) -> bool:
    """A**n == 0, checked by repeated squaring up to the first power >= n."""
    a = to_dense(m)
    n = len(a)
    p, power = a, 1
    while power < n:
        p = _matmul(p, p)
        power *= 2
    return all(not x for row in p for x in row)


def _charpoly_of(m):
    if isinstance(m, (UHMatrix, UHTMatrix)):
        return charpoly(m)
    return charpoly(to_dense(m))


def routh_first_column(coeffs_desc) -> list:
    """First column of the Routh array, or a shorter list ending in a
    non-positive entry where the tabulation had to stop.

    ``coeffs_desc`` lists the coefficients from the leading one down.
    """
    deg = len(coeffs_desc) - 1
    r0 = [Fraction(c) for c in coeffs_desc[0::2]]
    r1 = [Fraction(c) for c in coeffs_desc[1::2]]
    width = len(r0)
    r1 += [Fraction(0)] * (width - len(r1))
    first = [r0[0]]
    if deg == 0:
        return first
    first.append(r1[0])
    prev, cur = r0, r1
    for _ in range(deg - 1):
        if cur[0] <= 0:
            return first
        nxt = [(cur[0] * prev[j + 1] - prev[0] * cur[j + 1]) / cur[0] for j in range(width - 1)]
        nxt.append(Fraction(0))
        prev, cur = cur, nxt
        first.append(cur[0])
    return first


def is_type1_stable(m) -> bool:
    """All eigenvalues strictly in the open left half plane.

    Uses the Routh array of the exact characteristic polynomial; any zero or
    negative entry in its first column means not strictly stable.
    """
    for row in to_dense(m):
        for x in row:
            if isinstance(x, GaussInt) and x.im:
                raise ValueError("type I stability test needs real integer entries")
    p = _charpoly_of(m)
    coeffs_desc = [int(c) if not isinstance(c, GaussInt) else c.re for c in reversed(p.coeffs)]
    col = routh_first_column(coeffs_desc)
    return len(col) == len(coeffs_desc) and all(c > 0 for c in col)


def is_type2_stable(m) -> bool:
    """All eigenvalues strictly inside the unit circle.

    After dividing the characteristic polynomial by its largest power of z,
    a nonzero (Gaussian) integer constant term leaves a root of modulus at
    least 1, so the matrix is stable exactly when nothing remains.
    """
    p = _charpoly_of(m)
    low = 0
    while low < p.degree and not p.coeffs[low]:
        low += 1
    return low == p.degree


def is_nonderogatory(m) -> bool:
    return nonderogatory_certificate(m)


CLASSIFIERS = {
    "singular": is_singular,
    "normal": is_normal,
    "nilpotent": is_nilpotent,
    "type1_stable": is_type1_stable,
    "type2_stable": is_type2_stable,
    "nonderogatory": is_nonderogatory,
}
