"""Characteristic polynomials of upper Hessenberg matrices.

Three routes are kept side by side and checked against each other:

* :func:`charpoly_uh` runs the polynomial recurrence obtained by Laplace
  expansion along the last column,
* :func:`charpoly_uh_coeffs` runs the same recurrence one coefficient at a
  time,
* :func:`charpoly_oracle` knows nothing about Hessenberg structure: it
  interpolates ``det(kI - A)`` for ``k = 0..n`` using a fraction-free
  determinant.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from .core import (
    Height,
    Poly,
    Population,
    Scalar,
    SubdiagAngle,
    UHMatrix,
    UHTMatrix,
    exact_div,
    normalize,
    poly_height,
    to_dense,
)

__all__ = [
    "CharpolyResult",
    "charpoly",
    "charpoly_result",
    "charpoly_uh",
    "charpoly_uh_coeffs",
    "charpoly_uht",
    "det_oracle",
    "charpoly_oracle",
    "negate",
    "negate_matrix_height_check",
    "similarity_reduce",
    "nonderogatory_certificate",
    "PopulationNotInvariant",
]


class PopulationNotInvariant(ValueError):
    """The population is not closed under the required unit multiplications."""

    def __init__(self, element, unit):
        self.element = element
        self.unit = unit
        super().__init__(f"population is not invariant: {unit} * {element} = "
                         f"{normalize(unit * element)} is missing")


def _column_weights(m: UHMatrix, col: int) -> list:
    """(prod of subdiagonals s_{col-k+1}..s_{col-1}) * h[col-k, col-1] for k = 1..col.

    ``col`` is the 1-based column index of the recurrence; entry k-1 of the
    result is the weight multiplying Q_{col-k}.
    """
    out = []
    prod = 1
    for k in range(1, col + 1):
        if k > 1:
            prod = prod * m.subdiag[col - k].value
        out.append(prod * m[col - k, col - 1])
    return out


def charpoly_uh(m: UHMatrix) -> Poly:
    """det(zI - H) by the column-expansion recurrence on whole polynomials."""
    if isinstance(m, UHTMatrix):
        m = m.expand()
    qs = [[1]]
    for col in range(1, m.n + 1):
        weights = _column_weights(m, col)
        nxt = [0] + qs[col - 1]
        for k, w in enumerate(weights, start=1):
            if not w:
                continue
            for j, c in enumerate(qs[col - k]):
                nxt[j] = nxt[j] - w * c
        qs.append(nxt)
    return Poly(tuple(qs[m.n]))


def charpoly_uh_coeffs(m: UHMatrix) -> Poly:
    """det(zI - H) computed coefficient by coefficient.

    q[r][j] is the coefficient of z**j in the characteristic polynomial of
    the leading r-by-r block.  The subdiagonal product runs over positions
    r-k+1..r-1 and is unrelated to the coefficient index j.
    """
    if isinstance(m, UHTMatrix):
        m = m.expand()
    n = m.n
    q = [[1]]
    for r in range(1, n + 1):
        c = _column_weights(m, r)  # c[k-1] multiplies q[r-k]
        row = [0] * (r + 1)
        row[r] = 1
        for j in range(1, r):
            acc = q[r - 1][j - 1]
            for k in range(1, r - j + 1):
                acc = acc - c[k - 1] * q[r - k][j]
            row[j] = acc
        acc = 0
        for k in range(1, r + 1):
            acc = acc - c[k - 1] * q[r - k][0]
        row[0] = acc
        q.append(row)
    return Poly(tuple(q[n]))


def charpoly_uht(m: UHTMatrix) -> Poly:
    """Toeplitz specialisation: P_n = z P_{n-1} - sum_k s**(k-1) t_k P_{n-k}."""
    s = m.subdiag_angle.value
    weights = []
    sp = 1
    for tk in m.t:
        weights.append(sp * tk)
        sp = sp * s
    ps = [[1]]
    for r in range(1, m.n + 1):
        acc = [0] * (r + 1)
        acc[1:] = ps[r - 1]
        for k in range(1, r + 1):
            w = weights[k - 1]
            if w:
                prev = ps[r - k]
                for j in range(len(prev)):
                    acc[j] -= w * prev[j]
        ps.append(acc)
    return Poly(tuple(ps[m.n]))


def det_oracle(a) -> Scalar:
    """Determinant by Bareiss fraction-free elimination with pivot search.

    Works over int and GaussInt entries; every division is exact.  A column
    with no usable pivot means the matrix is singular.
    """
    rows = [list(r) for r in to_dense(a)]
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = k
        while piv < n and not rows[piv][k]:
            piv += 1
        if piv == n:
            return 0
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        rk = rows[k]
        akk = rk[k]
        for i in range(k + 1, n):
            ri = rows[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return normalize(sign * rows[n - 1][n - 1])


def charpoly_oracle(a) -> Poly:
    """det(zI - A) by exact interpolation at z = 0..n.

    Newton forward differences of the samples give the coefficients in the
    falling-factorial basis (exact after division by k!), which are then
    expanded into monomials.
    """
    rows = to_dense(a)
    n = len(rows)
    values = []
    for node in range(n + 1):
        shifted = [[(node if i == j else 0) - rows[i][j] for j in range(n)] for i in range(n)]
        values.append(det_oracle(shifted))
    diffs = []
    cur = values
    for k in range(n + 1):
        diffs.append(exact_div(cur[0], factorial(k)))
        cur = [cur[i + 1] - cur[i] for i in range(len(cur) - 1)]
    coeffs = [0] * (n + 1)
    basis = [1]  # z(z-1)...(z-k+1)
    for k in range(n + 1):
        ck = diffs[k]
        if ck:
            for j, b in enumerate(basis):
                coeffs[j] += ck * b
        nxt = [0] * (len(basis) + 1)
        for j, b in enumerate(basis):
            nxt[j + 1] += b
            nxt[j] -= k * b
        basis = nxt
    return Poly(tuple(coeffs))


def charpoly(m) -> Poly:
    """Characteristic polynomial of any supported matrix type."""
    if isinstance(m, UHTMatrix):
        return charpoly_uht(m)
    if isinstance(m, UHMatrix):
        return charpoly_uh(m)
    return charpoly_oracle(m)


@dataclass(frozen=True)
class CharpolyResult:
    poly: Poly
    char_height: Height
    mu: int

    @property
    def height(self):
        return self.char_height.value


def charpoly_result(m) -> CharpolyResult:
    p = charpoly(m)
    h = poly_height(p)
    return CharpolyResult(p, Height(h.sq, h.value, h.is_integer), max(h.indices))


def negate(m):
    if isinstance(m, (UHMatrix, UHTMatrix)):
        return -m
    return [[-x for x in r] for r in to_dense(m)]


def negate_matrix_height_check(m) -> tuple:
    """Characteristic polynomials of ``m`` and ``-m``.

    The second satisfies p'_j = (-1)**(n-j) p_j, so both share one height.
    """
    return charpoly(m), charpoly(negate(m))


def similarity_reduce(m: UHMatrix, population, target: int = 0) -> UHMatrix:
    """Conjugate by a diagonal unitary so every subdiagonal entry becomes 1
    (``target=0``) or -1 (``target=2``, i.e. angle pi).

    Entry (i, j) of the result is h[i][j] times the product of the
    transformed subdiagonal ratios s_i..s_{j-1}, so it stays in the
    population provided the population is invariant under each subdiagonal
    unit and its negative.
    """
    if target not in (0, 2):
        raise ValueError("target must be 0 (angle 0) or 2 (angle pi)")
    pop = population if isinstance(population, Population) else Population(tuple(population))
    members = set(pop.elements)
    for a in set(m.subdiag):
        for unit in (a.value, a.negated().value):
            for e in pop.elements:
                if normalize(unit * e) not in members:
                    raise PopulationNotInvariant(e, unit)
    tgt = SubdiagAngle(target)
    # ratio[k] = s_k / target, the factor picked up crossing subdiagonal k
    ratio = [(a * tgt.inverse()).value for a in m.subdiag]
    n = m.n
    upper = []
    for i in range(n):
        f = 1
        for j in range(i, n):
            if j > i:
                f = f * ratio[j - 1]
            upper.append(normalize(m[i, j] * f))
    out = UHMatrix(n, tuple(upper), (tgt,) * (n - 1))
    bad = [x for x in out.upper if x not in members]
    if bad:
        raise PopulationNotInvariant(bad[0], 1)
    return out


def nonderogatory_certificate(m) -> bool:
    """True when the Krylov matrix [e1, H e1, ..., H^(n-1) e1] is nonsingular.

    A cyclic vector makes the matrix non-derogatory.
    """
    a = to_dense(m)
    n = len(a)
    cols = []
    v = [1] + [0] * (n - 1)
    for _ in range(n):
        cols.append(v)
        v = [sum(a[i][j] * v[j] for j in range(n)) for i in range(n)]
    krylov = [[cols[j][i] for j in range(n)] for i in range(n)]
    return det_oracle(krylov) != 0
