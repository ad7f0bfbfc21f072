"""Vectorised exact kernels for real-integer families.

Each kernel takes a stack of matrices of shape ``(B, n, n)`` and returns one
result per matrix.  Arithmetic is exact: arrays are ``int64`` when a bound on
every intermediate fits comfortably, otherwise ``object`` arrays of Python
ints are used (same code, slower).
"""
from __future__ import annotations

import numpy as np

from ..core import FamilySpec

__all__ = [
    "VECTOR_PREDICATES",
    "supports",
    "index_digits",
    "sample_digits",
    "decode",
    "det_batch",
    "charpoly_batch",
    "nilpotent_batch",
    "normal_batch",
    "nonderogatory_batch",
    "type2_from_charpoly",
    "dtype_for_family",
]

VECTOR_PREDICATES = frozenset({
    "singular", "normal", "nilpotent", "type2_stable", "nonderogatory",
    "max_char_height_attained", "distinct_charpolys",
})

_INT64_LIMIT = 2**62


def supports(family: FamilySpec, predicates) -> bool:
    """Whether the vector path can evaluate ``predicates`` on ``family``."""
    if not family.population.is_real:
        return False
    if any(a.quarter_turns % 2 for a in family.subdiag_angles):
        return False
    return set(predicates) <= VECTOR_PREDICATES


def index_digits(family: FamilySpec, start: int, stop: int) -> np.ndarray:
    """Mixed-radix digits of family indices start..stop-1, least significant first."""
    r = len(family.population)
    f = family.free_count
    if r ** f < _INT64_LIMIT:
        idx = np.arange(start, stop, dtype=np.int64)
        out = np.empty((stop - start, f), dtype=np.int64)
        for p in range(f):
            out[:, p] = idx % r
            idx //= r
        return out
    rows = [family.digits(i) for i in range(start, stop)]
    return np.array(rows, dtype=np.int64).reshape(stop - start, f)


def _words_per_sample(family: FamilySpec) -> int:
    # Philox4x64 yields four 64-bit words per counter step
    return 4 * max(1, -(-family.free_count // 4))


def sample_digits(family: FamilySpec, seed: int, start: int, stop: int) -> np.ndarray:
    """Digits of samples start..stop-1 drawn from a counter-based generator.

    Sample ``k`` consumes the Philox counter blocks beginning at
    ``k * words/4`` under key ``seed``, so any sample can be regenerated
    without drawing its predecessors.  Digit ``p`` is ``word_p mod |P|``
    (bias below |P|/2**64).
    """
    w = _words_per_sample(family)
    count = stop - start
    if count <= 0:
        return np.empty((0, family.free_count), dtype=np.int64)
    bitgen = np.random.Philox(key=seed, counter=start * (w // 4))
    raw = bitgen.random_raw(count * w).reshape(count, w)[:, :family.free_count]
    r = np.uint64(len(family.population))
    return (raw % r).astype(np.int64)


def _dtype_for(bound: int):
    return np.int64 if bound < _INT64_LIMIT else object


def _entry_bound(family: FamilySpec) -> int:
    h = max(abs(e) for e in family.population.elements)
    return max(h, 1)


def decode(family: FamilySpec, digits: np.ndarray, dtype=np.int64) -> np.ndarray:
    """Dense (B, n, n) stack for the given digit rows."""
    n = family.n
    pop = np.array(family.population.elements, dtype=dtype)
    b = digits.shape[0]
    out = np.zeros((b, n, n), dtype=dtype)
    if family.shape != "full":
        for k, a in enumerate(family.subdiag_angles):
            out[:, k + 1, k] = 1 if a.quarter_turns == 0 else -1
    positions = family.positions()
    if family.shape == "uh_toeplitz":
        for (_, k), col in zip(positions, digits.T):
            vals = pop[col]
            for i in range(n - k):
                out[:, i, i + k] = vals
    else:
        for (i, j), col in zip(positions, digits.T):
            out[:, i, j] = pop[col]
    return out


def det_batch(a: np.ndarray) -> np.ndarray:
    """Bareiss elimination on every matrix of the stack at once."""
    m = a.copy()
    b, n, _ = m.shape
    if n == 0:
        return np.ones(b, dtype=m.dtype)
    rows = np.arange(b)
    sign = np.ones(b, dtype=m.dtype)
    prev = np.ones(b, dtype=m.dtype)
    dead = np.zeros(b, dtype=bool)
    for k in range(n - 1):
        nz = m[:, k:, k] != 0
        has = nz.any(axis=1)
        dead |= ~has
        piv = k + np.argmax(nz, axis=1)
        swap = piv != k
        if swap.any():
            r = rows[swap]
            pk = piv[swap]
            tmp = m[r, pk].copy()
            m[r, pk] = m[r, k]
            m[r, k] = tmp
            sign[swap] = -sign[swap]
        akk = np.where(dead, 1, m[:, k, k])
        lower = m[:, k + 1:, k][:, :, None]
        right = m[:, k, k + 1:][:, None, :]
        m[:, k + 1:, k + 1:] = (akk[:, None, None] * m[:, k + 1:, k + 1:] - lower * right) \
            // prev[:, None, None]
        prev = akk
    return np.where(dead, 0, sign * m[:, n - 1, n - 1])


def _charpoly_hessenberg(a: np.ndarray) -> np.ndarray:
    b, n, _ = a.shape
    qs = [np.ones((b, 1), dtype=a.dtype)]
    for col in range(1, n + 1):
        nxt = np.zeros((b, col + 1), dtype=a.dtype)
        nxt[:, 1:] = qs[col - 1]
        prod = np.ones(b, dtype=a.dtype)
        for k in range(1, col + 1):
            if k > 1:
                prod = prod * a[:, col - k + 1, col - k]
            w = prod * a[:, col - k, col - 1]
            nxt[:, :col - k + 1] -= w[:, None] * qs[col - k]
        qs.append(nxt)
    return qs[n]


def _charpoly_faddeev(a: np.ndarray) -> np.ndarray:
    # Faddeev-LeVerrier; the division by k is exact over the integers
    b, n, _ = a.shape
    c = np.zeros((b, n + 1), dtype=a.dtype)
    c[:, n] = 1
    eye = np.eye(n, dtype=a.dtype)
    mk = np.zeros_like(a)
    for k in range(1, n + 1):
        mk = a @ mk + c[:, n - k + 1][:, None, None] * eye
        tr = np.einsum("bii->b", a @ mk) if a.dtype != object else \
            np.array([sum((a[x] @ mk[x])[i, i] for i in range(n)) for x in range(b)], dtype=object)
        c[:, n - k] = -(tr // k)
    return c


def charpoly_batch(a: np.ndarray, hessenberg: bool) -> np.ndarray:
    """Ascending characteristic-polynomial coefficients, shape (B, n+1)."""
    return _charpoly_hessenberg(a) if hessenberg else _charpoly_faddeev(a)


def nilpotent_batch(a: np.ndarray) -> np.ndarray:
    b, n, _ = a.shape
    p, power = a, 1
    while power < n:
        p = p @ p
        power *= 2
    return ~(p != 0).reshape(b, -1).any(axis=1)


def normal_batch(a: np.ndarray) -> np.ndarray:
    at = np.transpose(a, (0, 2, 1))
    b = a.shape[0]
    return ((a @ at) == (at @ a)).reshape(b, -1).all(axis=1)


def nonderogatory_batch(a: np.ndarray) -> np.ndarray:
    b, n, _ = a.shape
    k = np.zeros_like(a)
    v = np.zeros((b, n), dtype=a.dtype)
    v[:, 0] = 1
    for j in range(n):
        k[:, :, j] = v
        v = np.einsum("bij,bj->bi", a, v) if a.dtype != object else \
            np.array([a[x] @ v[x] for x in range(b)], dtype=object).reshape(b, n)
    return det_batch(k) != 0


def type2_from_charpoly(coeffs: np.ndarray) -> np.ndarray:
    """Charpoly equal to z**n, i.e. every lower coefficient zero."""
    return ~(coeffs[:, :-1] != 0).any(axis=1)


def dtype_for_family(family: FamilySpec, predicates) -> object:
    """int64 when every intermediate of the requested kernels is provably small."""
    n = family.n
    h = _entry_bound(family)
    preds = set(predicates)
    bound = (n * h * h) ** n  # squared Hadamard bound: Bareiss numerators
    if preds & {"max_char_height_attained", "distinct_charpolys", "type2_stable"}:
        if family.shape == "full":
            bound = max(bound, (2 * n * h) ** (2 * n) * n)
        else:
            bound = max(bound, (2 * n * h) ** n * n)
    if "nilpotent" in preds:
        bound = max(bound, (n * h) ** (2 * n))
    if "nonderogatory" in preds:
        bound = max(bound, n ** n * (n * h) ** (n * (n - 1)))
    return _dtype_for(bound)
