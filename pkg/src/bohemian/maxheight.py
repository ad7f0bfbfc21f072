"""Maximal characteristic height of upper Hessenberg Toeplitz families.

The all-(-1) Toeplitz matrix with unit subdiagonal has characteristic
polynomial P~_n obeying P~_{n+1} = (z+2) P~_n - z P~_{n-1}; its height is
the maximal characteristic height tau_n over the {-1,0,1} family, attained
first at index mu_n.  This module computes those polynomials, the matrices
attaining tau_n, several independent formulas for the coefficients, the
Fibonacci bounds on tau_n and the numerical constant C_n.
"""
from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterator, List, Sequence

from .charpoly import charpoly_uht
from .core import Poly, UHTMatrix, poly_height

__all__ = [
    "MaxHeightRecord",
    "C_EMPIRICAL",
    "CSV_HEADER",
    "tilde_P",
    "tilde_P_sequence",
    "tau_mu",
    "max_height_family",
    "max_height_pattern",
    "coeff_T",
    "coeff_rising",
    "genfun_column",
    "ogf_check",
    "closed_form_P",
    "fibonacci",
    "bound_check",
    "asymptotic_series",
    "series_csv",
    "run_identities",
]

C_EMPIRICAL = Decimal("0.7701532")
CSV_HEADER = "n,tau,mu,count,fib_lower,fib_upper,C_n,s_n"

# coefficient lists of P~_0, P~_1, ...; grown on demand
_TILDE: List[List[int]] = [[1], [1, 1]]


def _step(prev: Sequence[int], cur: Sequence[int]) -> List[int]:
    # (z + 2) cur - z prev
    nxt = [0] * (len(cur) + 1)
    for j, c in enumerate(cur):
        nxt[j] += 2 * c
        nxt[j + 1] += c
    for j, c in enumerate(prev):
        nxt[j + 1] -= c
    return nxt


def _tilde_coeffs(n: int) -> List[int]:
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_TILDE) <= n:
        _TILDE.append(_step(_TILDE[-2], _TILDE[-1]))
    return _TILDE[n]


def tilde_P(n: int) -> Poly:
    """Characteristic polynomial of the n x n all-(-1) Toeplitz matrix."""
    return Poly(tuple(_tilde_coeffs(n)))


def tilde_P_sequence() -> Iterator[List[int]]:
    """Coefficient lists of P~_0, P~_1, ... without caching."""
    prev, cur = [1], [1, 1]
    yield prev
    while True:
        yield cur
        prev, cur = cur, _step(prev, cur)


def fibonacci(k: int) -> int:
    """F_k by fast doubling, F_0 = 0 and F_1 = 1."""
    if k < 0:
        raise ValueError("k must be >= 0")

    def pair(m):
        if m == 0:
            return 0, 1
        a, b = pair(m >> 1)
        c = a * (2 * b - a)
        d = a * a + b * b
        return (d, c + d) if m & 1 else (c, d)

    return pair(k)[0]


def _c_n(tau: int, n: int, fib: int, digits: int) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits
        return Decimal(tau) * Decimal(n + 1).sqrt() / Decimal(fib)


@dataclass(frozen=True)
class MaxHeightRecord:
    n: int
    tau: int
    mu: int
    family_count: int
    lower_bound: Fraction
    upper_bound: int
    C_n: Decimal

    @property
    def bounds_hold(self) -> bool:
        return self.lower_bound < self.tau < self.upper_bound


def tau_mu(n: int, precision_digits: int = 50) -> MaxHeightRecord:
    if n < 1:
        raise ValueError("n must be >= 1")
    h = poly_height(tilde_P(n))
    tau, mu = h.value, max(h.indices)
    fib = fibonacci(2 * n + 1)
    return MaxHeightRecord(n, tau, mu, 2 * 3**mu, Fraction(fib, n + 1), fib,
                           _c_n(tau, n, fib, precision_digits))


def _alternating(n: int, first: int, second: int) -> tuple:
    return tuple(first if k % 2 == 0 else second for k in range(n))


def max_height_family(n: int) -> Iterator[UHTMatrix]:
    """Toeplitz matrices over {-1,0,1} attaining tau_n.

    Both base patterns, all -1 and 1,-1,1,..., with their last mu_n entries
    free.  Each matrix is checked before it is yielded.  For n = 1 the
    free entry is the only entry, so the two patterns coincide and three
    distinct matrices come out.
    """
    rec = tau_mu(n)
    head = n - rec.mu
    seen = set()
    for base in (_alternating(n, -1, -1), _alternating(n, 1, -1)):
        for tail in itertools.product((-1, 0, 1), repeat=rec.mu):
            t = base[:head] + tail
            if t in seen:
                continue
            seen.add(t)
            m = UHTMatrix(n, t)
            h = poly_height(charpoly_uht(m))
            if h.value != rec.tau or max(h.indices) != rec.mu:
                raise ArithmeticError(f"t={t} has height {h.value}, expected {rec.tau}")
            yield m


def max_height_pattern(F, n: int = 8) -> list:
    """First rows t_1..t_n maximising characteristic height over entries from F.

    With a = min F and b = max F: all-a when |a| > |b|, the alternating row
    b, a, b, ... when |b| > |a|, and both on a tie.
    """
    elems = sorted(set(F))
    if len(elems) < 2:
        raise ValueError("population needs at least two elements")
    a, b = elems[0], elems[-1]
    out = []
    if abs(a) >= abs(b):
        out.append(_alternating(n, a, a))
    if abs(b) >= abs(a):
        out.append(_alternating(n, b, a))
    return out


def coeff_T(n: int, k: int) -> int:
    """T_{n,k} = sum_j C(k+j, k-1) C(n-k-1, j), with T_{n,n} = 1."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    if k == n:
        return 1
    return sum(comb(k + j, k - 1) * comb(n - k - 1, j) for j in range(n - k))


def _rising(x: int, m: int) -> int:
    out = 1
    for i in range(m):
        out *= x + i
    return out


def _falling(x: int, m: int) -> int:
    out = 1
    for i in range(m):
        out *= x - i
    return out


def coeff_rising(n: int, k: int) -> int:
    """p_{n,k} as a terminating hypergeometric sum.

    (k+1) * sum_m (k+2)^(m) (n-k-1)_(m) / (2^(m) m!), rising factorials
    written ^(m) and the falling factorial written _(m).
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if k == n:
        return 1
    top = n - k - 1
    s = sum(Fraction(_rising(k + 2, m) * _falling(top, m), _rising(2, m) * factorial(m))
            for m in range(top + 1))
    val = (k + 1) * s
    if val.denominator != 1:
        raise ArithmeticError(f"non-integer coefficient {val} at n={n}, k={k}")
    return val.numerator


def _series_mul(a: Sequence[int], b: Sequence[int], N: int) -> List[int]:
    out = [0] * N
    for i, x in enumerate(a[:N]):
        if x:
            for j, y in enumerate(b[:N - i]):
                out[i + j] += x * y
    return out


def genfun_column(i: int, N: int) -> List[int]:
    """First N Taylor coefficients of ((1-x)/(1-2x))**(i+1).

    The coefficient of x**(n-i) is p_{n,i}.
    """
    if i < 0 or N < 1:
        raise ValueError("need i >= 0 and N >= 1")
    inv = [2**j for j in range(N)]  # 1/(1-2x)
    base = _series_mul([1, -1], inv, N)
    out = [1] + [0] * (N - 1)
    for _ in range(i + 1):
        out = _series_mul(out, base, N)
    return out


def _padd(a, b):
    out = [0] * max(len(a), len(b))
    for j, x in enumerate(a):
        out[j] += x
    for j, x in enumerate(b):
        out[j] += x
    return out


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _trim(a):
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def ogf_check(N: int) -> bool:
    """Expand (1-x)/(z x^2 - (z+2) x + 1) in x and compare with P~_0..P~_{N-1}."""
    if N < 1:
        raise ValueError("N must be >= 1")
    num = [[1], [-1]]
    den = [[1], [-2, -1], [0, 1]]  # polynomials in z
    g: List[List[int]] = []
    for m in range(N):
        acc = num[m] if m < len(num) else [0]
        for d in (1, 2):
            if m - d >= 0:
                acc = _padd(acc, [-c for c in _pmul(den[d], g[m - d])])
        g.append(_trim(acc))
    return all(g[m] == _tilde_coeffs(m) for m in range(N))


def closed_form_P(n: int) -> Poly:
    """P~_n from the double binomial sum in (z/2 + 1) and (1 + z^2/4).

    Both sums are scaled by 2**n so they run over the integers, in
    (2 + z) and (4 + z^2); the division by 2**n at the end must be exact.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    lin = [[1]]
    for _ in range(n):
        lin.append(_pmul(lin[-1], [2, 1]))
    quad = [[1]]
    for _ in range(n // 2):
        quad.append(_pmul(quad[-1], [4, 0, 1]))
    total = [0]
    for ell in range(n // 2 + 1):
        term = _pmul(lin[n - 2 * ell], quad[ell])
        total = _padd(total, [comb(n, 2 * ell) * c for c in term])
    for ell in range((n - 1) // 2 + 1) if n >= 1 else ():
        term = _pmul([0, 1], _pmul(lin[n - 2 * ell - 1], quad[ell]))
        total = _padd(total, [comb(n, 2 * ell + 1) * c for c in term])
    scale = 2**n
    if any(c % scale for c in total):
        raise ArithmeticError(f"closed form left a fractional coefficient at n={n}")
    return Poly(tuple(c // scale for c in _trim(total)))


def bound_check(n: int):
    """(F_{2n+1}/(n+1), tau_n, F_{2n+1}, strict bounds hold).

    Also confirms P~_n(1) == F_{2n+1} and raises ArithmeticError otherwise.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    fib = fibonacci(2 * n + 1)
    if tilde_P(n)(1) != fib:
        raise ArithmeticError(f"P~_{n}(1) != F_{2 * n + 1}")
    lower = Fraction(fib, n + 1)
    tau = poly_height(tilde_P(n)).value
    return lower, tau, fib, lower < tau < fib


@dataclass(frozen=True)
class SeriesRow:
    n: int
    tau: int
    mu: int
    count: int
    fib_lower: Fraction
    fib_upper: int
    C_n: Decimal
    s_n: Decimal

    def csv_fields(self) -> list:
        return [self.n, self.tau, self.mu, self.count, str(self.fib_lower), self.fib_upper,
                format(self.C_n, "f"), format(self.s_n, "f")]


def asymptotic_series(n_max: int, precision_digits: int = 50,
                      C: Decimal = C_EMPIRICAL) -> List[SeriesRow]:
    """Rows n = 1..n_max with C_n = tau_n sqrt(n+1) / F_{2n+1} and
    s_n = (n+1)(G_n/tau_n - 1), G_n = C F_{2n+1} / sqrt(n+1).

    The polynomials and Fibonacci numbers are advanced incrementally so the
    whole series costs O(n_max**2) big-integer additions.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if precision_digits < 10:
        raise ValueError("precision_digits must be >= 10")
    rows = []
    seq = tilde_P_sequence()
    next(seq)
    f_prev, f_cur = 1, 2  # F_{2n}, F_{2n+1} at n = 1
    with localcontext() as ctx:
        ctx.prec = precision_digits
        for n in range(1, n_max + 1):
            coeffs = next(seq)
            h = poly_height(coeffs)
            tau, mu = h.value, max(h.indices)
            root = Decimal(n + 1).sqrt()
            c_n = Decimal(tau) * root / Decimal(f_cur)
            g_n = C * Decimal(f_cur) / root
            s_n = (n + 1) * (g_n / Decimal(tau) - 1)
            rows.append(SeriesRow(n, tau, mu, 2 * 3**mu, Fraction(f_cur, n + 1), f_cur, c_n, s_n))
            f_prev, f_cur = f_prev + f_cur, f_prev + 2 * f_cur
    return rows


def series_csv(rows: Sequence[SeriesRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER.split(","))
    for r in rows:
        w.writerow(r.csv_fields())
    return buf.getvalue()


def run_identities(n_max: int = 30, coeff_T: Callable[[int, int], int] = coeff_T,
                   coeff_rising: Callable[[int, int], int] = coeff_rising) -> list:
    """Check every coefficient formula against P~_n for 0 <= k <= n <= n_max.

    Returns ``[(name, ok, first_failure_or_None)]``.  The formula callables
    can be swapped out, which is how the checks themselves are tested.
    """
    report = []

    def sweep(name, fn):
        bad = None
        for n in range(n_max + 1):
            p = _tilde_coeffs(n)
            for k in range(n + 1):
                try:
                    got = fn(n, k)
                except (ArithmeticError, ValueError) as exc:
                    got = exc
                if got != p[k]:
                    bad = {"n": n, "k": k, "expected": p[k], "got": str(got)}
                    break
            if bad:
                break
        report.append((name, bad is None, bad))

    sweep("positive", lambda n, k: _tilde_coeffs(n)[k] if _tilde_coeffs(n)[k] > 0 else 0)
    sweep("coeff_T", lambda n, k: coeff_T(n + 1, k + 1))
    sweep("coeff_rising", coeff_rising)
    cols = {i: genfun_column(i, n_max + 1) for i in range(n_max + 1)}
    sweep("genfun_column", lambda n, k: cols[k][n - k])
    ok = ogf_check(n_max + 1)
    report.append(("ogf", ok, None if ok else {"N": n_max + 1}))
    closed = {n: closed_form_P(n).coeffs for n in range(n_max + 1)}
    sweep("closed_form", lambda n, k: closed[n][k])
    return report
