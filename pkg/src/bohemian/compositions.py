"""Composition polynomials.

With subdiagonal -1, the determinant of the n x n upper Hessenberg Toeplitz
matrix with first row t_1..t_n is p_n = sum_k t_k p_{n-k}, p_0 = 1.  Expanded
symbolically, each monomial t_{k1} t_{k2} ... records a multiset of parts
summing to n, and its coefficient counts the orderings of those parts, that
is the compositions of n with that multiset of parts.

Everything in this module uses the subdiagonal -1 convention.  The rest of
the package puts +1 on the subdiagonal; :func:`charpoly_via_substitution`
converts between the two.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from .core import Scalar, SubdiagAngle, normalize

__all__ = [
    "MultiPoly",
    "COMPOSITIONS_LIMIT",
    "composition_poly",
    "compositions_oracle",
    "aggregate",
    "charpoly_via_substitution",
]

COMPOSITIONS_LIMIT = 20

Monomial = Tuple[Tuple[int, int], ...]  # sorted (part, multiplicity) pairs


def _times_t(mono: Monomial, k: int) -> Monomial:
    d = dict(mono)
    d[k] = d.get(k, 0) + 1
    return tuple(sorted(d.items()))


@dataclass
class MultiPoly:
    """Sparse integer polynomial in t_1, t_2, ...; zero terms are never stored."""

    terms: Dict[Monomial, int] = field(default_factory=dict)

    def add_term(self, mono: Monomial, coeff: int) -> None:
        c = self.terms.get(mono, 0) + coeff
        if c:
            self.terms[mono] = c
        else:
            self.terms.pop(mono, None)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def total(self) -> int:
        return sum(self.terms.values())

    def evaluate(self, t: Sequence[Scalar]) -> Scalar:
        """Value at t_k = t[k-1]."""
        out = 0
        for mono, c in self.terms.items():
            v = c
            for part, mult in mono:
                v = v * t[part - 1] ** mult
            out = out + v
        return normalize(out)

    def sorted_terms(self) -> List[Tuple[Monomial, int]]:
        # highest power of t_1 first, then t_2, ...: the usual display order
        def key(item):
            d = dict(item[0])
            top = max(d) if d else 0
            return tuple(-d.get(k, 0) for k in range(1, top + 1))
        return sorted(self.terms.items(), key=key)

    def to_json(self) -> list:
        return [{"parts": {str(p): m for p, m in mono}, "coeff": c}
                for mono, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, obj) -> "MultiPoly":
        mp = cls()
        for term in obj:
            mono = tuple(sorted((int(p), int(m)) for p, m in term["parts"].items()))
            mp.add_term(mono, int(term["coeff"]))
        return mp

    def __str__(self):
        out = []
        for mono, c in self.sorted_terms():
            vars_ = "*".join(f"t{p}" + (f"^{m}" if m > 1 else "") for p, m in mono)
            if not vars_:
                out.append(str(c))
            elif c == 1:
                out.append(vars_)
            else:
                out.append(f"{c}*{vars_}")
        return " + ".join(out) or "0"


def composition_poly(n: int) -> MultiPoly:
    """p_{n,0} expanded from p_n = sum_{k=1}^n t_k p_{n-k}, p_0 = 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    ps = [MultiPoly({(): 1})]
    for m in range(1, n + 1):
        cur = MultiPoly()
        for k in range(1, m + 1):
            for mono, c in ps[m - k].terms.items():
                cur.add_term(_times_t(mono, k), c)
        ps.append(cur)
    return ps[n]


def compositions_oracle(n: int) -> List[List[int]]:
    """All compositions of n in lexicographic order (n = 0 gives one empty one)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > COMPOSITIONS_LIMIT:
        raise ValueError(f"n = {n} would list 2**{n - 1} compositions; "
                         f"the limit is n <= {COMPOSITIONS_LIMIT}")
    out: List[List[int]] = []

    def rec(rest, prefix):
        if rest == 0:
            out.append(list(prefix))
            return
        for first in range(1, rest + 1):
            prefix.append(first)
            rec(rest - first, prefix)
            prefix.pop()

    rec(n, [])
    return out


def aggregate(compositions) -> MultiPoly:
    """One monomial per composition, keyed by its multiset of parts."""
    mp = MultiPoly()
    for comp in compositions:
        mp.add_term(tuple(sorted(Counter(comp).items())), 1)
    return mp


def charpoly_via_substitution(n: int, t_values: Sequence[Scalar], z: Scalar,
                              subdiag=SubdiagAngle(0)) -> Scalar:
    """det(M - zI) for the Toeplitz matrix with first row ``t_values``.

    ``subdiag`` is the subdiagonal unit s of M (+1 by default, the package
    convention).  Expanding det(M - zI) along the last column gives
    E_n = sum_k c_k E_{n-k} with c_k = (-s)**(k-1) t_k, except that t_1 is
    replaced by t_1 - z.  For s = -1 the weights are the t_k themselves and
    this is the composition recurrence with t_1 -> t_1 - z.  The result
    equals (-1)**n P_n(z), P_n the characteristic polynomial det(zI - M).
    """
    if len(t_values) != n:
        raise ValueError(f"expected {n} values of t, got {len(t_values)}")
    s = subdiag.value if isinstance(subdiag, SubdiagAngle) else normalize(subdiag)
    c = []
    w = 1
    for tk in t_values:
        c.append(w * tk)
        w = w * (-s)
    if n:
        c[0] = c[0] - z
    e = [1]
    for m in range(1, n + 1):
        acc = 0
        for k in range(1, m + 1):
            acc = acc + c[k - 1] * e[m - k]
        e.append(acc)
    return normalize(e[n])
