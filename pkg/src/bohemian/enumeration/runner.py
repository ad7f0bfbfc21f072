"""Sharded exhaustive and sampled enumeration over Bohemian families."""
from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from ..charpoly import charpoly
from ..core import FamilySpec, GaussInt, Poly, poly_height, sqmag
from . import batch as B
from .classifiers import CLASSIFIERS

__all__ = [
    "PREDICATES",
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "ClassCounts",
    "EnumerationPlan",
    "enumerate_family",
    "count_range",
    "distinct_charpolys",
    "charpoly_database",
    "default_budget",
]

PREDICATES = (
    "singular",
    "normal",
    "nilpotent",
    "type1_stable",
    "type2_stable",
    "nonderogatory",
    "max_char_height_attained",
    "distinct_charpolys",
)

DEFAULT_BUDGET = 10**9
BATCH_SIZE = 1 << 18


class BudgetExceeded(RuntimeError):
    def __init__(self, cardinality: int, budget: int):
        self.cardinality = cardinality
        self.budget = budget
        super().__init__(
            f"family has {cardinality} matrices, above the exhaustive budget of {budget}; "
            "rerun with a larger budget or --long-run")


def default_budget() -> int:
    env = os.environ.get("BOHEMIAN_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass
class ClassCounts:
    """Per-predicate counts over some set of matrices.

    Counts from disjoint index ranges combine with :meth:`merge`.  The
    maximal characteristic height is tracked as a squared magnitude together
    with the number of matrices attaining it; the set of distinct
    characteristic polynomials is kept only when requested.
    """

    total: int = 0
    counts: dict = field(default_factory=dict)
    max_char_height_sq: Optional[int] = None
    charpolys: Optional[dict] = None  # coeff tuple -> [matrix_count, first index]
    elapsed: float = field(default=0.0, compare=False)

    def merge(self, other: "ClassCounts") -> "ClassCounts":
        counts = dict(self.counts)
        for k, v in other.counts.items():
            counts[k] = counts.get(k, 0) + v
        mx = self.max_char_height_sq
        if other.max_char_height_sq is not None:
            if mx is None or other.max_char_height_sq > mx:
                mx = other.max_char_height_sq
                counts["max_char_height_attained"] = other.counts.get("max_char_height_attained", 0)
            elif other.max_char_height_sq < mx:
                counts["max_char_height_attained"] = self.counts.get("max_char_height_attained", 0)
        polys = None
        if self.charpolys is not None or other.charpolys is not None:
            polys = {k: list(v) for k, v in (self.charpolys or {}).items()}
            for k, (cnt, first) in (other.charpolys or {}).items():
                if k in polys:
                    polys[k][0] += cnt
                    polys[k][1] = min(polys[k][1], first)
                else:
                    polys[k] = [cnt, first]
        return ClassCounts(self.total + other.total, counts, mx, polys,
                           self.elapsed + other.elapsed)

    @property
    def distinct_charpolys(self) -> Optional[int]:
        return None if self.charpolys is None else len(self.charpolys)

    @property
    def max_char_height(self):
        if self.max_char_height_sq is None:
            return None
        return _sqrt_exact(self.max_char_height_sq)

    def to_json(self) -> dict:
        out = {"total": self.total, "counts": dict(sorted(self.counts.items()))}
        if self.max_char_height_sq is not None:
            out["max_char_height"] = self.max_char_height
            out["max_char_height_sq"] = self.max_char_height_sq
        if self.charpolys is not None:
            out["counts"]["distinct_charpolys"] = len(self.charpolys)
            out["counts"] = dict(sorted(out["counts"].items()))
        return out


def _sqrt_exact(sq: int):
    r = math.isqrt(sq)
    return r if r * r == sq else f"sqrt({sq})"


@dataclass(frozen=True)
class EnumerationPlan:
    family: FamilySpec
    predicates: frozenset
    mode: str = "exhaustive"
    samples: int = 0
    seed: int = 0
    partitions: int = 1
    jobs: int = 1
    budget: Optional[int] = None

    def __post_init__(self):
        preds = frozenset(self.predicates)
        unknown = preds - set(PREDICATES)
        if unknown:
            raise ValueError(f"unknown predicate(s): {', '.join(sorted(unknown))}; "
                             f"expected any of {', '.join(PREDICATES)}")
        object.__setattr__(self, "predicates", preds)
        if self.mode not in ("exhaustive", "sampled"):
            raise ValueError(f"mode must be 'exhaustive' or 'sampled', got {self.mode!r}")
        if "type1_stable" in preds and not self.family.population.is_real:
            raise ValueError("type1_stable needs a real integer population")
        if self.partitions < 1 or self.jobs < 1:
            raise ValueError("partitions and jobs must be positive")
        if self.mode == "sampled" and self.samples < 0:
            raise ValueError("samples must be nonnegative")

    @property
    def size(self) -> int:
        return self.family.cardinality if self.mode == "exhaustive" else self.samples


# ---------------------------------------------------------------------------
# shard evaluation
# ---------------------------------------------------------------------------


def _vector_counts(family, preds, digits, offset, dtype) -> ClassCounts:
    a = B.decode(family, digits, dtype=dtype)
    counts = {}
    res = ClassCounts(total=a.shape[0])
    if "singular" in preds:
        counts["singular"] = int((B.det_batch(a) == 0).sum())
    if "normal" in preds:
        counts["normal"] = int(B.normal_batch(a).sum())
    if "nilpotent" in preds:
        counts["nilpotent"] = int(B.nilpotent_batch(a).sum())
    if "nonderogatory" in preds:
        counts["nonderogatory"] = int(B.nonderogatory_batch(a).sum())
    if preds & {"type2_stable", "max_char_height_attained", "distinct_charpolys"}:
        cp = B.charpoly_batch(a, hessenberg=family.shape != "full")
        if "type2_stable" in preds:
            counts["type2_stable"] = int(B.type2_from_charpoly(cp).sum())
        if "max_char_height_attained" in preds and a.shape[0]:
            h = np.abs(cp).max(axis=1)
            top = h.max()
            res.max_char_height_sq = int(top) ** 2
            counts["max_char_height_attained"] = int((h == top).sum())
        if "distinct_charpolys" in preds:
            res.charpolys = {}
            if a.shape[0]:
                cpi = cp if cp.dtype != object else np.array(cp.tolist(), dtype=object)
                uniq, first, cnt = np.unique(cpi, axis=0, return_index=True, return_counts=True) \
                    if cp.dtype != object else _unique_rows_object(cpi)
                for row, f, c in zip(uniq, first, cnt):
                    res.charpolys[tuple(int(x) for x in row)] = [int(c), int(f) + offset]
    res.counts = counts
    return res


def _unique_rows_object(cp):
    seen = {}
    for i, row in enumerate(cp):
        key = tuple(int(x) for x in row)
        if key in seen:
            seen[key][1] += 1
        else:
            seen[key] = [i, 1]
    keys = list(seen)
    return keys, [seen[k][0] for k in keys], [seen[k][1] for k in keys]


def _scalar_counts(family, preds, digit_rows, offset) -> ClassCounts:
    res = ClassCounts()
    counts = {p: 0 for p in preds if p in CLASSIFIERS}
    want_poly = bool(preds & {"max_char_height_attained", "distinct_charpolys"})
    polys = {} if "distinct_charpolys" in preds else None
    mx, attained = None, 0
    for k, digits in enumerate(digit_rows):
        m = family.matrix_from_digits([int(d) for d in digits])
        res.total += 1
        for p in counts:
            if CLASSIFIERS[p](m):
                counts[p] += 1
        if want_poly:
            poly = charpoly(m)
            if "max_char_height_attained" in preds:
                hsq = max(sqmag(c) for c in poly.coeffs)
                if mx is None or hsq > mx:
                    mx, attained = hsq, 1
                elif hsq == mx:
                    attained += 1
            if polys is not None:
                key = poly.coeffs
                if key in polys:
                    polys[key][0] += 1
                else:
                    polys[key] = [1, k + offset]
    if "max_char_height_attained" in preds:
        res.max_char_height_sq = mx
        counts["max_char_height_attained"] = attained
    res.counts = counts
    res.charpolys = polys
    return res


def count_range(family: FamilySpec, predicates, start: int, stop: int,
                seed: Optional[int] = None, vector: Optional[bool] = None) -> ClassCounts:
    """Counts over family indices (or sample numbers, when ``seed`` is given)
    in ``[start, stop)``.

    ``vector`` forces or forbids the numpy kernels; by default they are used
    whenever they support the family and predicates.
    """
    preds = frozenset(predicates)
    use_vector = B.supports(family, preds) if vector is None else vector
    dtype = B.dtype_for_family(family, preds) if use_vector else None
    total = ClassCounts(counts={p: 0 for p in preds if p != "distinct_charpolys"},
                        charpolys={} if "distinct_charpolys" in preds else None)
    for lo in range(start, stop, BATCH_SIZE):
        hi = min(stop, lo + BATCH_SIZE)
        if seed is None:
            digits = B.index_digits(family, lo, hi)
        else:
            digits = B.sample_digits(family, seed, lo, hi)
        if use_vector:
            part = _vector_counts(family, preds, digits, lo, dtype)
        else:
            part = _scalar_counts(family, preds, digits, lo)
        total = total.merge(part)
    return total


def _shards(size: int, partitions: int) -> list:
    edges = [size * k // partitions for k in range(partitions + 1)]
    return [(edges[k], edges[k + 1]) for k in range(partitions) if edges[k] < edges[k + 1]]


def _run_shard(args):
    family, preds, lo, hi, seed, vector = args
    t0 = time.perf_counter()
    res = count_range(family, preds, lo, hi, seed=seed, vector=vector)
    res.elapsed = time.perf_counter() - t0
    return res


def enumerate_family(plan: EnumerationPlan, progress: Optional[Callable] = None,
                     vector: Optional[bool] = None) -> ClassCounts:
    """Evaluate every predicate of ``plan`` over its family.

    Exhaustive mode visits each index once; sampled mode draws
    ``plan.samples`` matrices keyed by ``(seed, sample number)``.  The index
    range is cut into ``plan.partitions`` shards evaluated on ``plan.jobs``
    processes; results do not depend on either number.
    """
    t0 = time.perf_counter()
    if plan.mode == "exhaustive":
        budget = default_budget() if plan.budget is None else plan.budget
        if plan.family.cardinality > budget:
            raise BudgetExceeded(plan.family.cardinality, budget)
        seed = None
    else:
        seed = plan.seed
    size = plan.size
    parts = max(plan.partitions, plan.jobs)
    tasks = [(plan.family, plan.predicates, lo, hi, seed, vector) for lo, hi in _shards(size, parts)]
    result = ClassCounts(counts={p: 0 for p in plan.predicates if p != "distinct_charpolys"},
                         charpolys={} if "distinct_charpolys" in plan.predicates else None)
    if plan.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=plan.jobs) as pool:
            for done, part in enumerate(pool.map(_run_shard, tasks), start=1):
                result = result.merge(part)
                if progress:
                    progress(done, len(tasks), result)
    else:
        for done, task in enumerate(tasks, start=1):
            result = result.merge(_run_shard(task))
            if progress:
                progress(done, len(tasks), result)
    result.elapsed = time.perf_counter() - t0
    return result


def charpoly_database(family: FamilySpec, budget: Optional[int] = None, jobs: int = 1,
                      partitions: int = 1) -> list:
    """One record per distinct characteristic polynomial, sorted by coefficients.

    Each record holds the polynomial, its height and mu, how many matrices
    share it and the smallest family index among them.
    """
    plan = EnumerationPlan(family, frozenset({"distinct_charpolys"}), budget=budget,
                           jobs=jobs, partitions=partitions)
    res = enumerate_family(plan)
    records = []
    for coeffs in sorted(res.charpolys, key=_coeff_sort_key):
        cnt, first = res.charpolys[coeffs]
        p = Poly(coeffs)
        h = poly_height(p)
        records.append({"poly": p, "height": h, "mu": max(h.indices),
                        "matrix_count": cnt, "example_matrix_index": first})
    return records


def _coeff_sort_key(coeffs):
    return tuple((c.re, c.im) if isinstance(c, GaussInt) else (c, 0) for c in coeffs)


def distinct_charpolys(family: FamilySpec, budget: Optional[int] = None, jobs: int = 1) -> int:
    plan = EnumerationPlan(family, frozenset({"distinct_charpolys"}), budget=budget, jobs=jobs)
    return enumerate_family(plan).distinct_charpolys
