import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bohemian.charpoly import charpoly, det_oracle
from bohemian.core import I, POPULATIONS, FamilySpec, Poly, Population, SubdiagAngle, UHMatrix, UHTMatrix
from bohemian.enumeration import (
    BudgetExceeded,
    ClassCounts,
    EnumerationPlan,
    RootFindingError,
    aberth_roots,
    charpoly_database,
    count_range,
    distinct_charpolys,
    enumerate_family,
    is_nilpotent,
    is_nonderogatory,
    is_normal,
    is_singular,
    is_type1_stable,
    is_type2_stable,
    numeric_root_radius,
    routh_first_column,
)
from bohemian.enumeration import batch
from bohemian.maxheight import tilde_P

PM1 = POPULATIONS["pm1"]
EYE3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
ZERO3 = [[0] * 3 for _ in range(3)]


class TestClassifiers:
    def test_singular(self):
        assert is_singular(ZERO3)
        assert not is_singular(EYE3)

    def test_nilpotent(self):
        assert is_nilpotent(UHMatrix.zero(4))
        assert not is_nilpotent(EYE3)
        assert is_nilpotent([[0, 1], [0, 0]])

    def test_normal_skew_and_circulant(self):
        skew = [[0, I, 0, 0], [1, 0, I, 0], [0, 1, 0, I], [0, 0, 1, 0]]
        circ = [[0, 0, 0, -I], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]
        assert is_normal(skew) and is_normal(circ)
        assert not is_normal([[0, 1], [0, 0]])

    def test_type1(self):
        assert is_type1_stable([[-1]])
        assert not is_type1_stable([[0]])
        assert not is_type1_stable([[0, -1], [1, 0]])  # trace zero, eigenvalues +-i
        assert is_type1_stable(UHTMatrix(2, (-1, 0)))

    def test_type1_rejects_complex(self):
        with pytest.raises(ValueError):
            is_type1_stable([[I]])

    def test_type2(self):
        assert is_type2_stable(UHMatrix.zero(3))
        assert not is_type2_stable(EYE3)

    def test_nonderogatory(self):
        assert is_nonderogatory(UHTMatrix(3, (1, 1, 1)))
        assert not is_nonderogatory(EYE3)


class TestRouth:
    def test_hurwitz_cubic(self):
        # (z+1)(z+2)(z+3)
        col = routh_first_column([1, 6, 11, 6])
        assert len(col) == 4 and all(c > 0 for c in col)

    def test_zero_entry_stops(self):
        col = routh_first_column([1, 0, 1])
        assert col[-1] == 0

    def test_sign_change(self):
        col = routh_first_column([1, 1, 2, 8])
        assert any(c < 0 for c in col)

    @settings(max_examples=150)
    @given(st.lists(st.integers(-3, 3), min_size=2, max_size=6))
    def test_agrees_with_numeric_roots(self, lower):
        coeffs = tuple(lower) + (1,)
        col = routh_first_column(list(reversed(coeffs)))
        stable = len(col) == len(coeffs) and all(c > 0 for c in col)
        rr = numeric_root_radius(Poly(coeffs))
        if abs(rr.max_real) > 1e-6 + rr.error_bound:
            assert stable == (rr.max_real < 0)


class TestRoots:
    def test_monomial(self):
        rr = numeric_root_radius(Poly((0, 0, 0, 1)))
        assert rr.max_modulus == 0 and rr.max_real == 0

    def test_quadratic(self):
        rr = numeric_root_radius(Poly((2, 2, 1)))
        assert math.isclose(rr.max_modulus, math.sqrt(2), rel_tol=1e-12)
        assert math.isclose(rr.max_real, -1, rel_tol=1e-12)

    def test_tilde_p10_matches_routh(self):
        p = tilde_P(10)
        rr = numeric_root_radius(p)
        col = routh_first_column(list(reversed(p.coeffs)))
        routh_stable = len(col) == 11 and all(c > 0 for c in col)
        assert routh_stable == (rr.max_real < 0)
        assert math.isclose(rr.max_real, -0.15330162782, abs_tol=1e-9)

    def test_nonconvergence_carries_roots(self):
        with pytest.raises(RootFindingError) as info:
            aberth_roots((1, 0, 0, 0, 0, 1), max_iter=1)
        assert len(info.value.roots) == 5

    def test_degree_zero_rejected(self):
        with pytest.raises(ValueError):
            numeric_root_radius(Poly((1,)))


class TestBatchKernels:
    @pytest.mark.parametrize("shape,n", [("full", 3), ("uh", 4), ("uht", 5)])
    def test_vector_matches_scalar(self, shape, n):
        fam = FamilySpec(shape, n, PM1)
        preds = {"singular", "normal", "nilpotent", "type2_stable", "nonderogatory",
                 "max_char_height_attained", "distinct_charpolys"}
        stop = min(fam.cardinality, 4000)
        v = count_range(fam, preds, 0, stop, vector=True)
        s = count_range(fam, preds, 0, stop, vector=False)
        assert v == s

    def test_negative_subdiag_vector(self):
        fam = FamilySpec("uh", 3, PM1, subdiag=SubdiagAngle(2))
        preds = {"singular", "max_char_height_attained"}
        assert count_range(fam, preds, 0, fam.cardinality, vector=True) == \
            count_range(fam, preds, 0, fam.cardinality, vector=False)

    def test_object_dtype_path(self):
        fam = FamilySpec("full", 3, Population((-9, 0, 9)))
        a = batch.decode(fam, batch.index_digits(fam, 0, 500), dtype=object)
        got = batch.det_batch(a)
        want = [det_oracle(fam.matrix_at(i)) for i in range(500)]
        assert list(got) == want

    def test_det_batch_int64(self):
        rng = np.random.default_rng(5)
        a = rng.integers(-1, 2, size=(300, 5, 5))
        want = [det_oracle(m.tolist()) for m in a]
        assert batch.det_batch(a).tolist() == want

    def test_supports(self):
        assert batch.supports(FamilySpec("uh", 3, PM1), {"singular"})
        assert not batch.supports(FamilySpec("uh", 3, POPULATIONS["0pmi"]), {"singular"})
        assert not batch.supports(FamilySpec("uh", 3, PM1, subdiag=SubdiagAngle(1)), {"singular"})
        assert not batch.supports(FamilySpec("uh", 3, PM1), {"type1_stable"})

    def test_sample_digits_random_access(self):
        fam = FamilySpec("full", 3, PM1)
        whole = batch.sample_digits(fam, 11, 0, 100)
        part = batch.sample_digits(fam, 11, 37, 60)
        assert (whole[37:60] == part).all()
        assert whole.min() >= 0 and whole.max() <= 2


class TestEnumerate:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 33), (3, 7875)])
    def test_singular_counts(self, n, count):
        res = enumerate_family(EnumerationPlan(FamilySpec("full", n, PM1), {"singular"}))
        assert res.counts["singular"] == count and res.total == 3 ** (n * n)

    @settings(max_examples=15, deadline=None)
    @given(st.integers(1, 9))
    def test_partition_invariance(self, k):
        fam = FamilySpec("uh", 3, PM1)
        preds = {"singular", "nilpotent", "max_char_height_attained", "distinct_charpolys"}
        one = enumerate_family(EnumerationPlan(fam, preds))
        many = enumerate_family(EnumerationPlan(fam, preds, partitions=k))
        assert one == many

    @settings(max_examples=10, deadline=None)
    @given(st.integers(1, 7), st.integers(0, 2**32))
    def test_sampled_determinism(self, k, seed):
        fam = FamilySpec("full", 4, PM1)
        a = enumerate_family(EnumerationPlan(fam, {"singular"}, mode="sampled", samples=500, seed=seed))
        b = enumerate_family(EnumerationPlan(fam, {"singular"}, mode="sampled", samples=500, seed=seed,
                                             partitions=k))
        assert a == b

    def test_jobs_do_not_change_result(self):
        fam = FamilySpec("uh", 3, PM1)
        preds = {"singular", "distinct_charpolys"}
        assert enumerate_family(EnumerationPlan(fam, preds)) == \
            enumerate_family(EnumerationPlan(fam, preds, jobs=2))

    def test_complex_family_scalar_path(self):
        fam = FamilySpec("uh", 3, POPULATIONS["0pmi"], zero_diagonal=True)
        res = enumerate_family(EnumerationPlan(fam, {"normal", "nilpotent", "type2_stable"}))
        assert res.counts["normal"] == 4
        assert res.counts["nilpotent"] == res.counts["type2_stable"]

    def test_budget(self):
        plan = EnumerationPlan(FamilySpec("full", 3, PM1), {"singular"}, budget=1000)
        with pytest.raises(BudgetExceeded):
            enumerate_family(plan)

    def test_unknown_predicate(self):
        with pytest.raises(ValueError):
            EnumerationPlan(FamilySpec("full", 2, PM1), {"bogus"})

    def test_type1_needs_real_population(self):
        with pytest.raises(ValueError):
            EnumerationPlan(FamilySpec("uh", 2, POPULATIONS["0pmi"]), {"type1_stable"})

    def test_sampled_n1_fraction(self):
        fam = FamilySpec("full", 1, PM1)
        res = enumerate_family(EnumerationPlan(fam, {"singular"}, mode="sampled", samples=30000, seed=1))
        assert abs(res.counts["singular"] / res.total - 1 / 3) < 0.01

    def test_zero_samples(self):
        fam = FamilySpec("full", 6, PM1)
        res = enumerate_family(EnumerationPlan(fam, {"singular"}, mode="sampled", samples=0))
        assert res.total == 0 and res.counts["singular"] == 0


class TestMerge:
    counts = st.builds(
        lambda t, s, m: ClassCounts(t, {"singular": s, "max_char_height_attained": 1}, m),
        st.integers(1, 100), st.integers(0, 100), st.integers(0, 20))

    @given(counts, counts, counts)
    def test_associative(self, a, b, c):
        assert a.merge(b).merge(c) == a.merge(b.merge(c))

    def test_max_tracking(self):
        a = ClassCounts(5, {"max_char_height_attained": 2}, 9)
        b = ClassCounts(5, {"max_char_height_attained": 3}, 16)
        c = ClassCounts(5, {"max_char_height_attained": 4}, 16)
        assert a.merge(b).counts["max_char_height_attained"] == 3
        assert b.merge(a).counts["max_char_height_attained"] == 3
        assert b.merge(c).counts["max_char_height_attained"] == 7
        assert a.merge(b).max_char_height == 4

    def test_identity(self):
        a = ClassCounts(5, {"singular": 2}, None)
        assert ClassCounts().merge(a) == a


class TestNormalZeroDiagonal:
    @pytest.mark.parametrize("pop,count", [("pm1", 4), ("01", 2), ("0pmi", 4)])
    @pytest.mark.parametrize("n", [3, 4])
    def test_counts(self, pop, count, n):
        fam = FamilySpec("uh", n, POPULATIONS[pop], zero_diagonal=True)
        assert enumerate_family(EnumerationPlan(fam, {"normal"})).counts["normal"] == count

    @pytest.mark.parametrize("pop,m", [("pm1", 2), ("01", 1), ("0pmi", 2)])
    def test_n2_coalesces(self, pop, m):
        fam = FamilySpec("uh", 2, POPULATIONS[pop], zero_diagonal=True)
        assert enumerate_family(EnumerationPlan(fam, {"normal"})).counts["normal"] == m


class TestDistinct:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_toeplitz_unique(self, n):
        assert distinct_charpolys(FamilySpec("uht", n, PM1)) == 3**n

    def test_database_conservation(self):
        fam = FamilySpec("uh", 2, POPULATIONS["01"])
        db = charpoly_database(fam)
        assert len(db) <= 8
        assert sum(r["matrix_count"] for r in db) == 8
        for r in db:
            assert charpoly(fam.matrix_at(r["example_matrix_index"])) == r["poly"]

    def test_database_sorted(self):
        db = charpoly_database(FamilySpec("uht", 3, PM1))
        keys = [r["poly"].coeffs for r in db]
        assert keys == sorted(keys)
        assert all(r["matrix_count"] == 1 for r in db)

    def test_zero_family(self):
        db = charpoly_database(FamilySpec("uh", 3, Population((0,))))
        assert len(db) == 1 and db[0]["poly"].coeffs == (0, 0, 0, 1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_nilpotent_01_unique(n):
    fam = FamilySpec("uh", n, POPULATIONS["01"])
    res = enumerate_family(EnumerationPlan(fam, {"nilpotent", "type2_stable"}))
    assert res.counts == {"nilpotent": 1, "type2_stable": 1}


@pytest.mark.parametrize("n", [2, 3])
def test_zero_diagonal_never_type1(n):
    fam = FamilySpec("uh", n, PM1, zero_diagonal=True)
    assert enumerate_family(EnumerationPlan(fam, {"type1_stable"})).counts["type1_stable"] == 0
