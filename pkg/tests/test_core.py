import pickle

import pytest
from hypothesis import given, strategies as st

from bohemian.core import (
    I,
    POPULATIONS,
    FamilySpec,
    GaussInt,
    Poly,
    Population,
    SubdiagAngle,
    UHMatrix,
    UHTMatrix,
    exact_div,
    matrix_from_json,
    matrix_height,
    matrix_to_json,
    normalize,
    parse_scalar,
    poly_from_json,
    poly_height,
    poly_to_json,
    scalar_from_json,
    scalar_to_json,
    sqmag,
    to_dense,
)

small = st.integers(-50, 50)
gauss = st.builds(GaussInt, small, small)
scalar = st.one_of(small, gauss)


class TestGaussInt:
    def test_int_equivalence(self):
        assert GaussInt(3, 0) == 3
        assert hash(GaussInt(3, 0)) == hash(3)
        assert normalize(GaussInt(-2, 0)) == -2 and isinstance(normalize(GaussInt(-2)), int)

    def test_i_squared(self):
        assert I * I == -1
        assert I ** 4 == 1

    def test_str(self):
        assert str(GaussInt(2, -5)) == "2-5i"
        assert str(GaussInt(0, -1)) == "-i"
        assert str(GaussInt(0, 3)) == "3i"

    def test_pickle(self):
        g = GaussInt(4, -7)
        assert pickle.loads(pickle.dumps(g)) == g

    @given(gauss, gauss, gauss)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a - a == 0

    @given(gauss, gauss.filter(bool))
    def test_euclidean_division(self, a, b):
        q, r = divmod(a, b)
        assert q * b + r == a
        assert sqmag(r) < sqmag(b)

    @given(scalar, scalar.filter(bool))
    def test_exact_div(self, a, b):
        assert exact_div(a * b, b) == a

    def test_exact_div_rejects_remainder(self):
        with pytest.raises(ArithmeticError):
            exact_div(3, 2)

    def test_conjugate_norm(self):
        g = GaussInt(3, 4)
        assert g * g.conjugate() == 25 == g.norm()


class TestParsing:
    @pytest.mark.parametrize("text,value", [
        ("3", 3), ("-1", -1), ("i", I), ("-i", -I), ("2-5i", GaussInt(2, -5)), ("3i", GaussInt(0, 3)),
    ])
    def test_parse_scalar(self, text, value):
        assert parse_scalar(text) == value

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_scalar("1+")

    @given(scalar)
    def test_json_roundtrip(self, x):
        assert scalar_from_json(scalar_to_json(x)) == x

    def test_big_int_as_string(self):
        big = 2**60
        assert scalar_to_json(big) == str(big)
        assert scalar_from_json(str(big)) == big

    def test_population_parse(self):
        p = Population.parse("0,i,-i")
        assert p.elements == (0, I, -I)
        assert not p.is_real
        assert POPULATIONS["pm1"].is_real

    def test_population_rejects_duplicates(self):
        with pytest.raises(ValueError):
            Population.parse("1,1")


class TestMatrices:
    def test_uh_indexing(self):
        m = UHMatrix(3, (1, 2, 3, 4, 5, 6), (SubdiagAngle(0), SubdiagAngle(2)))
        assert m.dense() == [[1, 2, 3], [1, 4, 5], [0, -1, 6]]

    def test_uht_expand(self):
        m = UHTMatrix(3, (-1, 0, 1), SubdiagAngle(1))
        assert m.dense() == [[-1, 0, 1], [I, -1, 0], [0, I, -1]]
        assert m.expand().dense() == m.dense()

    def test_negation(self):
        m = UHTMatrix(2, (1, -1))
        assert (-m).dense() == [[-1, 1], [-1, -1]]

    def test_from_dense_roundtrip(self):
        rows = [[1, 0, I], [-I, 2, 0], [0, 1, 1]]
        assert UHMatrix.from_dense(rows).dense() == rows

    def test_from_dense_rejects_non_hessenberg(self):
        with pytest.raises(ValueError):
            UHMatrix.from_dense([[0, 0, 0], [1, 0, 0], [1, 1, 0]])

    def test_matrix_height(self):
        assert matrix_height([[0, GaussInt(1, 1)], [1, 0]]).sq == 2
        assert matrix_height(UHTMatrix(2, (0, 0))).value == 1

    @pytest.mark.parametrize("m", [
        UHMatrix(2, (1, "i", -1), (SubdiagAngle(3),)),
        UHTMatrix(3, (0, 1, -1), SubdiagAngle(2)),
        [[1, 2], [3, -I]],
    ])
    def test_json_roundtrip(self, m):
        back = matrix_from_json(matrix_to_json(m))
        assert to_dense(back) == to_dense(m)

    @pytest.mark.parametrize("obj", [
        {"n": 0, "shape": "uh", "upper": []},
        {"n": 2, "shape": "uh", "upper": [1, 2]},
        {"n": 2, "shape": "full", "entries": [1, 2, 3]},
        {"n": 2, "shape": "blob"},
        [1, 2],
    ])
    def test_json_malformed(self, obj):
        with pytest.raises((ValueError, KeyError)):
            matrix_from_json(obj)


class TestPoly:
    def test_height_and_mu(self):
        h = poly_height(Poly((8, 12, 9, 4, 1)))
        assert h.value == 12 and h.indices == (1,)

    def test_height_ties(self):
        assert poly_height((2, -2, 1)).indices == (0, 1)

    def test_height_gaussian(self):
        h = poly_height((GaussInt(1, 1), 1))
        assert h.sq == 2 and not h.is_integer

    def test_empty(self):
        with pytest.raises(ValueError):
            poly_height(())

    def test_eval_and_str(self):
        p = Poly((2, 2, 1))
        assert p(1) == 5
        assert p.is_monic and p.degree == 2
        assert str(p) == "z^2 + 2*z + 2"

    def test_json(self):
        p = Poly((GaussInt(0, 1), -3, 1))
        assert poly_from_json(poly_to_json(p)) == p


class TestFamily:
    def test_cardinality(self):
        assert FamilySpec("full", 2, POPULATIONS["pm1"]).cardinality == 81
        assert FamilySpec("uh", 3, POPULATIONS["pm1"]).cardinality == 3**6
        assert FamilySpec("uh", 4, POPULATIONS["pm1"], zero_diagonal=True).cardinality == 3**6
        assert FamilySpec("uht", 5, POPULATIONS["01"]).cardinality == 32

    def test_indexing_bijection(self):
        fam = FamilySpec("uh", 3, POPULATIONS["pm1"], subdiag=SubdiagAngle(1))
        seen = {tuple(map(tuple, m.dense())) for m in fam}
        assert len(seen) == fam.cardinality

    def test_digits_least_significant_first(self):
        fam = FamilySpec("full", 2, POPULATIONS["pm1"])
        assert fam.digits(1) == [1, 0, 0, 0]
        assert fam.matrix_at(1) == [[0, -1], [-1, -1]]

    def test_zero_diagonal_requires_zero(self):
        with pytest.raises(ValueError):
            FamilySpec("uh", 3, POPULATIONS["pm1_nozero"], zero_diagonal=True)

    def test_bad_index(self):
        with pytest.raises(IndexError):
            FamilySpec("uht", 2, POPULATIONS["01"]).matrix_at(4)
