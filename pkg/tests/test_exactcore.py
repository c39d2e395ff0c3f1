"""
정확 산술 / 선형대수 / 멱급수 테스트
tests/test_exactcore.py
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from app.core.exceptions import InvalidInputError, SingularMatrixError
from app.domain.entities.linear import LinComb, format_scalar, tensor
from app.domain.entities.series import PowerSeries
from app.services import linalg
from app.services.series_service import named_series, parse_series, series_from_alphabet, series_to_alphabet

PAIRING_2 = [[2, 1, 1], [1, 1, 0], [1, 0, 1]]

small_ints = st.integers(min_value=-4, max_value=4)
matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda cols: st.lists(st.lists(small_ints, min_size=cols, max_size=cols), min_size=0, max_size=4).map(
        lambda rows: (rows, cols)
    )
)


def _proportional(u, v) -> bool:
    return linalg.rank([u, v]) == 1


class TestScalar:
    """유리수 직렬화"""

    def test_integer_has_no_denominator(self):
        assert format_scalar(Fraction(6, 3)) == "2"

    def test_reduced_fraction(self):
        assert format_scalar(Fraction(4, -6)) == "-2/3"

    def test_zero(self):
        assert format_scalar(Fraction(0)) == "0"


class TestLinComb:
    """선형결합 정규화"""

    def test_no_stored_zero(self):
        x = LinComb({"a": 1, "b": 0})
        assert x.keys() == ["a"]
        assert (x - x).is_zero()

    def test_from_pairs_accumulates(self):
        x = LinComb.from_pairs([("a", 1), ("b", 2), ("a", -1)])
        assert x == LinComb.monomial("b", 2)

    def test_text_is_sorted_and_signed(self):
        x = LinComb({"b": -1, "a": Fraction(1, 2), "c": 3})
        assert x.to_text() == "1/2*a - b + 3*c"

    def test_zero_text(self):
        assert LinComb.zero().to_text() == "0"

    def test_equal_inputs_serialize_identically(self):
        left = LinComb({"x": 1, "y": 2}) + LinComb({"z": 1})
        right = LinComb({"z": 1, "y": 2}) + LinComb({"x": 1})
        assert left.to_text() == right.to_text()
        assert left.to_json_terms() == right.to_json_terms()

    def test_tensor_json_terms(self):
        t = tensor(LinComb.monomial("a"), LinComb({"b": 1, "c": -2}))
        assert t.to_json_terms() == [
            {"coeff": "1", "left": "a", "right": "b"},
            {"coeff": "-2", "left": "a", "right": "c"},
        ]


class TestRank:
    """정확 계수"""

    def test_identity(self):
        assert linalg.rank(linalg.identity(3)) == 3

    def test_degree_two_pairing_matrix(self):
        assert linalg.rank(PAIRING_2) == 2

    def test_zero_matrix(self):
        assert linalg.rank([[0] * 5, [0] * 5]) == 0

    def test_empty_matrix(self):
        assert linalg.rank([]) == 0

    def test_ragged_rows_rejected(self):
        with pytest.raises(InvalidInputError):
            linalg.rank([[1, 2], [3]])

    def test_echelon_pivot_order(self):
        rows, pivots = linalg.echelon(linalg.sparse_rows([[2, 4, 6], [3, 6, 10], [1, 3, 4]]), 3)
        assert pivots == [0, 1, 2]
        assert rows == [{0: 1, 1: 2, 2: 3}, {1: 1, 2: 1}, {2: 1}]

    def test_echelon_rows_divided_by_content(self):
        rows, _ = linalg.echelon(linalg.sparse_rows([[1, 1, 0], [1, 3, 4]]), 3)
        assert rows == [{0: 1, 1: 1}, {1: 1, 2: 2}]
        rows, _ = linalg.echelon(linalg.sparse_rows([[Fraction(1, 2), Fraction(1, 3)]]), 2)
        assert rows == [{0: 3, 1: 2}]


class TestKernel:
    """핵 기저"""

    def test_identity_has_trivial_kernel(self):
        assert linalg.kernel_basis(linalg.identity(2)) == []

    def test_degree_two_pairing_kernel(self):
        kernel = linalg.kernel_basis(PAIRING_2)
        assert len(kernel) == 1
        assert _proportional(kernel[0], [-1, 1, 1])

    def test_row_vector(self):
        kernel = linalg.kernel_basis([[1, 1]])
        assert len(kernel) == 1
        assert _proportional(kernel[0], [1, -1])

    def test_deterministic(self):
        assert linalg.kernel_basis(PAIRING_2) == linalg.kernel_basis(PAIRING_2)

    @given(matrices)
    @settings(max_examples=60, deadline=None)
    def test_rank_nullity(self, data):
        rows, cols = data
        kernel = linalg.kernel_basis(rows, ncols=cols)
        assert linalg.rank(rows) + len(kernel) == cols
        for vector in kernel:
            for row in rows:
                assert sum(Fraction(a) * b for a, b in zip(row, vector)) == 0


class TestInverse:
    """역행렬"""

    def test_inverse_roundtrip(self):
        m = [[2, 1], [1, 1]]
        inv = linalg.inverse(m)
        assert linalg.matmul(m, inv) == linalg.identity(2)

    def test_singular(self):
        with pytest.raises(SingularMatrixError):
            linalg.inverse(PAIRING_2)


class TestSeries:
    """포앵카레-힐베르트 급수 변환"""

    def test_catalan_from_x(self):
        result = series_from_alphabet(PowerSeries.variable(4), 4)
        assert result.to_json() == ["1", "1", "2", "5", "14"]

    def test_zero_alphabet(self):
        result = series_from_alphabet(PowerSeries.constant(0, 3), 3)
        assert result.to_json() == ["1", "0", "0", "0"]

    def test_ordered_alphabet_gives_cayley_numbers(self):
        result = series_from_alphabet(parse_series("0,1,1,7,66", 4), 4)
        assert result.to_json() == ["1", "1", "3", "16", "125"]

    def test_heap_ordered_alphabet(self):
        result = series_to_alphabet(named_series("heap-ordered", 6), 6)
        assert result.to_json()[1:] == ["1", "0", "1", "6", "39", "284"]

    def test_ordered_alphabet(self):
        result = series_to_alphabet(named_series("ordered", 6), 6)
        assert result.to_json()[1:] == ["1", "1", "7", "66", "786", "11278"]

    def test_constant_one(self):
        assert series_to_alphabet(PowerSeries.constant(1, 3), 3).to_json() == ["0", "0", "0", "0"]

    def test_nonzero_constant_rejected(self):
        with pytest.raises(InvalidInputError):
            series_from_alphabet(PowerSeries.of([1, 1], 3), 3)

    def test_bad_constant_rejected(self):
        with pytest.raises(InvalidInputError):
            series_to_alphabet(PowerSeries.of([2, 1], 3), 3)

    @given(st.lists(st.integers(min_value=-3, max_value=5), min_size=1, max_size=6))
    @settings(max_examples=50, deadline=None)
    def test_round_trip(self, tail):
        order = len(tail)
        f = PowerSeries.of([0] + tail, order)
        assert series_to_alphabet(series_from_alphabet(f, order), order) == f
