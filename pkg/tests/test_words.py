"""
주차 단어 / 순열 대수 테스트
tests/test_words.py
"""

import pytest
from hypothesis import given, settings, strategies as st

from app.core.exceptions import AlgebraMismatchError, AugmentationError, InvalidInputError, ParseError
from app.domain.entities.linear import LinComb
from app.domain.entities.word import ParkingWord
from app.services.hopf_service import HopfService
from app.services.parsing import parse_word
from app.services.word_service import (
    enumerate_words, fqsym_pairing, inverse, m_index, parkize, shuffle_product,
    standardize, word_coproduct, word_delta_split, word_nwarrow
)


def w(text):
    return parse_word(text)


def pairs(*items):
    return LinComb.from_keys((w(left), w(right)) for left, right in items)


def words(*texts):
    return LinComb.from_keys(w(t) for t in texts)


def _parkize_by_unit_steps(letters):
    """한 번에 1 씩 줄이는 주차화"""
    letters = list(letters)
    n = len(letters)
    while True:
        deficient = next((d for d in range(1, n + 1) if sum(1 for a in letters if a <= d) < d), None)
        if deficient is None:
            return ParkingWord(tuple(letters))
        letters = [a - 1 if a > deficient else a for a in letters]


class TestParseWord:
    """단어 문법"""

    @pytest.mark.parametrize("text", ["(123)", "(1,2,3)", "( 1, 2, 3 )"])
    def test_forms(self, text):
        assert w(text).letters == (1, 2, 3)

    def test_multi_digit_letters_need_commas(self):
        assert w("(10,2)").letters == (10, 2)

    @pytest.mark.parametrize("text", ["1", "()", ""])
    def test_empty(self, text):
        assert w(text).is_empty()

    @pytest.mark.parametrize("text", ["123", "(a)", "(0)", "(1,,2)"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            w(text)

    def test_text_form(self):
        assert w("(21332)").to_text() == "(2,1,3,3,2)"


class TestNormalization:
    """표준화와 주차화"""

    @pytest.mark.parametrize("text,expected", [("(11)", True), ("(2,2)", False), ("(13)", False), ("(312)", True)])
    def test_is_parking(self, text, expected):
        assert w(text).is_parking() is expected

    def test_standardize(self):
        assert standardize(w("(3,7,5)")) == w("(132)")

    def test_standardize_rejects_repeats(self):
        with pytest.raises(InvalidInputError):
            standardize(w("(22)"))

    @pytest.mark.parametrize("text,expected", [("(22)", "(11)"), ("(1,4,4)", "(122)"), ("(332)", "(221)"), ("(2133)", "(2133)")])
    def test_parkize(self, text, expected):
        assert parkize(w(text)) == w(expected)

    @given(st.lists(st.integers(min_value=1, max_value=9), max_size=6))
    @settings(max_examples=60, deadline=None)
    def test_parkize_gives_parking_word(self, letters):
        parked = parkize(ParkingWord(tuple(letters)))
        assert parked.is_parking()
        assert parkize(parked) == parked
        if len(set(letters)) == len(letters):
            assert parked == standardize(ParkingWord(tuple(letters)))

    @pytest.mark.parametrize("letters,expected", [
        ((3 * 10**6, 1), (2, 1)),
        ((10**9,), (1,)),
        ((10**12, 5, 10**9), (3, 1, 2)),
        ((10**15, 10**15, 1), (2, 2, 1)),
    ])
    def test_parkize_huge_letters(self, letters, expected):
        assert parkize(ParkingWord(letters)) == ParkingWord(expected)

    @given(st.lists(st.integers(min_value=1, max_value=9), max_size=6))
    @settings(max_examples=60, deadline=None)
    def test_parkize_matches_unit_steps(self, letters):
        assert parkize(ParkingWord(tuple(letters))) == _parkize_by_unit_steps(letters)

    def test_inverse(self):
        assert inverse(w("(231)")) == w("(312)")

    def test_inverse_needs_permutation(self):
        with pytest.raises(InvalidInputError):
            inverse(w("(11)"))


class TestShuffle:
    """밀린 섞기 곱"""

    def test_vertices(self):
        assert shuffle_product(w("(1)"), w("(1)")) == words("(12)", "(21)")

    def test_repeated_letters(self):
        assert shuffle_product(w("(1)"), w("(11)")) == words("(122)", "(212)", "(221)")

    def test_term_count(self):
        result = shuffle_product(w("(12)"), w("(112)"))
        assert sum(coeff for _, coeff in result) == 10

    def test_non_parking_rejected(self):
        with pytest.raises(InvalidInputError):
            shuffle_product(w("(2)"), w("(1)"))

    def test_permutations_exact(self):
        assert shuffle_product(w("(123)"), w("(21)")) == words(
            "(54123)", "(51423)", "(51243)", "(51234)", "(15423)",
            "(15243)", "(15234)", "(12543)", "(12534)", "(12354)",
        )

    def test_parking_words_exact(self):
        assert shuffle_product(w("(121)"), w("(11)")) == words(
            "(44121)", "(41421)", "(41241)", "(41214)", "(14421)",
            "(14241)", "(14214)", "(12441)", "(12414)", "(12144)",
        )

    def test_algebra_products(self, fqsym, pqsym):
        left = HopfService(fqsym).product(LinComb.monomial(w("(123)")), LinComb.monomial(w("(21)")))
        assert left == shuffle_product(w("(123)"), w("(21)"))
        right = HopfService(pqsym).product(LinComb.monomial(w("(121)")), LinComb.monomial(w("(11)")))
        assert right == shuffle_product(w("(121)"), w("(11)"))


class TestWordCoproduct:
    """자르기 쌍대곱"""

    def test_permutation(self):
        expected = pairs(
            ("()", "(41325)"), ("(1)", "(1324)"), ("(21)", "(213)"),
            ("(312)", "(12)"), ("(4132)", "(1)"), ("(41325)", "()"),
        )
        assert word_coproduct(w("(41325)"), normalize=False) == expected
        assert word_coproduct(w("(41325)")) == expected

    def test_repeated(self):
        assert word_coproduct(w("(11)")) == pairs(("()", "(11)"), ("(1)", "(1)"), ("(11)", "()"))

    def test_co_opposite_flips(self, pqsym, pqsym_cop):
        delta = pqsym.coproduct_basis(w("(2,1,2)"))
        flipped = pqsym_cop.coproduct_basis(w("(2,1,2)"))
        assert flipped == delta.map_keys(lambda k: (k[1], k[0]))


class TestSplit:
    """PQSym^cop 분할"""

    @pytest.mark.parametrize("text,expected", [("(1)", 1), ("(21332)", 4), ("(3132)", 3), ("(11)", 2)])
    def test_m_index(self, text, expected):
        assert m_index(w(text)) == expected

    def test_m_index_empty(self):
        with pytest.raises(AugmentationError):
            m_index(w("()"))

    def test_worked_prec(self):
        assert word_delta_split(w("(21332)"), "prec") == pairs(
            ("(1332)", "(1)"), ("(221)", "(21)"), ("(21)", "(213)")
        )

    def test_worked_succ(self):
        assert word_delta_split(w("(21332)"), "succ") == pairs(("(1)", "(2133)"))

    def test_plain_algebra_has_no_split(self, pqsym):
        with pytest.raises(AlgebraMismatchError):
            pqsym.split_basis(w("(12)"), "prec")

    def test_split_sum(self, pqsym_cop):
        service = HopfService(pqsym_cop)
        x = LinComb.monomial(w("(2,1,3,1)"))
        assert service.delta_split(x, "prec") + service.delta_split(x, "succ") == service.reduced_coproduct(x)


class TestNwarrow:
    """↖"""

    def test_worked(self):
        assert word_nwarrow(w("(21)"), w("(1)")) == words("(213)", "(231)")

    def test_vertices(self):
        assert word_nwarrow(w("(1)"), w("(1)")) == words("(12)")

    def test_repeated_maximum(self):
        assert word_nwarrow(w("(21331)"), w("(12)")) == words("(2133167)", "(2133617)", "(2133671)")

    def test_empty_rejected(self):
        with pytest.raises(AugmentationError):
            word_nwarrow(w("()"), w("(1)"))


class TestEnumerateWords:
    """기저 열거"""

    @pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 3), (3, 16), (4, 125)])
    def test_parking_counts(self, n, count):
        assert len(enumerate_words("parking", n)) == count

    def test_permutations(self):
        assert [p.to_text() for p in enumerate_words("permutation", 2)] == ["(1,2)", "(2,1)"]
        assert len(enumerate_words("permutation", 4)) == 24

    def test_unknown_kind(self):
        with pytest.raises(InvalidInputError):
            enumerate_words("compositions", 2)


class TestWordAlgebras:
    """FQSym / PQSym 과 co-opposite"""

    def test_names(self, pqsym, pqsym_cop, fqsym, fqsym_cop):
        assert [a.name for a in (pqsym, pqsym_cop, fqsym, fqsym_cop)] == ["pqsym", "pqsym-cop", "fqsym", "fqsym-cop"]

    def test_fqsym_rejects_parking_word(self, fqsym):
        with pytest.raises(InvalidInputError):
            fqsym.parse_key("(11)")

    def test_fqsym_pairing(self):
        assert fqsym_pairing(w("(231)"), w("(312)")) == 1
        assert fqsym_pairing(w("(231)"), w("(231)")) == 0

    @pytest.mark.parametrize("fixture", ["pqsym", "pqsym_cop", "fqsym", "fqsym_cop"])
    def test_hopf_laws(self, fixture, request):
        algebra = request.getfixturevalue(fixture)
        reports = HopfService(algebra).check_hopf(3)
        assert all(r.passed for r in reports), [r.failures for r in reports]
        assert len(reports) == (4 if algebra.cop else 3)

    def test_permutations_form_a_subalgebra(self, pqsym, fqsym):
        assert HopfService(pqsym).check_closure(3, fqsym.accepts).failures
        assert HopfService(fqsym).check_closure(3, fqsym.accepts).passed
