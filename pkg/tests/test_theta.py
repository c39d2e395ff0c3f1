"""
Θ 사상과 순서 숲 짝짓기 테스트
tests/test_theta.py
"""

from itertools import permutations
from math import factorial

import pytest

from app.core.exceptions import InvalidInputError
from app.domain.entities.linear import LinComb
from app.domain.entities.word import ParkingWord
from app.repositories.basis_repository import BasisRepository
from app.services import linalg
from app.services.dupdend_service import verify_dupdend_morphism
from app.services.forest_service import forest_factorial
from app.services.parsing import parse_ordered, parse_word
from app.services.theta_service import ThetaService, pair_set, pairing, s_set, theta_basis


def words(*texts):
    return LinComb.from_keys(parse_word(t) for t in texts)


@pytest.fixture
def theta(repository) -> ThetaService:
    return ThetaService(repository)


class TestTheta:
    """Θ: H_o → FQSym"""

    def test_cherry(self):
        assert theta_basis(parse_ordered("1(2,3)")) == words("(123)", "(132)")

    def test_vertices(self):
        assert theta_basis(parse_ordered("1 2")) == words("(12)", "(21)")

    def test_unit(self):
        assert theta_basis(parse_ordered("∅")) == words("()")

    @pytest.mark.parametrize("text,images", [
        ("1", ["(1)"]),
        ("1 2", ["(12)", "(21)"]),
        ("1(2)", ["(12)"]),
        ("2(1)", ["(21)"]),
    ])
    def test_small_forests(self, text, images):
        assert theta_basis(parse_ordered(text)) == words(*images)

    @pytest.mark.parametrize("a,b,c", list(permutations((1, 2, 3))))
    @pytest.mark.parametrize("shape,images", [
        ("{a} {b} {c}", ["abc", "acb", "bac", "bca", "cab", "cba"]),
        ("{a} {b}({c})", ["abc", "bac", "bca"]),
        ("{a}({b},{c})", ["abc", "acb"]),
        ("{a}({b}({c}))", ["abc"]),
    ])
    def test_degree_three_forests(self, shape, images, a, b, c):
        labels = {"a": a, "b": b, "c": c}
        forest = parse_ordered(shape.format(**labels))
        expected = ["(" + "".join(str(labels[x]) for x in image) + ")" for image in images]
        assert theta_basis(forest) == words(*expected)

    def test_degree_two_relation(self, ordered, element, theta):
        assert theta.theta(element(ordered, "1(2) + 2(1) - 1 2")).is_zero()

    def test_linear_extension(self, ordered, element, theta):
        assert theta.theta(element(ordered, "2*2(1) + 1(2)")) == words("(12)", "(21)", "(21)")

    def test_rejects_words(self, theta):
        with pytest.raises(InvalidInputError):
            theta.theta(LinComb.monomial(ParkingWord((1,))))

    @pytest.mark.parametrize("text", ["1(2,3)", "3(1,2)", "2(1) 3", "1(2(3))", "1 2 3"])
    def test_s_set_size(self, text):
        forest = parse_ordered(text)
        assert len(s_set(forest)) == factorial(forest.degree) // forest_factorial(forest)

    def test_matrix_shape(self, theta):
        m = theta.theta_matrix(3)
        assert len(m) == 6
        assert len(m[0]) == 16

    def test_kernel(self, theta):
        kernel = theta.theta_kernel_basis(2)
        assert len(kernel) == 1
        assert theta.theta(kernel[0]).is_zero()

    def test_graded_map(self, theta):
        graded = theta.theta_map(3, heap_only=True)
        assert graded.degrees() == [1, 2, 3]
        assert linalg.rank(graded.matrix(3)) == 6


class TestPairing:
    """⟨F, G⟩"""

    def test_degree_two_matrix(self, theta):
        assert theta.pairing_matrix(2) == [[2, 1, 1], [1, 1, 0], [1, 0, 1]]

    @pytest.mark.parametrize("left,right,expected", [
        ("1(2)", "1(2)", 1),
        ("1(2)", "2(1)", 0),
        ("1 2 3", "1(2,3)", 2),
        ("1 2", "1(2,3)", 0),
    ])
    def test_values(self, left, right, expected):
        assert pairing(parse_ordered(left), parse_ordered(right)) == expected

    def test_pair_set_words(self):
        assert pair_set(parse_ordered("1 2"), parse_ordered("1(2)")) == [parse_word("(12)")]

    def test_bilinear(self, ordered, element, theta):
        x = element(ordered, "1 2 - 1(2)")
        assert theta.pairing_of(x, element(ordered, "2(1)")) == 1
        assert theta.pairing_of(x, element(ordered, "1(2)")) == 0

    @pytest.mark.parametrize("n,dim", [(1, 0), (2, 1), (3, 10)])
    def test_kernel_dimension(self, theta, n, dim):
        assert len(theta.pairing_kernel_basis(n)) == dim

    def test_rank_is_factorial(self, theta):
        assert linalg.rank(theta.pairing_matrix(3)) == 6

    def test_parallel_rows(self):
        serial = ThetaService(BasisRepository()).pairing_matrix(3, jobs=1)
        parallel = ThetaService(BasisRepository()).pairing_matrix(3, jobs=4)
        assert serial == parallel

    def test_degree_zero_rejected(self, theta):
        with pytest.raises(InvalidInputError):
            theta.pairing_matrix(0)


class TestIdentities:
    """Θ 와 짝짓기의 항등식 모음"""

    def test_all_pass(self, theta):
        reports = theta.check_all(3)
        assert all(r.passed for r in reports), [(r.law, r.failures) for r in reports]
        assert {r.law for r in reports} >= {
            "theta.product", "theta.coproduct", "theta.product.cop", "theta.coproduct.cop",
            "theta.restriction-iso", "pairing.lemma", "pairing.isometry", "pairing.kernel",
            "pairing.factorial", "theta.orbit", "pairing.symmetry", "pairing.hopf",
        }

    @pytest.mark.slow
    def test_kernel_coincidence_degree_four(self, theta):
        assert theta.check_kernel_coincidence(4).passed

    @pytest.mark.slow
    def test_morphisms_degree_four(self, theta, fqsym_cop):
        reports = theta.check_morphism(4) + theta.check_morphism(4, cop_view=True)
        reports += verify_dupdend_morphism(theta.theta_map(4), theta.ordered, fqsym_cop, 4)
        assert len(reports) == 8
        assert all(r.passed for r in reports), [(r.law, r.failures[:3]) for r in reports if not r.passed]
