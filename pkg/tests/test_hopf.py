"""
Hopf 구조 테스트 (쌍대곱, 대척사상, 분할, 쌍대 덴드리폼 곱)
tests/test_hopf.py
"""

import pytest
from hypothesis import given, settings, strategies as st

from app.core.exceptions import AlgebraMismatchError, AugmentationError, InvalidInputError
from app.domain.entities.element import HopfElement
from app.domain.entities.forest import OrderedForest
from app.domain.entities.linear import LinComb
from app.services.forest_algebras import OrderedAlgebra
from app.services.forest_service import enumerate_forests
from app.services.hopf_service import (
    DualDendriformService, HopfService, dual_dendriform, dual_product
)
from app.services.parsing import parse_planar


def _tensor(algebra, *pairs):
    """(계수, 왼쪽, 오른쪽) 텍스트로 텐서 원소 생성"""
    return LinComb.from_pairs(
        ((algebra.parse_key(left), algebra.parse_key(right)), coeff) for coeff, left, right in pairs
    )


def _z(text):
    return LinComb.from_pairs(
        (parse_planar(part.split("*")[-1]), int(part.split("*")[0]) if "*" in part else 1)
        for part in text.split(" + ")
    )


class TestCoproduct:
    """Δ"""

    def test_ordered_cherry(self, ordered, element):
        service = HopfService(ordered)
        expected = _tensor(
            ordered, (1, "1(2,3)", "∅"), (1, "∅", "1(2,3)"), (2, "1", "1(2)"), (1, "1 2", "1")
        )
        assert service.coproduct(element(ordered, "1(2,3)")) == expected

    def test_ordered_cherry_text(self, ordered, element):
        text = HopfService(ordered).coproduct(element(ordered, "1(2,3)")).to_text()
        assert text == "2*1 (x) 1(2) + 1 2 (x) 1 + 1(2,3) (x) ∅ + ∅ (x) 1(2,3)"

    def test_reduced_ladder(self, planar, element):
        reduced = HopfService(planar).reduced_coproduct(element(planar, "[[]]"))
        assert reduced == _tensor(planar, (1, "[]", "[]"))

    def test_unit(self, planar, element):
        assert HopfService(planar).coproduct(element(planar, "∅")) == _tensor(planar, (1, "∅", "∅"))

    def test_counit(self, ordered, element):
        service = HopfService(ordered)
        assert service.counit(element(ordered, "3*∅ + 1(2)")) == 3

    @given(st.integers(min_value=1, max_value=4).flatmap(
        lambda n: st.sampled_from(enumerate_forests("ordered", n))
    ))
    @settings(max_examples=30, deadline=None)
    def test_counit_terms(self, forest):
        delta = OrderedAlgebra().coproduct_basis(forest)
        assert delta.coefficient((forest, OrderedForest())) == 1
        assert delta.coefficient((OrderedForest(), forest)) == 1

    def test_tagged_element_mismatch(self, ordered, element):
        service = HopfService(ordered)
        foreign = HopfElement("hp", element(ordered, "1"))
        with pytest.raises(AlgebraMismatchError):
            service.coproduct(foreign)

    def test_parse_tags_element(self, ordered):
        parsed = HopfService(ordered).parse("1(2) - 2(1)")
        assert parsed.algebra == "ho"
        assert parsed.to_text() == "1(2) - 2(1)"


class TestProduct:
    """곱"""

    def test_ordered_shift(self, ordered, element):
        product = HopfService(ordered).product(element(ordered, "1(2)"), element(ordered, "1"))
        assert product == element(ordered, "1(2) 3")

    def test_unit_is_neutral(self, ordered, element):
        service = HopfService(ordered)
        x = element(ordered, "2(1) + 1 2")
        assert service.product(element(ordered, "∅"), x) == x
        assert service.product(x, element(ordered, "∅")) == x

    def test_connes_kreimer_commutative(self, ck, element):
        service = HopfService(ck)
        x, y = element(ck, "[[]]"), element(ck, "[] [[][]]")
        assert service.product(x, y) == service.product(y, x)

    def test_planar_not_commutative(self, planar, element):
        service = HopfService(planar)
        x, y = element(planar, "[[]]"), element(planar, "[]")
        assert service.product(x, y) != service.product(y, x)


class TestAntipode:
    """S"""

    def test_vertex(self, ordered, element):
        assert HopfService(ordered).antipode(element(ordered, "1")) == element(ordered, "-1")

    def test_unit(self, ordered, element):
        assert HopfService(ordered).antipode(element(ordered, "∅")) == element(ordered, "∅")

    def test_pair(self, ordered, element):
        assert HopfService(ordered).antipode(element(ordered, "1(2)")) == element(ordered, "1 2 - 1(2)")

    def test_connes_kreimer_ladder(self, ck, element):
        assert HopfService(ck).antipode(element(ck, "[[]]")) == element(ck, "[] [] - [[]]")


class TestSplit:
    """δ≺ / δ≻"""

    def test_ordered_cherry(self, ordered, element):
        service = HopfService(ordered)
        x = element(ordered, "1(2,3)")
        assert service.delta_split(x, "prec") == _tensor(ordered, (1, "1", "1(2)"), (1, "1 2", "1"))
        assert service.delta_split(x, "succ") == _tensor(ordered, (1, "1", "1(2)"))

    def test_planar_ladder(self, planar, element):
        service = HopfService(planar)
        x = element(planar, "[[]]")
        assert service.delta_split(x, "prec") == _tensor(planar, (1, "[]", "[]"))
        assert service.delta_split(x, "succ").is_zero()

    def test_vertex_splits_vanish(self, planar, element):
        service = HopfService(planar)
        assert service.delta_split(element(planar, "[]"), "prec").is_zero()
        assert service.delta_split(element(planar, "[]"), "succ").is_zero()

    def test_sum_is_reduced_coproduct(self, ordered, element):
        service = HopfService(ordered)
        x = element(ordered, "2(1,3) + 3*1(2) 3")
        assert service.delta_split(x, "prec") + service.delta_split(x, "succ") == service.reduced_coproduct(x)

    def test_unit_rejected(self, ordered, element):
        with pytest.raises(AugmentationError):
            HopfService(ordered).delta_split(element(ordered, "∅ + 1"), "prec")

    def test_connes_kreimer_has_no_split(self, ck, element):
        with pytest.raises(AlgebraMismatchError):
            HopfService(ck).delta_split(element(ck, "[[]]"), "prec")

    def test_unknown_side(self, ordered, element):
        with pytest.raises(InvalidInputError):
            HopfService(ordered).delta_split(element(ordered, "1"), "left")


class TestNwarrow:
    """↖"""

    def test_planar(self, planar, element):
        result = HopfService(planar).nwarrow(element(planar, "[] []"), element(planar, "[]"))
        assert result == element(planar, "[] [[]]")

    def test_ordered(self, ordered, element):
        result = HopfService(ordered).nwarrow(element(ordered, "2(1)"), element(ordered, "1 2"))
        assert result == element(ordered, "2(1,3,4)")

    def test_connes_kreimer_rejected(self, ck, element):
        with pytest.raises(AlgebraMismatchError):
            HopfService(ck).nwarrow(element(ck, "[]"), element(ck, "[]"))


class TestHopfLaws:
    """Hopf 법칙 모음"""

    @pytest.mark.parametrize("fixture", ["ck", "planar", "ordered", "heap"])
    def test_suite_passes(self, fixture, request):
        algebra = request.getfixturevalue(fixture)
        reports = HopfService(algebra).check_hopf(3)
        assert reports
        assert all(r.passed for r in reports), [r.failures for r in reports]
        assert all(r.checked > 0 for r in reports)

    def test_split_sum_included_when_split_exists(self, ordered, ck):
        assert [r.law for r in HopfService(ordered).check_hopf(2)][-1] == "hopf.split-sum"
        assert "hopf.split-sum" not in [r.law for r in HopfService(ck).check_hopf(2)]

    def test_parallel_matches_serial(self, ordered):
        service = HopfService(ordered)
        assert service.check_compatibility(3, jobs=4) == service.check_compatibility(3, jobs=1)

    def test_heap_ordered_closure(self, heap):
        assert HopfService(heap).check_closure(4, heap.accepts).passed

    def test_reversal(self, ordered):
        assert HopfService(ordered).check_reversal(3).passed

    @pytest.mark.parametrize("fixture", [
        "ck",
        "planar",
        "heap",
        "fqsym",
        pytest.param("ordered", marks=pytest.mark.slow),
        pytest.param("pqsym", marks=pytest.mark.slow),
    ])
    def test_degree_four(self, fixture, request):
        algebra = request.getfixturevalue(fixture)
        reports = HopfService(algebra).check_hopf(4)
        assert {"hopf.coassociativity", "hopf.compatibility", "hopf.antipode"} <= {r.law for r in reports}
        assert all(r.degree == 4 for r in reports)
        assert all(r.passed for r in reports), [(r.law, r.failures[:3]) for r in reports if not r.passed]


class TestDualDendriform:
    """Z 기저의 쌍대 곱"""

    def test_product_of_vertices(self):
        assert dual_product(_z("[]"), _z("[]")) == _z("2*[] [] + [[]]")

    def test_root_rule(self):
        assert dual_dendriform("prec", _z("[]"), _z("[[]]")) == _z("[[]] []")
        assert dual_dendriform("succ", _z("[]"), _z("[[]]")) == _z("[] [[]] + 2*[[][]] + [[[]]]")

    def test_sides_sum_to_product(self):
        x, y = _z("[] []"), _z("[[]] + [] []")
        for rule in ("root", "leaf"):
            assert dual_dendriform("prec", x, y, rule) + dual_dendriform("succ", x, y, rule) == dual_product(x, y)

    def test_unknown_rule(self):
        with pytest.raises(InvalidInputError):
            dual_dendriform("prec", _z("[]"), _z("[]"), "middle")

    def test_duality_with_coproduct(self, planar):
        reports = DualDendriformService(planar).check_duality(4, rule="leaf")
        assert [r.law for r in reports] == ["dual.product", "dual.prec", "dual.succ"]
        assert all(r.passed for r in reports)

    def test_root_rule_is_dendriform(self, planar):
        reports = DualDendriformService(planar).check_dendriform(4, rule="root")
        assert len(reports) == 3
        assert all(r.passed for r in reports), [r.failures for r in reports]
