"""
Hopf service - product, coproduct, counit, antipode, splits and law checks
app/services/hopf_service.py
"""
from fractions import Fraction
from typing import Any, Callable, Hashable, List, Literal, Optional, Tuple, Union

from app.core.exceptions import AugmentationError, InvalidInputError
from app.core.logging import logger
from app.domain.entities.element import HopfElement
from app.domain.entities.forest import PlanarForest
from app.domain.entities.linear import LinComb, tensor, tensor_map
from app.domain.entities.report import LawCheck
from app.domain.interfaces.algebra import SIDES, HopfAlgebraProtocol, Side
from app.domain.interfaces.basis_repository import BasisRepositoryProtocol
from app.repositories.basis_repository import basis_repository
from app.services.forest_service import graftings, reverse_labels
from app.services.law_runner import basis_tuples, check_law
from app.services.parsing import parse_lincomb

Operand = Union[HopfElement, LinComb]
DualRule = Literal["root", "leaf"]
DUAL_RULES = ("root", "leaf")


class HopfService:
    """
    기저 수준 구조 사상의 선형 확장과 Hopf 법칙 검증

    Args:
        algebra: HopfAlgebraProtocol 구현 (숲 또는 단어 대수)
    """

    def __init__(self, algebra: HopfAlgebraProtocol, repository: Optional[BasisRepositoryProtocol] = None):
        self.algebra = algebra
        self.repo = repository or basis_repository

    # ------------------------------------------------------------------
    # 원소
    # ------------------------------------------------------------------

    def parse(self, text: str) -> HopfElement:
        return HopfElement(self.algebra.name, parse_lincomb(text, self.algebra.parse_key))

    def _value(self, x: Operand) -> LinComb:
        return x.require(self.algebra.name) if isinstance(x, HopfElement) else x

    def is_unit(self, key: Hashable) -> bool:
        return key == self.algebra.unit()

    def require_augmentation(self, x: Operand) -> LinComb:
        value = self._value(x)
        if self.algebra.unit() in value:
            raise AugmentationError("element has a unit component; the augmentation ideal is required")
        return value

    def one(self) -> LinComb:
        return LinComb.monomial(self.algebra.unit())

    # ------------------------------------------------------------------
    # 구조 사상
    # ------------------------------------------------------------------

    def product(self, x: Operand, y: Operand) -> LinComb:
        return self._value(x).bilinear(self._value(y), self.algebra.product_basis)

    def coproduct(self, x: Operand) -> LinComb:
        return self._value(x).apply(self.algebra.coproduct_basis)

    def reduced_coproduct(self, x: Operand) -> LinComb:
        """Δ 에서 단위원을 포함한 항을 뺀 것"""
        return self.coproduct(x).filter(lambda k: not self.is_unit(k[0]) and not self.is_unit(k[1]))

    def counit(self, x: Operand) -> Fraction:
        return self._value(x).coefficient(self.algebra.unit())

    def antipode_basis(self, a: Hashable) -> LinComb:
        """
        S(1) = 1, S(a) = −a − Σ S(a′) a″ (축약 쌍대곱 위의 재귀, 저장소에 메모)
        """
        if self.is_unit(a):
            return LinComb.monomial(a)

        def compute() -> LinComb:
            result = -LinComb.monomial(a)
            for (left, right), coeff in self.algebra.coproduct_basis(a).raw_items():
                if self.is_unit(left) or self.is_unit(right):
                    continue
                term = self.antipode_basis(left).bilinear(LinComb.monomial(right), self.algebra.product_basis)
                result = result - term.scale(coeff)
            return result

        return self.repo.get_or_compute("antipode", (self.algebra.name, a), compute)

    def antipode(self, x: Operand) -> LinComb:
        return self._value(x).apply(self.antipode_basis)

    def delta_split(self, x: Operand, side: Side) -> LinComb:
        """
        δ≺ (side="prec") 또는 δ≻ (side="succ")

        Raises:
            AugmentationError: 단위원 성분
            AlgebraMismatchError: 분할이 없는 대수
        """
        if side not in SIDES:
            raise InvalidInputError(f"unknown side {side!r}")
        value = self.require_augmentation(x)
        return value.apply(lambda a: self.algebra.split_basis(a, side))

    def nwarrow(self, x: Operand, y: Operand) -> LinComb:
        left = self.require_augmentation(x)
        right = self.require_augmentation(y)
        return left.bilinear(right, self.algebra.nwarrow_basis)

    def tensor_product(self, x: LinComb, y: LinComb) -> LinComb:
        """텐서 대수의 곱 (a⊗b)(c⊗d) = ac ⊗ bd"""
        def basis_product(p: Tuple, q: Tuple) -> LinComb:
            return tensor(*(self.algebra.product_basis(a, b) for a, b in zip(p, q)))

        return x.bilinear(y, basis_product)

    # ------------------------------------------------------------------
    # 법칙
    # ------------------------------------------------------------------

    def check_coassociativity(self, degree: int, jobs: int = 1) -> LawCheck:
        delta = self.algebra.coproduct_basis

        def holds(case: Tuple) -> bool:
            once = delta(case[0])
            return tensor_map(once, (delta, None)) == tensor_map(once, (None, delta))

        cases = basis_tuples(self.algebra, 1, degree, min_degree=0)
        return check_law("hopf.coassociativity", self.algebra.name, degree, cases, holds, jobs)

    def check_compatibility(self, degree: int, jobs: int = 1) -> LawCheck:
        def holds(case: Tuple) -> bool:
            a, b = (LinComb.monomial(k) for k in case)
            return self.coproduct(self.product(a, b)) == self.tensor_product(self.coproduct(a), self.coproduct(b))

        cases = basis_tuples(self.algebra, 2, degree)
        return check_law("hopf.compatibility", self.algebra.name, degree, cases, holds, jobs)

    def check_antipode(self, degree: int, jobs: int = 1) -> LawCheck:
        """m∘(S⊗id)∘Δ = m∘(id⊗S)∘Δ = 1·ε"""
        def holds(case: Tuple) -> bool:
            a = case[0]
            expected = self.one().scale(self.counit(LinComb.monomial(a)))
            delta = self.algebra.coproduct_basis(a)
            left = delta.apply(lambda k: self.antipode_basis(k[0]).bilinear(
                LinComb.monomial(k[1]), self.algebra.product_basis))
            right = delta.apply(lambda k: LinComb.monomial(k[0]).bilinear(
                self.antipode_basis(k[1]), self.algebra.product_basis))
            return left == expected and right == expected

        cases = basis_tuples(self.algebra, 1, degree, min_degree=0)
        return check_law("hopf.antipode", self.algebra.name, degree, cases, holds, jobs)

    def check_split_sum(self, degree: int, jobs: int = 1) -> LawCheck:
        """δ≺ + δ≻ = 축약 쌍대곱"""
        def holds(case: Tuple) -> bool:
            x = LinComb.monomial(case[0])
            return self.delta_split(x, "prec") + self.delta_split(x, "succ") == self.reduced_coproduct(x)

        cases = basis_tuples(self.algebra, 1, degree)
        return check_law("hopf.split-sum", self.algebra.name, degree, cases, holds, jobs)

    def check_closure(self, degree: int, accepts: Callable[[Hashable], bool]) -> LawCheck:
        """곱과 쌍대곱의 모든 출력 키가 accepts 를 만족 (부분 Hopf 대수)"""
        def holds(case: Tuple) -> bool:
            if len(case) == 2:
                return all(accepts(k) for k in self.algebra.product_basis(*case).keys())
            return all(accepts(part) for k in self.algebra.coproduct_basis(case[0]).keys() for part in k)

        cases = basis_tuples(self.algebra, 1, degree) + basis_tuples(self.algebra, 2, degree)
        return check_law("hopf.closure", self.algebra.name, degree, cases, holds)

    def check_reversal(self, degree: int) -> LawCheck:
        """rev(xy) = rev(y)rev(x), (rev⊗rev)∘Δ = Δ∘rev (순서 숲)"""
        def rev(a: Hashable) -> LinComb:
            return LinComb.monomial(reverse_labels(a))

        def holds(case: Tuple) -> bool:
            if len(case) == 2:
                a, b = case
                return self.product(LinComb.monomial(a), LinComb.monomial(b)).apply(rev) == \
                    rev(b).bilinear(rev(a), self.algebra.product_basis)
            a = case[0]
            return tensor_map(self.algebra.coproduct_basis(a), (rev, rev)) == self.coproduct(rev(a))

        cases = basis_tuples(self.algebra, 1, degree, min_degree=0) + basis_tuples(self.algebra, 2, degree)
        return check_law("hopf.reversal", self.algebra.name, degree, cases, holds)

    def check_hopf(self, degree: int, jobs: int = 1) -> List[LawCheck]:
        reports = [
            self.check_coassociativity(degree, jobs),
            self.check_compatibility(degree, jobs),
            self.check_antipode(degree, jobs),
        ]
        if getattr(self.algebra, "has_split", False):
            reports.append(self.check_split_sum(degree, jobs))
        logger.info(f"Hopf suite on {self.algebra.name}: {sum(r.passed for r in reports)}/{len(reports)} passed")
        return reports


# ================================================================================
# Z 기저 위의 쌍대 덴드리폼 곱 (평면 숲)
# ================================================================================

def _flag(grafting: Any, rule: DualRule) -> bool:
    return grafting.last_root_from_f if rule == "root" else grafting.rightmost_leaf_from_f


def dual_product_basis(left: PlanarForest, right: PlanarForest) -> LinComb:
    """Z_F Z_G = Σ_{H} Z_H (H 의 절단 중 Lea = F, Roo = G 마다 한 번)"""
    return LinComb.from_keys(g.forest for g in graftings(left, right))


def dual_dendriform_basis(side: Side, left: PlanarForest, right: PlanarForest, rule: DualRule = "root") -> LinComb:
    """
    Z_F ≺ Z_G / Z_F ≻ Z_G

    rule="root": H 의 마지막 뿌리가 F 에서 왔으면 ≺
    rule="leaf": H 의 가장 오른쪽 잎이 F 에서 왔으면 ≺ (δ≺/δ≻ 구조 상수의 전치)
    """
    if rule not in DUAL_RULES:
        raise InvalidInputError(f"unknown dual rule {rule!r}")
    want = side == "prec"
    return LinComb.from_keys(g.forest for g in graftings(left, right) if _flag(g, rule) == want)


def dual_dendriform(side: Side, x: LinComb, y: LinComb, rule: DualRule = "root") -> LinComb:
    return x.bilinear(y, lambda a, b: dual_dendriform_basis(side, a, b, rule))


def dual_product(x: LinComb, y: LinComb) -> LinComb:
    return x.bilinear(y, dual_product_basis)


class DualDendriformService:
    """평면 숲 쌍대 공간의 덴드리폼 곱과 쌍대성 검증"""

    def __init__(self, algebra: Any):
        self.algebra = algebra

    def check_duality(self, degree: int, rule: DualRule = "leaf", jobs: int = 1) -> List[LawCheck]:
        """
        Z 곱 구조 상수 = Δ 구조 상수의 전치 (두 규칙 공통)
        rule="leaf" 이면 ≺ / ≻ 각각 δ≺ / δ≻ 의 전치임도 확인
        """
        def transpose(n: int, pair: Tuple, structure: Callable[[Hashable], LinComb]) -> LinComb:
            return LinComb({h: structure(h).coefficient(pair) for h in self.algebra.basis(n)})

        def full(case: Tuple) -> bool:
            n = case[0].degree + case[1].degree
            return dual_product_basis(*case) == transpose(n, case, self.algebra.coproduct_basis)

        cases = basis_tuples(self.algebra, 2, degree)
        reports = [check_law("dual.product", self.algebra.name, degree, cases, full, jobs)]
        if rule == "leaf":
            for side in SIDES:
                def split(case: Tuple, side: Side = side) -> bool:
                    n = case[0].degree + case[1].degree
                    return dual_dendriform_basis(side, case[0], case[1], "leaf") == transpose(
                        n, case, lambda h: self.algebra.split_basis(h, side))

                reports.append(check_law(f"dual.{side}", self.algebra.name, degree, cases, split, jobs))
        return reports

    def check_dendriform(self, degree: int, rule: DualRule = "root", jobs: int = 1) -> List[LawCheck]:
        """
        (x≺y)≺z = x≺(yz), (x≻y)≺z = x≻(y≺z), (xy)≻z = x≻(y≻z)
        """
        def prec(x: LinComb, y: LinComb) -> LinComb:
            return dual_dendriform("prec", x, y, rule)

        def succ(x: LinComb, y: LinComb) -> LinComb:
            return dual_dendriform("succ", x, y, rule)

        def monomials(case: Tuple) -> Tuple[LinComb, ...]:
            return tuple(LinComb.monomial(k) for k in case)

        laws = {
            "dendriform.prec-prec": lambda x, y, z: prec(prec(x, y), z) == prec(x, dual_product(y, z)),
            "dendriform.succ-prec": lambda x, y, z: prec(succ(x, y), z) == succ(x, prec(y, z)),
            "dendriform.succ-succ": lambda x, y, z: succ(dual_product(x, y), z) == succ(x, succ(y, z)),
        }
        cases = basis_tuples(self.algebra, 3, degree)
        return [
            check_law(f"{name}[{rule}]", self.algebra.name, degree, cases, lambda c, law=law: law(*monomials(c)), jobs)
            for name, law in laws.items()
        ]
