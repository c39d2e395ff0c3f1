"""
Forest Hopf algebras - H (Connes-Kreimer), H_p^D, H_o, H_ho
app/services/forest_algebras.py
"""
from typing import List, Optional

from app.core.exceptions import AlgebraMismatchError, AugmentationError, InvalidInputError
from app.domain.entities.forest import GradedAlphabet, OrderedForest, PlanarForest, RootedForest
from app.domain.entities.linear import LinComb
from app.domain.interfaces.algebra import Side
from app.domain.interfaces.basis_repository import BasisRepositoryProtocol
from app.repositories.basis_repository import basis_repository
from app.services.forest_service import (
    AnyForest, ForestKind, admissible_cuts, concat, enumerate_forests,
    graft_greatest, graft_rightmost, vertex_parents
)
from app.services.parsing import parse_ordered, parse_planar, parse_rooted


class ForestAlgebra:
    """
    숲 기저 Hopf 대수 공통 구현

    곱은 숲의 곱(concat), 쌍대곱은 모든 허용 절단의 Lea ⊗ Roo.
    기저와 쌍대곱은 저장소에 캐시한다.
    """

    name = "forest"
    kind: ForestKind = "planar"
    has_split = True

    def __init__(self, repository: Optional[BasisRepositoryProtocol] = None):
        self.repo = repository or basis_repository

    # ------------------------------------------------------------------
    # 기저
    # ------------------------------------------------------------------

    def unit(self) -> AnyForest:
        raise NotImplementedError

    def degree(self, key: AnyForest) -> int:
        return key.degree

    def basis(self, n: int) -> List[AnyForest]:
        return self.repo.get_or_compute("basis", (self.name, n), lambda: enumerate_forests(self.kind, n))

    def parse_key(self, text: str) -> AnyForest:
        raise NotImplementedError

    def accepts(self, key: object) -> bool:
        return isinstance(key, type(self.unit()))

    # ------------------------------------------------------------------
    # 구조 사상
    # ------------------------------------------------------------------

    def product_basis(self, a: AnyForest, b: AnyForest) -> LinComb:
        return LinComb.monomial(concat(a, b))

    def coproduct_basis(self, a: AnyForest) -> LinComb:
        def compute() -> LinComb:
            return LinComb.from_keys((lea, roo) for _, lea, roo in admissible_cuts(a, standardize=True))

        return self.repo.get_or_compute("coproduct", (self.name, a), compute)

    def split_basis(self, a: AnyForest, side: Side) -> LinComb:
        """
        δ≺ / δ≻: 비자명 절단 중 특별 정점이 Lea (≺) 또는 Roo (≻) 에 있는 것

        특별 정점은 평면 숲에서 가장 오른쪽 잎 (전위 마지막), 순서 숲에서 최대 라벨.

        Raises:
            AugmentationError: 단위원 (빈 숲)
        """
        if a.is_empty():
            raise AugmentationError("the split coproducts are defined on the augmentation ideal only")

        def compute() -> LinComb:
            special = len(vertex_parents(a))
            want_lea = side == "prec"
            return LinComb.from_keys(
                (lea, roo)
                for cut, lea, roo in admissible_cuts(a, standardize=True)
                if not cut.is_empty() and not cut.is_total() and (special in cut.lea) == want_lea
            )

        return self.repo.get_or_compute(f"split-{side}", (self.name, a), compute)

    def nwarrow_basis(self, a: AnyForest, b: AnyForest) -> LinComb:
        raise AlgebraMismatchError(f"{self.name} has no ↖ product")


class ConnesKreimerAlgebra(ForestAlgebra):
    """뿌리 숲의 가환 Hopf 대수 H (절단 엔진은 평면 대표원 위에서 동작)"""

    name = "ck"
    kind: ForestKind = "rooted"
    has_split = False

    def unit(self) -> RootedForest:
        return RootedForest()

    def parse_key(self, text: str) -> RootedForest:
        return parse_rooted(text)

    def split_basis(self, a: AnyForest, side: Side) -> LinComb:
        raise AlgebraMismatchError("the Connes-Kreimer algebra carries no dendriform split")


class PlanarAlgebra(ForestAlgebra):
    """
    평면 (장식) 숲 대수 H_p^D

    알파벳이 없으면 장식 없는 H_p (모든 정점 차수 1).
    """

    kind: ForestKind = "planar"

    def __init__(
            self,
            alphabet: Optional[GradedAlphabet] = None,
            repository: Optional[BasisRepositoryProtocol] = None
    ):
        super().__init__(repository)
        self.alphabet = alphabet
        if alphabet is not None:
            self.kind = "planar-decorated"
            self.name = f"hp[{alphabet.to_text()}]"
        else:
            self.name = "hp"

    def unit(self) -> PlanarForest:
        return PlanarForest()

    def basis(self, n: int) -> List[AnyForest]:
        return self.repo.get_or_compute(
            "basis", (self.name, n), lambda: enumerate_forests(self.kind, n, self.alphabet)
        )

    def parse_key(self, text: str) -> PlanarForest:
        forest = parse_planar(text, self.alphabet)
        if self.alphabet is None and forest.is_decorated():
            raise InvalidInputError(f"{text!r} is decorated but {self.name} is not")
        if self.alphabet is not None and forest.size and any(d is None for d in forest.preorder()[1]):
            raise InvalidInputError(f"every vertex of {text!r} needs a decoration")
        return forest

    def nwarrow_basis(self, a: PlanarForest, b: PlanarForest) -> LinComb:
        return LinComb.monomial(graft_rightmost(a, b))


class OrderedAlgebra(ForestAlgebra):
    """순서 숲 대수 H_o (곱은 밀어 붙이기, ↖ 는 최대 정점 접목)"""

    name = "ho"
    kind: ForestKind = "ordered"

    def unit(self) -> OrderedForest:
        return OrderedForest()

    def parse_key(self, text: str) -> OrderedForest:
        return parse_ordered(text)

    def nwarrow_basis(self, a: OrderedForest, b: OrderedForest) -> LinComb:
        return LinComb.monomial(graft_greatest(a, b))


class HeapOrderedAlgebra(OrderedAlgebra):
    """힙 순서 숲 부분대수 H_ho (모든 라벨이 부모 라벨보다 큼)"""

    name = "hho"
    kind: ForestKind = "heap-ordered"

    def accepts(self, key: object) -> bool:
        return isinstance(key, OrderedForest) and key.is_heap_ordered()

    def parse_key(self, text: str) -> OrderedForest:
        forest = parse_ordered(text)
        if not forest.is_heap_ordered():
            raise InvalidInputError(f"{text!r} is not heap-ordered")
        return forest
