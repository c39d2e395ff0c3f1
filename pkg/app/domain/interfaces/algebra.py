"""
Algebra protocols (interfaces)
app/domain/interfaces/algebra.py
"""
from typing import Hashable, List, Literal, Protocol

from app.domain.entities.linear import LinComb

Side = Literal["prec", "succ"]
SIDES = ("prec", "succ")


class HopfAlgebraProtocol(Protocol):
    """기저 수준에서 정의된 차수 연결 Hopf 대수 인터페이스"""

    name: str

    def unit(self) -> Hashable:
        """단위원 기저 키 (빈 숲 / 빈 단어)"""
        ...

    def degree(self, key: Hashable) -> int:
        """기저 원소의 차수"""
        ...

    def basis(self, n: int) -> List[Hashable]:
        """n 차 기저 (정규 순서)"""
        ...

    def parse_key(self, text: str) -> Hashable:
        """텍스트 문법으로 기저 원소 파싱"""
        ...

    def product_basis(self, a: Hashable, b: Hashable) -> LinComb:
        """기저 곱"""
        ...

    def coproduct_basis(self, a: Hashable) -> LinComb:
        """기저 쌍대곱 (단위 포함, 키는 쌍)"""
        ...


class DupDendCarrierProtocol(Protocol):
    """augmentation ideal 위의 Dup-Dend 구조 인터페이스"""

    name: str

    def degree(self, key: Hashable) -> int:
        ...

    def basis(self, n: int) -> List[Hashable]:
        """n ≥ 1 차 기저"""
        ...

    def parse_key(self, text: str) -> Hashable:
        ...

    def product_basis(self, a: Hashable, b: Hashable) -> LinComb:
        ...

    def nwarrow_basis(self, a: Hashable, b: Hashable) -> LinComb:
        """↖ 곱"""
        ...

    def split_basis(self, a: Hashable, side: Side) -> LinComb:
        """δ≺ (side="prec") 또는 δ≻ (side="succ")"""
        ...
