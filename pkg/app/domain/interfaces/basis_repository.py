"""
Basis repository protocol (interface)
app/domain/interfaces/basis_repository.py
"""
from typing import Callable, Hashable, Protocol, TypeVar

T = TypeVar("T")


class BasisRepositoryProtocol(Protocol):
    """차수별 기저, 행렬, 분할 구조 상수 캐시 인터페이스"""

    def get_or_compute(self, namespace: str, key: Hashable, factory: Callable[[], T]) -> T:
        """캐시된 값 조회, 없으면 factory 로 계산 후 저장"""
        ...

    def clear(self, namespace: str | None = None) -> None:
        """네임스페이스 (또는 전체) 비우기"""
        ...
