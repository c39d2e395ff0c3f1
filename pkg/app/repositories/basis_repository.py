"""
In-memory basis repository implementation
app/repositories/basis_repository.py
"""
import threading
from typing import Any, Callable, Dict, Hashable, Optional, Tuple, TypeVar

from app.core.logging import logger

T = TypeVar("T")


class BasisRepository:
    """
    프로세스 내 캐시 (기저 열거, Θ 행렬, 곱/쌍대곱 구조 상수)

    계산은 잠금 밖에서 수행하고 저장만 잠금 안에서 한다. 같은 키를 두 스레드가
    동시에 계산해도 결과가 결정적이므로 먼저 저장된 값을 돌려준다.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._store: Dict[Tuple[str, Hashable], Any] = {}

    def get_or_compute(self, namespace: str, key: Hashable, factory: Callable[[], T]) -> T:
        slot = (namespace, key)
        with self._lock:
            if slot in self._store:
                return self._store[slot]
        value = factory()
        with self._lock:
            stored = self._store.setdefault(slot, value)
        logger.debug(f"Cached {namespace}:{key!r}")
        return stored

    def clear(self, namespace: Optional[str] = None) -> None:
        with self._lock:
            if namespace is None:
                self._store.clear()
            else:
                for slot in [s for s in self._store if s[0] == namespace]:
                    del self._store[slot]

    def __len__(self) -> int:
        with self._lock:
            return len(self._store)


basis_repository = BasisRepository()
