"""
Tagged algebra element
app/domain/entities/element.py
"""
from dataclasses import dataclass, field

from app.core.exceptions import AlgebraMismatchError
from app.domain.entities.linear import LinComb


@dataclass(frozen=True)
class HopfElement:
    """
    대수 이름이 붙은 선형결합 (빈 숲 / 빈 단어 키 = 단위원 1)
    """
    algebra: str
    value: LinComb = field(default_factory=LinComb.zero)

    def require(self, algebra: str) -> LinComb:
        """태그가 다르면 AlgebraMismatchError"""
        if self.algebra != algebra:
            raise AlgebraMismatchError(f"element of {self.algebra} used in {algebra}")
        return self.value

    def to_text(self) -> str:
        return self.value.to_text()
