"""
Parking word entity (basis of PQSym, permutations span FQSym)
app/domain/entities/word.py
"""
from dataclasses import dataclass
from typing import Tuple

from app.core.exceptions import InvalidInputError


@dataclass(frozen=True)
class ParkingWord:
    """
    양의 정수 단어 (a_1 .. a_n)

    주차 조건(정렬 후 a'_i ≤ i)은 생성 시 강제하지 않는다. 정규화 연산(parkize)의
    입력으로 임의 단어가 필요하기 때문이며, 대수 연산은 is_parking 으로 검사한다.
    """
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if any(a < 1 for a in self.letters):
            raise InvalidInputError(f"letters must be positive: {self.letters}")

    @property
    def degree(self) -> int:
        return len(self.letters)

    def is_empty(self) -> bool:
        return not self.letters

    def is_parking(self) -> bool:
        return all(a <= i for i, a in enumerate(sorted(self.letters), start=1))

    def is_permutation(self) -> bool:
        return sorted(self.letters) == list(range(1, len(self.letters) + 1))

    def to_text(self) -> str:
        return "(" + ",".join(str(a) for a in self.letters) + ")"
