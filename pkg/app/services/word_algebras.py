"""
Word Hopf algebras - FQSym, PQSym and their co-opposites
app/services/word_algebras.py
"""
from typing import List, Optional

from app.core.exceptions import AlgebraMismatchError, AugmentationError, InvalidInputError
from app.domain.entities.linear import LinComb, flip
from app.domain.entities.word import ParkingWord
from app.domain.interfaces.algebra import Side
from app.domain.interfaces.basis_repository import BasisRepositoryProtocol
from app.repositories.basis_repository import basis_repository
from app.services.parsing import parse_word
from app.services.word_service import (
    WordKind, enumerate_words, shuffle_product, word_coproduct, word_delta_split, word_nwarrow
)


class WordAlgebra:
    """
    주차 단어 기저 Hopf 대수

    cop=True 이면 쌍대곱을 뒤집은 Δ^op 를 쓰고, 이때 δ≺ / δ≻ 분할이 정의된다.
    """

    word_kind: WordKind = "parking"
    base_name = "pqsym"

    def __init__(self, cop: bool = False, repository: Optional[BasisRepositoryProtocol] = None):
        self.cop = cop
        self.has_split = cop
        self.repo = repository or basis_repository
        self.name = f"{self.base_name}-cop" if cop else self.base_name

    def unit(self) -> ParkingWord:
        return ParkingWord()

    def degree(self, key: ParkingWord) -> int:
        return key.degree

    def basis(self, n: int) -> List[ParkingWord]:
        return self.repo.get_or_compute("basis", (self.base_name, n), lambda: enumerate_words(self.word_kind, n))

    def accepts(self, key: object) -> bool:
        if not isinstance(key, ParkingWord):
            return False
        return key.is_permutation() if self.word_kind == "permutation" else key.is_parking()

    def parse_key(self, text: str) -> ParkingWord:
        word = parse_word(text)
        if not self.accepts(word):
            raise InvalidInputError(f"{text!r} is not a basis word of {self.name}")
        return word

    def product_basis(self, a: ParkingWord, b: ParkingWord) -> LinComb:
        return shuffle_product(a, b)

    def coproduct_basis(self, a: ParkingWord) -> LinComb:
        def compute() -> LinComb:
            delta = word_coproduct(a, normalize=self.word_kind == "parking")
            return flip(delta) if self.cop else delta

        return self.repo.get_or_compute("coproduct", (self.name, a), compute)

    def split_basis(self, a: ParkingWord, side: Side) -> LinComb:
        """
        δ≺ / δ≻ (co-opposite 쪽에서만 정의)

        Raises:
            AlgebraMismatchError: cop 가 아닌 대수
            AugmentationError: 빈 단어
        """
        if not self.cop:
            raise AlgebraMismatchError(f"the split coproducts live on {self.base_name}-cop, not {self.name}")
        if a.is_empty():
            raise AugmentationError("the split coproducts are defined on the augmentation ideal only")
        return self.repo.get_or_compute(f"split-{side}", (self.name, a), lambda: word_delta_split(a, side))

    def nwarrow_basis(self, a: ParkingWord, b: ParkingWord) -> LinComb:
        return word_nwarrow(a, b)


class PQSymAlgebra(WordAlgebra):
    """주차 함수 Hopf 대수 PQSym"""

    word_kind: WordKind = "parking"
    base_name = "pqsym"


class FQSymAlgebra(WordAlgebra):
    """자유 준대칭 함수 FQSym (PQSym 의 순열 부분 Hopf 대수)"""

    word_kind: WordKind = "permutation"
    base_name = "fqsym"
