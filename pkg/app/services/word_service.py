"""
Word combinatorics - standardization, parkization, shuffles, cuts
app/services/word_service.py
"""
from itertools import combinations, permutations, product
from typing import Iterator, List, Literal, Tuple

from app.core.exceptions import AugmentationError, InvalidInputError
from app.core.logging import logger
from app.domain.entities.linear import LinComb
from app.domain.entities.word import ParkingWord
from app.domain.interfaces.algebra import Side

WordKind = Literal["permutation", "parking"]
WORD_KINDS = ("permutation", "parking")


def is_parking(word: ParkingWord) -> bool:
    return word.is_parking()


def require_parking(word: ParkingWord) -> None:
    if not word.is_parking():
        raise InvalidInputError(f"{word.to_text()} is not a parking word")


def require_permutation(word: ParkingWord) -> None:
    if not word.is_permutation():
        raise InvalidInputError(f"{word.to_text()} is not a permutation")


def standardize(word: ParkingWord) -> ParkingWord:
    """
    글자가 모두 다른 단어의 표준화 (증가 전단사로 1..k)

    Raises:
        InvalidInputError: 반복 글자 (parkize 를 사용)
    """
    letters = word.letters
    if len(set(letters)) != len(letters):
        raise InvalidInputError(f"{word.to_text()} has repeated letters; use parkize")
    rank = {a: i for i, a in enumerate(sorted(letters), start=1)}
    return ParkingWord(tuple(rank[a] for a in letters))


def parkize(word: ParkingWord) -> ParkingWord:
    """
    주차화: |{i : w_i ≤ d}| < d 인 가장 작은 d 를 찾아 d 보다 큰 글자를 1 씩 줄이기를 반복

    d 보다 큰 가장 작은 글자 m 이 d 로 내려올 때까지 d 는 그대로이므로 m − d 만큼을
    한 번에 뺀다. 반복 횟수는 서로 다른 글자 수 이하.

    주차 단어에서는 항등이고, 글자가 모두 다르면 표준화와 같다.
    """
    letters = list(word.letters)
    n = len(letters)
    while True:
        deficient = next(
            (d for d in range(1, n + 1) if sum(1 for a in letters if a <= d) < d),
            None
        )
        if deficient is None:
            return ParkingWord(tuple(letters))
        drop = min(a for a in letters if a > deficient) - deficient
        letters = [a - drop if a > deficient else a for a in letters]


def inverse(word: ParkingWord) -> ParkingWord:
    require_permutation(word)
    result = [0] * word.degree
    for i, a in enumerate(word.letters, start=1):
        result[a - 1] = i
    return ParkingWord(tuple(result))


def shifted_concat(left: ParkingWord, right: ParkingWord) -> ParkingWord:
    """(a_1..a_k, b_1+k..b_l+k)"""
    k = left.degree
    return ParkingWord(left.letters + tuple(b + k for b in right.letters))


def _shuffles(left: ParkingWord, right: ParkingWord) -> Iterator[Tuple[Tuple[int, ...], ParkingWord]]:
    """
    왼쪽 글자 위치 집합 (사전식) 과 그 섞기 결과

    오른쪽 단어는 deg(left) 만큼 밀린다.
    """
    k, n = left.degree, left.degree + right.degree
    shifted = tuple(b + k for b in right.letters)
    for positions in combinations(range(n), k):
        chosen = set(positions)
        out: List[int] = []
        li = ri = 0
        for i in range(n):
            if i in chosen:
                out.append(left.letters[li])
                li += 1
            else:
                out.append(shifted[ri])
                ri += 1
        yield positions, ParkingWord(tuple(out))


def shuffle_product(left: ParkingWord, right: ParkingWord) -> LinComb:
    """밀린 섞기 곱 (C(k+l, k) 항, 수집 전)"""
    require_parking(left)
    require_parking(right)
    return LinComb.from_keys(word for _, word in _shuffles(left, right))


def word_coproduct(word: ParkingWord, normalize: bool = True) -> LinComb:
    """
    자르기 쌍대곱 Σ_k park(앞) ⊗ park(뒤)

    Args:
        word: 주차 단어
        normalize: True 면 parkize, False 면 standardize (순열 전용)
    """
    require_parking(word)
    fix = parkize if normalize else standardize
    letters = word.letters
    return LinComb.from_keys(
        (fix(ParkingWord(letters[:k])), fix(ParkingWord(letters[k:])))
        for k in range(len(letters) + 1)
    )


def fqsym_pairing(left: ParkingWord, right: ParkingWord) -> int:
    """⟨σ, τ⟩ = 1 이면 τ = σ⁻¹"""
    require_permutation(left)
    require_permutation(right)
    return int(inverse(left) == right)


def m_index(word: ParkingWord) -> int:
    """최대 글자가 놓인 마지막 위치 (1 부터)"""
    if word.is_empty():
        raise AugmentationError("m_index needs a non-empty word")
    top = max(word.letters)
    return max(i for i, a in enumerate(word.letters, start=1) if a == top)


def word_delta_split(word: ParkingWord, side: Side) -> LinComb:
    """
    PQSym^cop 의 δ≺ / δ≻: 뒤 ⊗ 앞 (parkize)

    δ≺ 는 자르는 위치 k = 1..m−1, δ≻ 는 k = m..n−1 (m = m_index).
    """
    require_parking(word)
    m = m_index(word)
    n = word.degree
    cuts = range(1, m) if side == "prec" else range(m, n)
    letters = word.letters
    return LinComb.from_keys(
        (parkize(ParkingWord(letters[k:])), parkize(ParkingWord(letters[:k])))
        for k in cuts
    )


def word_nwarrow(left: ParkingWord, right: ParkingWord) -> LinComb:
    """
    σ ↖ τ: τ 블록의 첫 글자가 σ 의 m_σ 번째 글자보다 뒤에 오는 섞기만

    Raises:
        AugmentationError: 빈 입력
    """
    if left.is_empty() or right.is_empty():
        raise AugmentationError("↖ is defined on non-empty words")
    require_parking(left)
    require_parking(right)
    m = m_index(left)
    terms = []
    for positions, word in _shuffles(left, right):
        chosen = set(positions)
        first_right = next(i for i in range(word.degree) if i not in chosen)
        if first_right > positions[m - 1]:
            terms.append(word)
    return LinComb.from_keys(terms)


def enumerate_words(kind: WordKind, n: int) -> List[ParkingWord]:
    """n 차 순열 또는 주차 단어 (정규 텍스트 순)"""
    if n < 0:
        raise InvalidInputError(f"degree must be non-negative, got {n}")
    if kind == "permutation":
        found = [ParkingWord(p) for p in permutations(range(1, n + 1))]
    elif kind == "parking":
        found = [w for w in (ParkingWord(p) for p in product(range(1, n + 1), repeat=n)) if w.is_parking()]
    else:
        raise InvalidInputError(f"unknown word kind {kind!r}")
    found.sort(key=lambda w: w.to_text())
    logger.debug(f"enumerate {kind} words degree {n}: {len(found)}")
    return found
