"""
Exact scalars, linear combinations and graded maps
app/domain/entities/linear.py
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import (
    Any, Callable, Dict, Generic, Hashable, Iterable, Iterator, List,
    Mapping, Optional, Tuple, TypeVar, Union
)

Scalar = Fraction
ScalarLike = Union[int, Fraction, str]

K = TypeVar("K", bound=Hashable)
L = TypeVar("L", bound=Hashable)

TENSOR_SEPARATOR = " (x) "


def to_scalar(value: ScalarLike) -> Fraction:
    """정수, 분수, "p/q" 문자열을 Fraction 으로 변환"""
    return value if isinstance(value, Fraction) else Fraction(value)


def format_scalar(value: Fraction) -> str:
    """유리수 직렬화: q = 1 이면 "p", 아니면 "p/q" """
    return str(value)


def key_text(key: Any) -> str:
    """
    기저 키의 정규 텍스트

    텐서 키(튜플)는 각 성분을 " (x) " 로 연결한다.
    """
    if isinstance(key, tuple):
        return TENSOR_SEPARATOR.join(key_text(part) for part in key)
    to_text = getattr(key, "to_text", None)
    if to_text is not None:
        return to_text()
    return str(key)


def key_order(key: Any) -> Tuple[str, ...]:
    """직렬화 기반 정렬 키 (텐서는 성분별 사전식)"""
    if isinstance(key, tuple):
        return tuple(key_text(part) for part in key)
    return (key_text(key),)


class LinComb(Generic[K]):
    """
    유리수 계수 형식 선형결합

    0 계수는 저장하지 않으며 인스턴스는 생성 후 변경되지 않는다.
    텐서 원소는 키가 튜플인 LinComb 로 표현한다.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[K, ScalarLike]] = None):
        clean: Dict[K, Fraction] = {}
        if terms:
            for key, coeff in terms.items():
                value = to_scalar(coeff)
                if value:
                    clean[key] = value
        self._terms = clean

    @classmethod
    def _wrap(cls, clean: Dict[K, Fraction]) -> "LinComb[K]":
        obj = cls.__new__(cls)
        obj._terms = {k: v for k, v in clean.items() if v}
        return obj

    @classmethod
    def zero(cls) -> "LinComb[K]":
        return cls._wrap({})

    @classmethod
    def monomial(cls, key: K, coeff: ScalarLike = 1) -> "LinComb[K]":
        return cls._wrap({key: to_scalar(coeff)})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[K, ScalarLike]]) -> "LinComb[K]":
        """(키, 계수) 쌍을 누적해 생성 (같은 키는 합산)"""
        acc: Dict[K, Fraction] = {}
        for key, coeff in pairs:
            acc[key] = acc.get(key, Fraction(0)) + to_scalar(coeff)
        return cls._wrap(acc)

    @classmethod
    def from_keys(cls, keys: Iterable[K]) -> "LinComb[K]":
        """계수 1 키 목록의 합 (중복은 누적)"""
        return cls.from_pairs((key, 1) for key in keys)

    # ------------------------------------------------------------------
    # 조회
    # ------------------------------------------------------------------

    def coefficient(self, key: K) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def keys(self) -> List[K]:
        return [key for key, _ in self.items()]

    def items(self) -> List[Tuple[K, Fraction]]:
        """정규 순서(직렬화 사전식)로 정렬된 항 목록"""
        return sorted(self._terms.items(), key=lambda item: key_order(item[0]))

    def raw_items(self) -> Iterable[Tuple[K, Fraction]]:
        """정렬하지 않은 항 (내부 누적용)"""
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[Tuple[K, Fraction]]:
        return iter(self.items())

    def __contains__(self, key: object) -> bool:
        return key in self._terms

    # ------------------------------------------------------------------
    # 선형 연산
    # ------------------------------------------------------------------

    def __add__(self, other: "LinComb[K]") -> "LinComb[K]":
        if not isinstance(other, LinComb):
            return NotImplemented
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            acc[key] = acc.get(key, Fraction(0)) + coeff
        return LinComb._wrap(acc)

    def __sub__(self, other: "LinComb[K]") -> "LinComb[K]":
        if not isinstance(other, LinComb):
            return NotImplemented
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            acc[key] = acc.get(key, Fraction(0)) - coeff
        return LinComb._wrap(acc)

    def __neg__(self) -> "LinComb[K]":
        return LinComb._wrap({k: -v for k, v in self._terms.items()})

    def scale(self, coeff: ScalarLike) -> "LinComb[K]":
        factor = to_scalar(coeff)
        if not factor:
            return LinComb.zero()
        return LinComb._wrap({k: v * factor for k, v in self._terms.items()})

    def __mul__(self, coeff: ScalarLike) -> "LinComb[K]":
        if isinstance(coeff, LinComb):
            return NotImplemented
        return self.scale(coeff)

    __rmul__ = __mul__

    def apply(self, f: Callable[[K], "LinComb[L]"]) -> "LinComb[L]":
        """기저 위의 선형사상 f 의 선형 확장"""
        acc: Dict[L, Fraction] = {}
        for key, coeff in self._terms.items():
            for image_key, image_coeff in f(key).raw_items():
                acc[image_key] = acc.get(image_key, Fraction(0)) + coeff * image_coeff
        return LinComb._wrap(acc)

    def bilinear(
            self,
            other: "LinComb[L]",
            f: Callable[[K, L], "LinComb[Any]"]
    ) -> "LinComb[Any]":
        """기저 위의 쌍선형사상 f 의 쌍선형 확장"""
        acc: Dict[Any, Fraction] = {}
        for left, lc in self._terms.items():
            for right, rc in other._terms.items():
                factor = lc * rc
                for image_key, image_coeff in f(left, right).raw_items():
                    acc[image_key] = acc.get(image_key, Fraction(0)) + factor * image_coeff
        return LinComb._wrap(acc)

    def map_keys(self, f: Callable[[K], L]) -> "LinComb[L]":
        """키 치환 (충돌 시 계수 합산)"""
        return LinComb.from_pairs((f(key), coeff) for key, coeff in self._terms.items())

    def filter(self, predicate: Callable[[K], bool]) -> "LinComb[K]":
        return LinComb._wrap({k: v for k, v in self._terms.items() if predicate(k)})

    # ------------------------------------------------------------------
    # 비교 / 직렬화
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def to_text(self) -> str:
        """`c1*K1 + c2*K2` 형식 (계수 1 은 생략)"""
        if not self._terms:
            return "0"
        parts: List[str] = []
        for index, (key, coeff) in enumerate(self.items()):
            magnitude = abs(coeff)
            body = key_text(key) if magnitude == 1 else f"{format_scalar(magnitude)}*{key_text(key)}"
            if index == 0:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if coeff > 0 else f" - {body}")
        return "".join(parts)

    def to_json_terms(self) -> List[Dict[str, Any]]:
        """JSON 모드 항 목록: 쌍 텐서는 {coeff, left, right}, 그 외 {coeff, key} 또는 {coeff, factors}"""
        terms: List[Dict[str, Any]] = []
        for key, coeff in self.items():
            entry: Dict[str, Any] = {"coeff": format_scalar(coeff)}
            if isinstance(key, tuple) and len(key) == 2:
                entry["left"] = key_text(key[0])
                entry["right"] = key_text(key[1])
            elif isinstance(key, tuple):
                entry["factors"] = [key_text(part) for part in key]
            else:
                entry["key"] = key_text(key)
            terms.append(entry)
        return terms

    def __repr__(self) -> str:
        return f"LinComb({self.to_text()})"


def tensor(*elements: LinComb) -> LinComb:
    """선형결합들의 텐서곱 (각 원소의 키가 한 성분이 됨)"""
    acc: Dict[Tuple, Fraction] = {(): Fraction(1)}
    for element in elements:
        step: Dict[Tuple, Fraction] = {}
        for prefix, pc in acc.items():
            for key, coeff in element.raw_items():
                new_key = prefix + (key,)
                step[new_key] = step.get(new_key, Fraction(0)) + pc * coeff
        acc = step
    return LinComb._wrap(acc)


def tensor_map(
        element: LinComb,
        maps: Tuple[Optional[Callable[[Any], LinComb]], ...]
) -> LinComb:
    """
    텐서 원소의 각 성분에 선형사상 적용 (None 은 항등)

    성분이 텐서로 쪼개지는 사상(예: 분할 쌍대곱)은 튜플 키를 돌려주며,
    결과 키에 평탄하게 펼쳐진다.
    """
    acc: Dict[Tuple, Fraction] = {}
    for key, coeff in element.raw_items():
        partial: Dict[Tuple, Fraction] = {(): coeff}
        for factor, f in zip(key, maps):
            step: Dict[Tuple, Fraction] = {}
            image = LinComb.monomial(factor) if f is None else f(factor)
            for image_key, image_coeff in image.raw_items():
                piece = image_key if (f is not None and isinstance(image_key, tuple)) else (image_key,)
                for prefix, pc in partial.items():
                    new_key = prefix + piece
                    step[new_key] = step.get(new_key, Fraction(0)) + pc * image_coeff
            partial = step
        for new_key, value in partial.items():
            acc[new_key] = acc.get(new_key, Fraction(0)) + value
    return LinComb._wrap(acc)


def flip(element: LinComb) -> LinComb:
    """쌍 텐서의 성분 교환 (a⊗b ↦ b⊗a)"""
    return element.map_keys(lambda key: (key[1], key[0]))


@dataclass
class GradedMap:
    """
    차수별 선형사상

    images[n] 은 n 차 원천 기저 원소 → 상 (선형결합) 의 대응이며,
    행렬은 행 = 목표 기저, 열 = 원천 기저 (각각 정규 순서).
    """
    name: str
    source_bases: Dict[int, List[Any]]
    target_bases: Dict[int, List[Any]]
    images: Dict[int, Dict[Any, LinComb]]
    _lookup: Dict[Any, LinComb] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        for per_degree in self.images.values():
            self._lookup.update(per_degree)

    def degrees(self) -> List[int]:
        return sorted(self.images)

    def image(self, key: Any) -> LinComb:
        """기저 원소의 상 (정의역 밖이면 KeyError)"""
        return self._lookup[key]

    def covers(self, key: Any) -> bool:
        return key in self._lookup

    def apply(self, element: LinComb) -> LinComb:
        return element.apply(self.image)

    def matrix(self, n: int) -> List[List[Fraction]]:
        """n 차 성분 행렬 (행 = 목표 기저, 열 = 원천 기저)"""
        sources = self.source_bases.get(n, [])
        targets = self.target_bases.get(n, [])
        row_of = {key: i for i, key in enumerate(targets)}
        rows = [[Fraction(0)] * len(sources) for _ in targets]
        for j, key in enumerate(sources):
            for image_key, coeff in self.images[n][key].raw_items():
                rows[row_of[image_key]][j] = coeff
        return rows

    def matrix_text(self, n: int) -> List[List[str]]:
        return [[format_scalar(value) for value in row] for row in self.matrix(n)]
