"""
Text grammar parsers (forests, words, linear combinations)
app/services/parsing.py
"""
import re
from fractions import Fraction
from typing import Callable, Dict, Hashable, List, Optional, Tuple

from app.core.exceptions import ParseError
from app.domain.entities.forest import (
    EMPTY_FOREST_TEXT, Decoration, GradedAlphabet, OrderedForest, PlanarForest, PlanarTree, RootedForest
)
from app.domain.entities.linear import LinComb
from app.domain.entities.word import ParkingWord

_SYMBOL = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_INT = re.compile(r"\d+")


class _Cursor:
    """공백을 건너뛰는 단순 재귀 하강 커서"""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        if self.peek() != char:
            raise ParseError(self.text, f"expected {char!r} at position {self.pos}")
        self.pos += 1

    def match(self, pattern: "re.Pattern[str]") -> Optional[str]:
        self.skip()
        m = pattern.match(self.text, self.pos)
        if not m:
            return None
        self.pos = m.end()
        return m.group(0)

    def at_end(self) -> bool:
        return self.peek() == ""


# ================================================================================
# 평면 / 뿌리 숲
# ================================================================================

def parse_planar(text: str, alphabet: Optional[GradedAlphabet] = None) -> PlanarForest:
    """
    평면 숲 파싱: 나무 `[ tree* ]` 또는 `sym[ tree* ]`, 나무 사이는 공백(선택)

    Args:
        text: 숲 텍스트 ("∅" 또는 빈 문자열은 빈 숲)
        alphabet: 장식 기호의 차수를 결정하는 알파벳 (장식 숲이면 필수)

    Raises:
        ParseError: 문법 오류 또는 알파벳에 없는 기호
    """
    if text.strip() in (EMPTY_FOREST_TEXT, ""):
        return PlanarForest()
    cursor = _Cursor(text)

    def tree() -> PlanarTree:
        decoration: Optional[Decoration] = None
        symbol = cursor.match(_SYMBOL)
        if symbol is not None:
            if alphabet is None:
                raise ParseError(text, f"decoration {symbol!r} needs an alphabet")
            try:
                decoration = alphabet.lookup(symbol)
            except ValueError as e:
                raise ParseError(text, str(e)) from e
        cursor.expect("[")
        children: List[PlanarTree] = []
        while cursor.peek() not in ("]", ""):
            children.append(tree())
        cursor.expect("]")
        return PlanarTree(tuple(children), decoration)

    trees: List[PlanarTree] = []
    while not cursor.at_end():
        trees.append(tree())
    return PlanarForest(tuple(trees))


def parse_rooted(text: str) -> RootedForest:
    return RootedForest.of(parse_planar(text))


# ================================================================================
# 순서 숲
# ================================================================================

def parse_ordered(text: str) -> OrderedForest:
    """
    순서 숲 파싱: 나무 `label` 또는 `label(child,…)`, 나무 사이는 공백

    형제 순서는 임의여도 되며 라벨 순서로 정규화된다. 라벨은 정확히 1..n 이어야 한다.
    """
    if text.strip() in (EMPTY_FOREST_TEXT, ""):
        return OrderedForest()
    cursor = _Cursor(text)
    parent_of: Dict[int, int] = {}

    def tree(parent: int) -> None:
        token = cursor.match(_INT)
        if token is None:
            raise ParseError(text, f"expected a label at position {cursor.pos}")
        label = int(token)
        if label in parent_of:
            raise ParseError(text, f"duplicate label {label}")
        parent_of[label] = parent
        if cursor.peek() == "(":
            cursor.expect("(")
            tree(label)
            while cursor.peek() == ",":
                cursor.expect(",")
                tree(label)
            cursor.expect(")")

    while not cursor.at_end():
        tree(0)
    n = len(parent_of)
    if sorted(parent_of) != list(range(1, n + 1)):
        raise ParseError(text, f"labels must be exactly 1..{n}")
    return OrderedForest(tuple(parent_of[v] for v in range(1, n + 1)))


# ================================================================================
# 단어
# ================================================================================

def parse_word(text: str) -> ParkingWord:
    """
    단어 파싱: `(a1,a2,…)`; 쉼표가 없으면 각 숫자 하나가 한 글자 ("(21332)")
    """
    body = text.strip()
    if body in ("1", ""):
        return ParkingWord()
    if not (body.startswith("(") and body.endswith(")")):
        raise ParseError(text, "a word must be enclosed in parentheses")
    inner = body[1:-1].strip()
    if not inner:
        return ParkingWord()
    if "," in inner:
        parts = [p.strip() for p in inner.split(",")]
    else:
        parts = list(inner.replace(" ", ""))
    if not all(p.isdigit() for p in parts):
        raise ParseError(text, "letters must be positive integers")
    try:
        return ParkingWord(tuple(int(p) for p in parts))
    except ValueError as e:
        raise ParseError(text, str(e)) from e


# ================================================================================
# 선형결합
# ================================================================================

_TERM_SPLIT = re.compile(r"\s+([+-])\s+")
_COEFF = re.compile(r"^\s*(-?\d+(?:/\d+)?)\s*\*\s*(.*)$")


def parse_lincomb(text: str, parse_key: Callable[[str], Hashable]) -> LinComb:
    """
    `c1*K1 + c2*K2 - K3` 형식 파싱

    항 구분자 `+`/`-` 는 양쪽에 공백이 있어야 한다 (키 문법과 충돌하지 않도록).
    맨 앞의 `-` 는 첫 항의 부호로 해석한다.
    """
    source = text.strip()
    if source == "0":
        return LinComb.zero()
    pieces = _TERM_SPLIT.split(source)
    signs = ["+"] + pieces[1::2]
    bodies = pieces[0::2]
    pairs: List[Tuple[Hashable, Fraction]] = []
    for sign, body in zip(signs, bodies):
        coeff = Fraction(1)
        body = body.strip()
        if body.startswith("-") and not body.startswith("-*"):
            m = _COEFF.match(body)
            if m is None:
                coeff = -coeff
                body = body[1:].strip()
        m = _COEFF.match(body)
        if m is not None:
            coeff = coeff * Fraction(m.group(1))
            body = m.group(2)
        if sign == "-":
            coeff = -coeff
        pairs.append((parse_key(body), coeff))
    return LinComb.from_pairs(pairs)


def parse_alphabet(text: str) -> GradedAlphabet:
    """`a:1,b:2` 또는 차수별 개수 `#1,1,7` 형식"""
    source = text.strip()
    if source.startswith("#"):
        try:
            sizes = [int(p) for p in source[1:].split(",") if p.strip()]
        except ValueError as e:
            raise ParseError(text, str(e)) from e
        return GradedAlphabet.from_sizes(sizes)
    symbols = []
    for part in source.split(","):
        if not part.strip():
            continue
        name, _, degree = part.partition(":")
        try:
            symbols.append(Decoration(name.strip(), int(degree) if degree else 1))
        except ValueError as e:
            raise ParseError(text, str(e)) from e
    return GradedAlphabet(tuple(symbols))


# ================================================================================
# 반복 쌍대곱 단계와 생성원 짝짓기
# ================================================================================

_STEP = re.compile(r"^(<|>|prec|succ)(?:@(\d+))?$")


def parse_steps(text: str) -> List[Tuple[str, int]]:
    """
    `<,>@1` 형식: 각 단계는 `<`/`>` (또는 prec/succ) 와 선택적 0 기반 slot (기본 0)
    """
    steps: List[Tuple[str, int]] = []
    for token in re.split(r"[,\s]+", text.strip()):
        if not token:
            continue
        m = _STEP.match(token)
        if m is None:
            raise ParseError(text, f"bad step {token!r}")
        side = "prec" if m.group(1) in ("<", "prec") else "succ"
        steps.append((side, int(m.group(2) or 0)))
    if not steps:
        raise ParseError(text, "at least one step is required")
    return steps


def parse_matching(text: str) -> Dict[str, str]:
    """`d3_1=d3_2,d3_2=d3_1` 형식의 생성원 치환"""
    matching: Dict[str, str] = {}
    for part in text.split(","):
        if not part.strip():
            continue
        old, sep, new = part.partition("=")
        if not sep or not old.strip() or not new.strip():
            raise ParseError(text, f"bad matching entry {part!r}")
        matching[old.strip()] = new.strip()
    return matching
