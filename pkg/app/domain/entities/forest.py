"""
Forest domain entities
app/domain/entities/forest.py
"""
import re
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from app.core.exceptions import InvalidInputError

EMPTY_FOREST_TEXT = "∅"
SYMBOL_PATTERN = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class Decoration:
    """
    차수가 부여된 장식 기호

    텍스트에는 기호만 나타나고, 차수는 알파벳에서 복원한다.
    """
    symbol: str
    degree: int = 1

    def __post_init__(self):
        if not SYMBOL_PATTERN.match(self.symbol):
            raise InvalidInputError(f"invalid decoration symbol: {self.symbol!r}")
        if self.degree < 1:
            raise InvalidInputError(f"decoration {self.symbol} must have positive degree")

    def to_text(self) -> str:
        return self.symbol


@dataclass(frozen=True)
class GradedAlphabet:
    """차수 있는 장식 알파벳 (0 차 기호 없음)"""
    symbols: Tuple[Decoration, ...] = ()

    def __post_init__(self):
        names = [d.symbol for d in self.symbols]
        if len(set(names)) != len(names):
            raise InvalidInputError("alphabet symbols must be distinct")

    @classmethod
    def from_sizes(cls, sizes: Sequence[int]) -> "GradedAlphabet":
        """
        차수별 개수로 알파벳 생성

        Args:
            sizes: sizes[k] = (k+1) 차 기호 개수

        Returns:
            GradedAlphabet: 기호 이름은 d{차수}_{번호} (번호는 1 부터)
        """
        symbols = []
        for index, count in enumerate(sizes):
            degree = index + 1
            symbols.extend(Decoration(f"d{degree}_{i}", degree) for i in range(1, count + 1))
        return cls(tuple(symbols))

    def lookup(self, symbol: str) -> Decoration:
        for decoration in self.symbols:
            if decoration.symbol == symbol:
                return decoration
        raise InvalidInputError(f"symbol {symbol!r} is not in the alphabet")

    def of_degree(self, n: int) -> List[Decoration]:
        return [d for d in self.symbols if d.degree == n]

    def sizes(self, max_degree: int) -> List[int]:
        return [len(self.of_degree(n)) for n in range(1, max_degree + 1)]

    def to_text(self) -> str:
        return ",".join(f"{d.symbol}:{d.degree}" for d in self.symbols)


@dataclass(frozen=True)
class PlanarTree:
    """평면 나무: (선택적) 장식 + 왼쪽에서 오른쪽 순서의 자식 나무들"""
    children: Tuple["PlanarTree", ...] = ()
    decoration: Optional[Decoration] = None

    @property
    def weight(self) -> int:
        return self.decoration.degree if self.decoration else 1

    @property
    def degree(self) -> int:
        return self.weight + sum(child.degree for child in self.children)

    @property
    def size(self) -> int:
        return 1 + sum(child.size for child in self.children)

    def to_text(self) -> str:
        prefix = self.decoration.symbol if self.decoration else ""
        return prefix + "[" + "".join(child.to_text() for child in self.children) + "]"


@dataclass(frozen=True)
class PlanarForest:
    """
    평면 숲 (H_p^D 의 기저 원소), 빈 숲은 단위원

    정점 번호는 전위 순회 순서 1..n 이며 마지막 정점이 가장 오른쪽 잎이다.
    """
    trees: Tuple[PlanarTree, ...] = ()

    @property
    def degree(self) -> int:
        return sum(tree.degree for tree in self.trees)

    @property
    def size(self) -> int:
        return sum(tree.size for tree in self.trees)

    def is_empty(self) -> bool:
        return not self.trees

    def is_decorated(self) -> bool:
        return any(d is not None for d in self.preorder()[1])

    def to_text(self) -> str:
        if not self.trees:
            return EMPTY_FOREST_TEXT
        return " ".join(tree.to_text() for tree in self.trees)

    def preorder(self) -> Tuple[Tuple[int, ...], Tuple[Optional[Decoration], ...]]:
        """
        전위 순회 부모 배열

        Returns:
            (parents, decorations): parents[v-1] 은 정점 v 의 부모 (뿌리는 0)
        """
        parents: List[int] = []
        decorations: List[Optional[Decoration]] = []

        def visit(tree: PlanarTree, parent: int) -> None:
            parents.append(parent)
            decorations.append(tree.decoration)
            me = len(parents)
            for child in tree.children:
                visit(child, me)

        for tree in self.trees:
            visit(tree, 0)
        return tuple(parents), tuple(decorations)

    @classmethod
    def from_preorder(
            cls,
            parents: Sequence[int],
            decorations: Sequence[Optional[Decoration]],
            keep: Optional[Sequence[int]] = None
    ) -> "PlanarForest":
        """
        전위 부모 배열에서 (유도된) 평면 숲 복원

        Args:
            parents: 정점 v 의 부모 parents[v-1] (0 = 뿌리)
            decorations: 정점별 장식
            keep: 남길 정점 (오름차순); 부모가 빠지면 그 정점은 뿌리가 된다

        Returns:
            PlanarForest: 전위 순서와 형제 순서를 보존한 유도 부분숲
        """
        vertices = list(keep) if keep is not None else list(range(1, len(parents) + 1))
        kept = set(vertices)
        children: Dict[int, List[int]] = {v: [] for v in vertices}
        roots: List[int] = []
        for v in vertices:
            p = parents[v - 1]
            if p and p in kept:
                children[p].append(v)
            else:
                roots.append(v)

        def build(v: int) -> PlanarTree:
            return PlanarTree(tuple(build(c) for c in children[v]), decorations[v - 1])

        return cls(tuple(build(r) for r in roots))


@dataclass(frozen=True)
class OrderedForest:
    """
    라벨 1..n 위의 뿌리 숲 (H_o 의 기저 원소)

    parents[i-1] 은 정점 i 의 부모 라벨 (0 = 뿌리). 평면 배치는 라벨 순서로 유도된다.
    """
    parents: Tuple[int, ...] = ()

    def __post_init__(self):
        n = len(self.parents)
        for v, p in enumerate(self.parents, start=1):
            if not 0 <= p <= n or p == v:
                raise InvalidInputError(f"vertex {v} has invalid parent {p}")
        for v in range(1, n + 1):
            seen = 0
            u = v
            while u:
                u = self.parents[u - 1]
                seen += 1
                if seen > n:
                    raise InvalidInputError("parent relation is cyclic")

    @property
    def degree(self) -> int:
        return len(self.parents)

    def is_empty(self) -> bool:
        return not self.parents

    def parent(self, v: int) -> int:
        return self.parents[v - 1]

    def roots(self) -> List[int]:
        return [v for v, p in enumerate(self.parents, start=1) if p == 0]

    def children(self, v: int) -> List[int]:
        return [w for w, p in enumerate(self.parents, start=1) if p == v]

    def is_heap_ordered(self) -> bool:
        """모든 정점의 라벨이 부모 라벨보다 큰가"""
        return all(p < v for v, p in enumerate(self.parents, start=1))

    def to_text(self) -> str:
        if not self.parents:
            return EMPTY_FOREST_TEXT

        def tree_text(v: int) -> str:
            kids = self.children(v)
            if not kids:
                return str(v)
            return f"{v}(" + ",".join(tree_text(c) for c in kids) + ")"

        return " ".join(tree_text(r) for r in self.roots())


@dataclass(frozen=True)
class RootedForest:
    """
    비평면 뿌리 숲 (Connes-Kreimer H 의 기저 원소)

    형제 나무와 뿌리 나무를 정규 텍스트 순으로 정렬한 평면 대표원을 갖는다.
    """
    representative: PlanarForest = field(default_factory=PlanarForest)

    @classmethod
    def of(cls, forest: PlanarForest) -> "RootedForest":
        def canon(tree: PlanarTree) -> PlanarTree:
            kids = sorted((canon(c) for c in tree.children), key=lambda t: t.to_text())
            return PlanarTree(tuple(kids), tree.decoration)

        trees = sorted((canon(t) for t in forest.trees), key=lambda t: t.to_text())
        return cls(PlanarForest(tuple(trees)))

    @property
    def degree(self) -> int:
        return self.representative.degree

    def is_empty(self) -> bool:
        return self.representative.is_empty()

    def to_text(self) -> str:
        return self.representative.to_text()


@dataclass(frozen=True)
class AdmissibleCut:
    """
    허용 절단: 서로 조상-자손 관계가 없는 정점 집합과 그 Lea/Roo 정점 집합

    정점 번호는 평면 숲이면 전위 순서, 순서 숲이면 라벨.
    """
    vertices: FrozenSet[int]
    lea: FrozenSet[int]
    roo: FrozenSet[int]

    def is_empty(self) -> bool:
        return not self.vertices

    def is_total(self) -> bool:
        return not self.roo


@dataclass(frozen=True)
class LabeledForest:
    """
    표준화 전의 라벨 부분숲: (라벨, 부모 라벨) 쌍 (부모 0 = 뿌리)

    절단의 Lea/Roo 처럼 원래 숲의 라벨을 그대로 갖는 부분 구조.
    """
    pairs: Tuple[Tuple[int, int], ...] = ()

    @property
    def degree(self) -> int:
        return len(self.pairs)

    def labels(self) -> List[int]:
        return [label for label, _ in self.pairs]

    def to_text(self) -> str:
        if not self.pairs:
            return EMPTY_FOREST_TEXT
        parent_of = dict(self.pairs)

        def tree_text(v: int) -> str:
            kids = sorted(w for w, p in self.pairs if p == v)
            if not kids:
                return str(v)
            return f"{v}(" + ",".join(tree_text(c) for c in kids) + ")"

        roots = sorted(v for v, p in parent_of.items() if p == 0)
        return " ".join(tree_text(r) for r in roots)


@dataclass(frozen=True)
class Grafting:
    """
    F 를 G 에 접목한 결과 H 하나 (H 의 절단 하나에 대응, Lea = F, Roo = G)

    last_root_from_f: H 의 마지막 뿌리가 F 에서 왔는가
    rightmost_leaf_from_f: H 의 가장 오른쪽 잎이 F 에서 왔는가
    """
    forest: PlanarForest
    last_root_from_f: bool
    rightmost_leaf_from_f: bool
