"""
Forest combinatorics - cuts, enumeration, grafting, relabeling
app/services/forest_service.py
"""
from functools import lru_cache
from itertools import combinations_with_replacement, product
from math import prod
from typing import Dict, FrozenSet, List, Literal, Optional, Sequence, Tuple, Union

from app.core.exceptions import AlgebraMismatchError, InvalidInputError
from app.core.logging import logger
from app.domain.entities.forest import (
    AdmissibleCut, Decoration, GradedAlphabet, Grafting, LabeledForest,
    OrderedForest, PlanarForest, PlanarTree, RootedForest
)

ForestKind = Literal["rooted", "planar", "planar-decorated", "ordered", "heap-ordered"]
FOREST_KINDS = ("rooted", "planar", "planar-decorated", "ordered", "heap-ordered")

AnyForest = Union[PlanarForest, OrderedForest, RootedForest]
CutPart = Union[PlanarForest, OrderedForest, RootedForest, LabeledForest]


# ================================================================================
# 부모 배열 위의 절단 엔진
# ================================================================================

def vertex_parents(forest: AnyForest) -> Tuple[int, ...]:
    """
    정점 번호 → 부모 배열

    평면/뿌리 숲은 전위 순서 번호, 순서 숲은 라벨을 정점 번호로 쓴다.
    """
    if isinstance(forest, OrderedForest):
        return forest.parents
    if isinstance(forest, RootedForest):
        return forest.representative.preorder()[0]
    if isinstance(forest, PlanarForest):
        return forest.preorder()[0]
    raise InvalidInputError(f"not a forest: {forest!r}")


def _children(parents: Sequence[int]) -> Dict[int, List[int]]:
    children: Dict[int, List[int]] = {v: [] for v in range(len(parents) + 1)}
    for v, p in enumerate(parents, start=1):
        children[p].append(v)
    return children


def _check_vertex(parents: Sequence[int], v: int) -> None:
    if not 1 <= v <= len(parents):
        raise InvalidInputError(f"vertex {v} out of range 1..{len(parents)}")


def path_reaches(forest: AnyForest, v: int, w: int) -> bool:
    """
    v ↠ w: 뿌리 방향 경로가 v 에서 w 에 닿는가 (반사적)

    Raises:
        InvalidInputError: 범위 밖 정점
    """
    parents = vertex_parents(forest)
    _check_vertex(parents, v)
    _check_vertex(parents, w)
    u = v
    while u:
        if u == w:
            return True
        u = parents[u - 1]
    return False


@lru_cache(maxsize=None)
def antichains(parents: Tuple[int, ...]) -> Tuple[FrozenSet[int], ...]:
    """
    서로 ↠ 관계가 없는 정점 집합 전체 (빈 집합 포함)

    나무 v 의 절단 = {v} 하나, 또는 자식 나무 절단들의 곱. 숲은 뿌리별 곱.
    결과는 (크기, 정렬된 정점) 순.
    """
    children = _children(parents)

    def down(v: int) -> List[FrozenSet[int]]:
        combos: List[FrozenSet[int]] = [frozenset()]
        for c in children[v]:
            below = down(c)
            combos = [a | b for a in combos for b in below]
        return [frozenset((v,))] + combos

    top: List[FrozenSet[int]] = [frozenset()]
    for r in children[0]:
        below = down(r)
        top = [a | b for a in top for b in below]
    return tuple(sorted(top, key=lambda s: (len(s), sorted(s))))


def _lea(parents: Sequence[int], cut: FrozenSet[int]) -> FrozenSet[int]:
    lea = set()
    for w in range(1, len(parents) + 1):
        u = w
        while u:
            if u in cut:
                lea.add(w)
                break
            u = parents[u - 1]
    return frozenset(lea)


@lru_cache(maxsize=None)
def cut_sets(parents: Tuple[int, ...]) -> Tuple[AdmissibleCut, ...]:
    everything = frozenset(range(1, len(parents) + 1))
    cuts = []
    for vertices in antichains(parents):
        lea = _lea(parents, vertices)
        cuts.append(AdmissibleCut(vertices, lea, everything - lea))
    return tuple(cuts)


def labeled_part(parents: Sequence[int], keep: FrozenSet[int]) -> LabeledForest:
    """유도 라벨 부분숲 (부모가 빠진 정점은 뿌리)"""
    return LabeledForest(tuple(
        (v, parents[v - 1] if parents[v - 1] in keep else 0)
        for v in sorted(keep)
    ))


def _part(forest: AnyForest, keep: FrozenSet[int], standardize: bool) -> CutPart:
    if isinstance(forest, OrderedForest):
        part = labeled_part(forest.parents, keep)
        return restandardize(part) if standardize else part
    planar = forest.representative if isinstance(forest, RootedForest) else forest
    parents, decorations = planar.preorder()
    sub = PlanarForest.from_preorder(parents, decorations, sorted(keep))
    return RootedForest.of(sub) if isinstance(forest, RootedForest) else sub


def admissible_cuts(
        forest: AnyForest,
        standardize: bool = False
) -> List[Tuple[AdmissibleCut, CutPart, CutPart]]:
    """
    모든 허용 절단과 (Lea, Roo) 부분

    Args:
        forest: 평면, 뿌리 또는 순서 숲
        standardize: 순서 숲 부분을 1..k 로 재표준화할지 여부

    Returns:
        List[Tuple[AdmissibleCut, CutPart, CutPart]]: 빈 절단과 전체 절단 포함
    """
    return [
        (cut, _part(forest, cut.lea, standardize), _part(forest, cut.roo, standardize))
        for cut in cut_sets(vertex_parents(forest))
    ]


# ================================================================================
# 라벨 연산
# ================================================================================

def restandardize(part: Union[LabeledForest, Sequence[Tuple[int, int]]]) -> OrderedForest:
    """
    증가 전단사로 라벨을 1..k 로 바꾼 순서 숲

    Raises:
        InvalidInputError: 중복 라벨 또는 부분숲 밖의 부모
    """
    pairs = part.pairs if isinstance(part, LabeledForest) else tuple(part)
    labels = [label for label, _ in pairs]
    if len(set(labels)) != len(labels):
        raise InvalidInputError(f"duplicate labels in {labels}")
    rank = {label: i for i, label in enumerate(sorted(labels), start=1)}
    parents = [0] * len(labels)
    for label, parent in pairs:
        if parent and parent not in rank:
            raise InvalidInputError(f"parent {parent} of {label} is not in the part")
        parents[rank[label] - 1] = rank[parent] if parent else 0
    return OrderedForest(tuple(parents))


def reverse_labels(forest: OrderedForest) -> OrderedForest:
    """라벨 i ↦ n+1−i"""
    n = forest.degree
    parents = [0] * n
    for v, p in enumerate(forest.parents, start=1):
        parents[n - v] = n + 1 - p if p else 0
    return OrderedForest(tuple(parents))


def shift(forest: OrderedForest, offset: int) -> Tuple[int, ...]:
    return tuple(p + offset if p else 0 for p in forest.parents)


# ================================================================================
# 곱과 접목
# ================================================================================

def concat(left: AnyForest, right: AnyForest) -> AnyForest:
    """
    숲의 곱: 평면은 이어붙이기, 순서 숲은 오른쪽을 deg(left) 만큼 밀고 합집합

    Raises:
        AlgebraMismatchError: 종류가 다른 두 숲
    """
    if type(left) is not type(right):
        raise AlgebraMismatchError(f"cannot multiply {type(left).__name__} by {type(right).__name__}")
    if isinstance(left, OrderedForest):
        return OrderedForest(left.parents + shift(right, left.degree))
    if isinstance(left, RootedForest):
        return RootedForest.of(PlanarForest(left.representative.trees + right.representative.trees))
    return PlanarForest(left.trees + right.trees)


def _require_nonempty(*forests: AnyForest) -> None:
    if any(f.is_empty() for f in forests):
        raise InvalidInputError("grafting needs non-empty forests")


def _graft_on_last(tree: PlanarTree, trees: Tuple[PlanarTree, ...]) -> PlanarTree:
    if not tree.children:
        return PlanarTree(trees, tree.decoration)
    return PlanarTree(tree.children[:-1] + (_graft_on_last(tree.children[-1], trees),), tree.decoration)


def _graft_on_first(tree: PlanarTree, trees: Tuple[PlanarTree, ...]) -> PlanarTree:
    if not tree.children:
        return PlanarTree(trees, tree.decoration)
    return PlanarTree((_graft_on_first(tree.children[0], trees),) + tree.children[1:], tree.decoration)


def graft_rightmost(left: PlanarForest, right: PlanarForest) -> PlanarForest:
    """F ↖ G: G 의 나무들을 F 의 가장 오른쪽 잎의 자식으로"""
    _require_nonempty(left, right)
    return PlanarForest(left.trees[:-1] + (_graft_on_last(left.trees[-1], right.trees),))


def graft_leftmost(left: PlanarForest, right: PlanarForest) -> PlanarForest:
    """F ↗ G: F 의 나무들을 G 의 가장 왼쪽 잎의 자식으로"""
    _require_nonempty(left, right)
    return PlanarForest((_graft_on_first(right.trees[0], left.trees),) + right.trees[1:])


def graft_greatest(left: OrderedForest, right: OrderedForest) -> OrderedForest:
    """F ↖ G: G 를 deg(F) 만큼 밀고 그 뿌리들을 F 의 최대 정점 deg(F) 에 접목"""
    _require_nonempty(left, right)
    m = left.degree
    grafted = tuple(p + m if p else m for p in right.parents)
    return OrderedForest(left.parents + grafted)


def mirror(forest: PlanarForest) -> PlanarForest:
    """모든 형제 순서와 뿌리 순서를 뒤집은 평면 숲"""
    def flip(tree: PlanarTree) -> PlanarTree:
        return PlanarTree(tuple(flip(c) for c in reversed(tree.children)), tree.decoration)

    return PlanarForest(tuple(flip(t) for t in reversed(forest.trees)))


def bplus(forest: PlanarForest, decoration: Optional[Decoration] = None) -> PlanarTree:
    """
    B⁺: 새 뿌리 아래에 숲을 순서대로 붙인 나무

    Raises:
        InvalidInputError: 장식 숲인데 뿌리 장식이 없음
    """
    if decoration is None and forest.is_decorated():
        raise InvalidInputError("a decorated forest needs a decoration for the new root")
    return PlanarTree(forest.trees, decoration)


def forest_factorial(forest: AnyForest) -> int:
    """F! = Π_v |{w : w ↠ v}|"""
    parents = vertex_parents(forest)
    sizes = [1] * len(parents)
    # 순서 숲에서는 부모 라벨이 자식보다 클 수 있다
    for w in range(1, len(parents) + 1):
        u = parents[w - 1]
        while u:
            sizes[u - 1] += 1
            u = parents[u - 1]
    return prod(sizes)


# ================================================================================
# 접목 (쌍대 곱의 조합론)
# ================================================================================

def _gaps(forest: PlanarForest) -> Tuple[List[Tuple[int, int]], int]:
    """
    전위 순회 순서의 삽입 틈 목록과, 마지막 정점 뒤에 오는 첫 틈의 위치

    틈 (v, i) 는 정점 v 의 i 번째 자식 앞 (v = 0 은 뿌리 층).
    """
    gaps: List[Tuple[int, int]] = []
    counter = [0]
    after_last = [0]

    def visit(tree: PlanarTree) -> None:
        counter[0] += 1
        me = counter[0]
        after_last[0] = len(gaps)
        for i, child in enumerate(tree.children):
            gaps.append((me, i))
            visit(child)
        gaps.append((me, len(tree.children)))

    for i, tree in enumerate(forest.trees):
        gaps.append((0, i))
        visit(tree)
    gaps.append((0, len(forest.trees)))
    return gaps, after_last[0]


def _insert(forest: PlanarForest, inserted: Dict[Tuple[int, int], List[PlanarTree]]) -> PlanarForest:
    counter = [0]

    def build_children(owner: int, children: Sequence[PlanarTree]) -> Tuple[PlanarTree, ...]:
        out: List[PlanarTree] = []
        for i, child in enumerate(children):
            out.extend(inserted.get((owner, i), ()))
            out.append(build(child))
        out.extend(inserted.get((owner, len(children)), ()))
        return tuple(out)

    def build(tree: PlanarTree) -> PlanarTree:
        counter[0] += 1
        return PlanarTree(build_children(counter[0], tree.children), tree.decoration)

    return PlanarForest(build_children(0, forest.trees))


def graftings(left: PlanarForest, right: PlanarForest) -> List[Grafting]:
    """
    F 를 G 에 접목한 모든 H (H 의 절단 중 Lea = F, Roo = G 인 것마다 하나)

    F 의 나무들을 순서대로 G 의 삽입 틈들에 (비감소 위치로) 배분한다.
    같은 틈에 들어간 나무들은 F 의 순서를 유지한다.

    Raises:
        InvalidInputError: 빈 입력
    """
    _require_nonempty(left, right)
    gaps, after_last = _gaps(right)
    root_gap = len(gaps) - 1
    results: List[Grafting] = []
    for choice in combinations_with_replacement(range(len(gaps)), len(left.trees)):
        inserted: Dict[Tuple[int, int], List[PlanarTree]] = {}
        for tree, gap in zip(left.trees, choice):
            inserted.setdefault(gaps[gap], []).append(tree)
        results.append(Grafting(
            forest=_insert(right, inserted),
            last_root_from_f=choice[-1] == root_gap,
            rightmost_leaf_from_f=choice[-1] >= after_last,
        ))
    logger.debug(f"graftings: {left.to_text()} on {right.to_text()} -> {len(results)}")
    return results


# ================================================================================
# 열거
# ================================================================================

def _planar_forests(n: int, alphabet: Optional[GradedAlphabet]) -> List[PlanarForest]:
    table: Dict[int, List[Tuple[PlanarTree, ...]]] = {0: [()]}
    trees: Dict[int, List[PlanarTree]] = {}
    for m in range(1, n + 1):
        trees[m] = []
        if alphabet is None:
            trees[m] = [PlanarTree(kids) for kids in table[m - 1]]
        else:
            for decoration in alphabet.symbols:
                if decoration.degree <= m:
                    trees[m].extend(PlanarTree(kids, decoration) for kids in table[m - decoration.degree])
        table[m] = [
            (tree,) + rest
            for k in range(1, m + 1)
            for tree in trees[k]
            for rest in table[m - k]
        ]
    return [PlanarForest(f) for f in table[n]]


def _acyclic(parents: Sequence[int]) -> bool:
    n = len(parents)
    state = [0] * (n + 1)
    for v in range(1, n + 1):
        path = []
        u = v
        while u and state[u] == 0:
            state[u] = 1
            path.append(u)
            u = parents[u - 1]
        if u and state[u] == 1:
            return False
        for w in path:
            state[w] = 2
    return True


def _ordered_forests(n: int) -> List[OrderedForest]:
    found = []
    for parents in product(range(n + 1), repeat=n):
        if any(p == v for v, p in enumerate(parents, start=1)):
            continue
        if _acyclic(parents):
            found.append(OrderedForest(parents))
    return found


def _heap_ordered_forests(n: int) -> List[OrderedForest]:
    return [OrderedForest(parents) for parents in product(*(range(v) for v in range(1, n + 1)))]


def enumerate_forests(
        kind: ForestKind,
        n: int,
        alphabet: Optional[GradedAlphabet] = None
) -> List[AnyForest]:
    """
    n 차 숲 전체 (중복 없음, 정규 텍스트 순)

    Raises:
        InvalidInputError: 음수 차수, 알 수 없는 종류, 알파벳 없는 장식 열거
    """
    if n < 0:
        raise InvalidInputError(f"degree must be non-negative, got {n}")
    if kind == "planar":
        found: List[AnyForest] = list(_planar_forests(n, None))
    elif kind == "planar-decorated":
        if alphabet is None:
            raise InvalidInputError("decorated enumeration needs an alphabet")
        found = list(_planar_forests(n, alphabet))
    elif kind == "rooted":
        found = list({RootedForest.of(f) for f in _planar_forests(n, None)})
    elif kind == "ordered":
        found = list(_ordered_forests(n))
    elif kind == "heap-ordered":
        found = list(_heap_ordered_forests(n))
    else:
        raise InvalidInputError(f"unknown forest kind {kind!r}")
    found.sort(key=lambda f: f.to_text())
    logger.debug(f"enumerate {kind} degree {n}: {len(found)} forests")
    return found


def planar_layout(forest: OrderedForest) -> PlanarForest:
    """순서 숲의 평면 배치 (뿌리와 형제를 라벨 순으로)"""
    def tree(v: int) -> PlanarTree:
        return PlanarTree(tuple(tree(c) for c in forest.children(v)))

    return PlanarForest(tuple(tree(r) for r in forest.roots()))


def underlying_rooted(forest: AnyForest) -> RootedForest:
    if isinstance(forest, RootedForest):
        return forest
    if isinstance(forest, OrderedForest):
        return RootedForest.of(planar_layout(forest))
    return RootedForest.of(forest)
