"""
Theta service - the morphism Θ, the ordered-forest pairing and their identities
app/services/theta_service.py
"""
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import factorial
from typing import Dict, Hashable, List, Optional, Sequence, Set, Tuple

from app.core.exceptions import InvalidInputError
from app.core.logging import logger
from app.domain.entities.forest import OrderedForest
from app.domain.entities.linear import GradedMap, LinComb, tensor_map
from app.domain.entities.report import LawCheck
from app.domain.entities.word import ParkingWord
from app.domain.interfaces.basis_repository import BasisRepositoryProtocol
from app.repositories.basis_repository import basis_repository
from app.services import linalg
from app.services.forest_algebras import HeapOrderedAlgebra, OrderedAlgebra
from app.services.forest_service import forest_factorial, underlying_rooted
from app.services.law_runner import basis_tuples, check_law
from app.services.word_algebras import FQSymAlgebra
from app.services.word_service import fqsym_pairing, inverse

Matrix = List[List[Fraction]]


def _reach(forest: OrderedForest) -> List[Set[int]]:
    """reach[v] = {w : v ↠ w} (v 자신과 조상)"""
    out: List[Set[int]] = [set()]
    for v in range(1, forest.degree + 1):
        ancestors = set()
        u = v
        while u:
            ancestors.add(u)
            u = forest.parent(u)
        out.append(ancestors)
    return out


def s_set(forest: OrderedForest) -> List[ParkingWord]:
    """
    S_F: (i ↠ j) ⟹ σ⁻¹(i) ≥ σ⁻¹(j) 인 순열 (조상이 자손보다 앞에 오는 단어)

    선형 확장을 깊이 우선으로 생성하며 크기는 n!/F!.
    """
    n = forest.degree
    words: List[ParkingWord] = []
    placed = [False] * (n + 1)
    word: List[int] = []

    def extend() -> None:
        if len(word) == n:
            words.append(ParkingWord(tuple(word)))
            return
        for v in range(1, n + 1):
            p = forest.parent(v)
            if not placed[v] and (p == 0 or placed[p]):
                placed[v] = True
                word.append(v)
                extend()
                word.pop()
                placed[v] = False

    extend()
    words.sort(key=lambda w: w.to_text())
    return words


def theta_basis(forest: OrderedForest) -> LinComb:
    return LinComb.from_keys(s_set(forest))


def pair_set(left: OrderedForest, right: OrderedForest) -> List[ParkingWord]:
    """
    S(F, G): (x↠y in F ⟹ f(x) ≥ f(y)) 이고 (f(x)↠f(y) in G ⟹ x ≥ y) 인 전단사 f

    정점 1, 2, … 순으로 값을 정하며, 이미 정한 정점과의 제약을 즉시 검사한다.
    결과는 단어 (f(1), …, f(n)).
    """
    n = left.degree
    if right.degree != n:
        return []
    reach_f = _reach(left)
    reach_g = _reach(right)
    image = [0] * (n + 1)
    used = [False] * (n + 1)
    found: List[ParkingWord] = []

    def consistent(x: int) -> bool:
        fx = image[x]
        for y in range(1, x):
            fy = image[y]
            if y in reach_f[x] and fx < fy:
                return False
            if x in reach_f[y] and fy < fx:
                return False
            if fy in reach_g[fx] and x < y:
                return False
            if fx in reach_g[fy] and y < x:
                return False
        return True

    def assign(x: int) -> None:
        if x > n:
            found.append(ParkingWord(tuple(image[1:])))
            return
        for value in range(1, n + 1):
            if used[value]:
                continue
            image[x] = value
            if consistent(x):
                used[value] = True
                assign(x + 1)
                used[value] = False
        image[x] = 0

    assign(1)
    return found


def pairing(left: OrderedForest, right: OrderedForest) -> int:
    """⟨F, G⟩ = |S(F, G)| (차수가 다르면 0)"""
    return len(pair_set(left, right))


class ThetaService:
    """Θ 의 차수별 행렬, 짝짓기 행렬, 핵과 그 항등식 검증"""

    def __init__(self, repository: Optional[BasisRepositoryProtocol] = None):
        self.repo = repository or basis_repository
        self.ordered = OrderedAlgebra(self.repo)
        self.heap = HeapOrderedAlgebra(self.repo)
        self.fqsym = FQSymAlgebra(repository=self.repo)

    # ------------------------------------------------------------------
    # Θ
    # ------------------------------------------------------------------

    def theta(self, x: LinComb) -> LinComb:
        """
        Θ 의 선형 확장

        Raises:
            InvalidInputError: 순서 숲이 아닌 키
        """
        for key in x.keys():
            if not isinstance(key, OrderedForest):
                raise InvalidInputError(f"Θ is defined on ordered forests, got {key!r}")
        return x.apply(theta_basis)

    def theta_matrix(self, n: int) -> Matrix:
        """행 = n 차 순열, 열 = n 차 순서 숲 (저장소에 캐시)"""
        def compute() -> Matrix:
            logger.debug(f"Assembling Θ matrix in degree {n}")
            return theta_map_degree(self.ordered.basis(n), self.fqsym.basis(n))

        return self.repo.get_or_compute("theta-matrix", n, compute)

    def theta_map(self, degree: int, heap_only: bool = False) -> GradedMap:
        """Θ (또는 H_ho 로의 제한) 를 1..degree 차의 GradedMap 으로"""
        source = self.heap if heap_only else self.ordered
        sources = {n: source.basis(n) for n in range(1, degree + 1)}
        targets = {n: self.fqsym.basis(n) for n in range(1, degree + 1)}
        images = {n: {key: theta_basis(key) for key in sources[n]} for n in sources}
        return GradedMap("theta|hho" if heap_only else "theta", sources, targets, images)

    def theta_kernel_basis(self, n: int) -> List[LinComb]:
        basis = self.ordered.basis(n)
        vectors = linalg.kernel_basis(self.theta_matrix(n), ncols=len(basis))
        return [linalg.combination(v, basis) for v in vectors]

    # ------------------------------------------------------------------
    # 짝짓기
    # ------------------------------------------------------------------

    def pairing_matrix(self, n: int, jobs: int = 1) -> List[List[int]]:
        """
        정규 기저 순서의 대칭 짝짓기 행렬

        Args:
            n: 차수 (≥ 1)
            jobs: 행 단위 병렬 스레드 수 (결과는 동일)
        """
        if n < 1:
            raise InvalidInputError(f"pairing matrix needs degree ≥ 1, got {n}")
        basis = self.ordered.basis(n)

        def row(f: OrderedForest) -> List[int]:
            return [pairing(f, g) for g in basis]

        def compute() -> List[List[int]]:
            logger.debug(f"Assembling pairing matrix in degree {n} ({len(basis)}x{len(basis)})")
            if jobs > 1:
                with ThreadPoolExecutor(max_workers=jobs) as pool:
                    return list(pool.map(row, basis))
            return [row(f) for f in basis]

        return self.repo.get_or_compute("pairing-matrix", n, compute)

    def pairing_kernel_basis(self, n: int) -> List[LinComb]:
        basis = self.ordered.basis(n)
        vectors = linalg.kernel_basis(self.pairing_matrix(n), ncols=len(basis))
        return [linalg.combination(v, basis) for v in vectors]

    def pairing_of(self, x: LinComb, y: LinComb) -> Fraction:
        """⟨x, y⟩ 의 쌍선형 확장"""
        total = Fraction(0)
        for a, ca in x.raw_items():
            for b, cb in y.raw_items():
                total += ca * cb * pairing(a, b)
        return total

    # ------------------------------------------------------------------
    # 항등식
    # ------------------------------------------------------------------

    def check_morphism(self, degree: int, cop_view: bool = False, jobs: int = 1) -> List[LawCheck]:
        """
        Θ(xy) = Θ(x)Θ(y) 와
        Δ_FQSym∘Θ = (Θ⊗Θ)∘Δ^op (cop_view 이면 Δ^op_FQSym∘Θ = (Θ⊗Θ)∘Δ)
        """
        def mult(case: Tuple) -> bool:
            a, b = case
            return theta_basis(a).bilinear(theta_basis(b), self.fqsym.product_basis) == \
                self.theta(self.ordered.product_basis(a, b))

        def comult(case: Tuple) -> bool:
            a = case[0]
            forest_side = self.ordered.coproduct_basis(a)
            word_side = theta_basis(a).apply(self.fqsym.coproduct_basis)
            if cop_view:
                word_side = word_side.map_keys(lambda k: (k[1], k[0]))
            else:
                forest_side = forest_side.map_keys(lambda k: (k[1], k[0]))
            return tensor_map(forest_side, (theta_basis, theta_basis)) == word_side

        suffix = ".cop" if cop_view else ""
        return [
            check_law(f"theta.product{suffix}", "ho", degree, basis_tuples(self.ordered, 2, degree), mult, jobs),
            check_law(f"theta.coproduct{suffix}", "ho", degree,
                      basis_tuples(self.ordered, 1, degree, min_degree=0), comult, jobs),
        ]

    def check_restriction_iso(self, degree: int) -> LawCheck:
        """H_ho 위의 Θ 행렬이 n! × n! 가역"""
        def holds(case: Tuple) -> bool:
            n = case[0]
            heap_basis = self.heap.basis(n)
            m = theta_map_degree(heap_basis, self.fqsym.basis(n))
            return len(heap_basis) == factorial(n) and linalg.rank(m) == factorial(n)

        cases = [(n,) for n in range(1, degree + 1)]
        return check_law("theta.restriction-iso", "hho", degree, cases, holds)

    def check_lemma(self, degree: int) -> LawCheck:
        """S(F, G) = S_F⁻¹ ∩ S_G"""
        def holds(case: Tuple) -> bool:
            f, g = case
            inverted = {inverse(w) for w in s_set(f)}
            return set(pair_set(f, g)) == inverted & set(s_set(g))

        cases = self._same_degree_pairs(degree)
        return check_law("pairing.lemma", "ho", degree, cases, holds)

    def check_isometry(self, degree: int) -> LawCheck:
        """⟨F, G⟩ = ⟨Θ(F), Θ(G)⟩_FQSym"""
        def holds(case: Tuple) -> bool:
            f, g = case
            value = sum(fqsym_pairing(s, t) for s in s_set(f) for t in s_set(g))
            return pairing(f, g) == value

        cases = self._same_degree_pairs(degree)
        return check_law("pairing.isometry", "ho", degree, cases, holds)

    def check_kernel_coincidence(self, degree: int) -> LawCheck:
        """짝짓기 핵 = Ker Θ (부분공간), 따라서 계수 = n!"""
        def holds(case: Tuple) -> bool:
            n = case[0]
            size = len(self.ordered.basis(n))
            pairing_kernel = linalg.kernel_basis(self.pairing_matrix(n), ncols=size)
            theta_kernel = linalg.kernel_basis(self.theta_matrix(n), ncols=size)
            return linalg.same_span(pairing_kernel, theta_kernel, size) and \
                linalg.rank(self.pairing_matrix(n)) == factorial(n)

        cases = [(n,) for n in range(1, degree + 1)]
        return check_law("pairing.kernel", "ho", degree, cases, holds)

    def check_factorial_identity(self, degree: int) -> LawCheck:
        """⟨•…•, F⟩ = |S_F| = n!/F!"""
        def holds(case: Tuple) -> bool:
            f = case[0]
            n = f.degree
            dots = OrderedForest((0,) * n)
            expected = factorial(n) // forest_factorial(f)
            return pairing(dots, f) == expected and len(s_set(f)) == expected

        cases = basis_tuples(self.ordered, 1, degree)
        return check_law("pairing.factorial", "ho", degree, cases, holds)

    def check_pairing_hopf(self, degree: int, jobs: int = 1) -> List[LawCheck]:
        """대칭성과 ⟨F₁F₂, G⟩ = ⟨F₁⊗F₂, Δ^op(G)⟩"""
        def symmetric(case: Tuple) -> bool:
            return pairing(case[0], case[1]) == pairing(case[1], case[0])

        def hopf(case: Tuple) -> bool:
            f1, f2, g = case
            left = pairing(self.ordered.product_basis(f1, f2).keys()[0], g)
            right = sum(
                coeff * pairing(f1, b) * pairing(f2, a)
                for (a, b), coeff in self.ordered.coproduct_basis(g).raw_items()
            )
            return left == right

        triples = [
            (f1, f2, g)
            for f1, f2 in basis_tuples(self.ordered, 2, degree)
            for g in self.ordered.basis(f1.degree + f2.degree)
        ]
        return [
            check_law("pairing.symmetry", "ho", degree, self._same_degree_pairs(degree), symmetric, jobs),
            check_law("pairing.hopf", "ho", degree, triples, hopf, jobs),
        ]

    def check_orbit(self, degree: int) -> LawCheck:
        """|S_F| 는 밑에 있는 뿌리 숲에만 의존"""
        def holds(case: Tuple) -> bool:
            n = case[0]
            sizes: Dict[Hashable, Set[int]] = {}
            for f in self.ordered.basis(n):
                sizes.setdefault(underlying_rooted(f), set()).add(len(s_set(f)))
            return all(len(values) == 1 for values in sizes.values())

        cases = [(n,) for n in range(1, degree + 1)]
        return check_law("theta.orbit", "ho", degree, cases, holds)

    def check_all(self, degree: int, jobs: int = 1) -> List[LawCheck]:
        reports = self.check_morphism(degree, jobs=jobs) + self.check_morphism(degree, cop_view=True, jobs=jobs)
        reports += [
            self.check_restriction_iso(degree),
            self.check_lemma(degree),
            self.check_isometry(degree),
            self.check_kernel_coincidence(degree),
            self.check_factorial_identity(degree),
            self.check_orbit(degree),
        ]
        reports += self.check_pairing_hopf(degree, jobs)
        return reports

    def _same_degree_pairs(self, degree: int) -> List[Tuple]:
        return [
            (f, g)
            for n in range(1, degree + 1)
            for f in self.ordered.basis(n)
            for g in self.ordered.basis(n)
        ]


def theta_map_degree(sources: Sequence[OrderedForest], targets: Sequence[ParkingWord]) -> Matrix:
    row_of = {w: i for i, w in enumerate(targets)}
    m = [[Fraction(0)] * len(sources) for _ in targets]
    for j, forest in enumerate(sources):
        for word in s_set(forest):
            m[row_of[word]][j] += 1
    return m
