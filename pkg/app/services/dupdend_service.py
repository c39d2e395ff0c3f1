"""
Dup-Dend service - law suites, Prim_tot, free duplicial morphisms, isomorphism certificates
app/services/dupdend_service.py
"""
import random
from fractions import Fraction
from typing import Any, Callable, Dict, Hashable, List, Literal, Optional, Sequence, Tuple

from app.core.exceptions import (
    AugmentationError, DegreeMismatchError, InvalidInputError, RankDeficiencyError
)
from app.core.logging import logger
from app.domain.entities.forest import GradedAlphabet, PlanarForest, PlanarTree
from app.domain.entities.linear import GradedMap, LinComb, tensor, tensor_map
from app.domain.entities.report import IsoCertificate, LawCheck
from app.domain.interfaces.algebra import SIDES, DupDendCarrierProtocol, Side
from app.domain.interfaces.basis_repository import BasisRepositoryProtocol
from app.repositories.basis_repository import basis_repository
from app.services import linalg
from app.services.forest_algebras import OrderedAlgebra, PlanarAlgebra
from app.services.forest_service import reverse_labels
from app.services.hopf_service import HopfService
from app.services.law_runner import basis_tuples, check_law

Corruption = Literal["product", "nwarrow", "prec", "succ"]
CORRUPTIONS = ("product", "nwarrow", "prec", "succ")

Step = Tuple[Side, int]


def _monomial(key: Hashable) -> LinComb:
    return LinComb.monomial(key)


class CorruptedCarrier:
    """
    구조 상수 하나를 바꾼 운반체 (음성 대조군)

    product / nwarrow: 첫 1 차 기저 원소 a 에 대해 a·a (또는 a↖a) 의 첫 항 계수에 1 을 더한다.
    prec / succ: 해당 분할이 0 이 아닌 첫 2 차 기저 원소의 첫 항 계수에 1 을 더한다.
    """

    def __init__(self, inner: Any, operation: Corruption):
        if operation not in CORRUPTIONS:
            raise InvalidInputError(f"unknown corruption {operation!r}")
        self.inner = inner
        self.operation = operation
        self.name = f"{inner.name}~{operation}"
        self._target: Optional[Tuple] = None

    def __getattr__(self, attr: str) -> Any:
        return getattr(self.inner, attr)

    def target(self) -> Tuple:
        if self._target is None:
            if self.operation in ("product", "nwarrow"):
                a = self.inner.basis(1)[0]
                self._target = (a, a)
            else:
                side = self.operation
                self._target = next(
                    (b,) for b in self.inner.basis(2) if self.inner.split_basis(b, side)
                )
        return self._target

    @staticmethod
    def _bump(value: LinComb) -> LinComb:
        first = value.keys()[0]
        return value + LinComb.monomial(first)

    def product_basis(self, a: Hashable, b: Hashable) -> LinComb:
        value = self.inner.product_basis(a, b)
        return self._bump(value) if self.operation == "product" and (a, b) == self.target() else value

    def nwarrow_basis(self, a: Hashable, b: Hashable) -> LinComb:
        value = self.inner.nwarrow_basis(a, b)
        return self._bump(value) if self.operation == "nwarrow" and (a, b) == self.target() else value

    def split_basis(self, a: Hashable, side: Side) -> LinComb:
        value = self.inner.split_basis(a, side)
        return self._bump(value) if self.operation == side and (a,) == self.target() else value


class DupDendService:
    """
    Dup-Dend 운반체 위의 선형 연산과 법칙 검증

    Args:
        carrier: product_basis, nwarrow_basis, split_basis, basis 를 갖는 대수
        jobs: 법칙 검사 스레드 수
    """

    def __init__(
            self,
            carrier: DupDendCarrierProtocol,
            repository: Optional[BasisRepositoryProtocol] = None,
            jobs: int = 1
    ):
        self.carrier = carrier
        self.repo = repository or basis_repository
        self.jobs = jobs

    # ------------------------------------------------------------------
    # 선형 연산
    # ------------------------------------------------------------------

    def mul(self, x: LinComb, y: LinComb) -> LinComb:
        return x.bilinear(y, self.carrier.product_basis)

    def nw(self, x: LinComb, y: LinComb) -> LinComb:
        return x.bilinear(y, self.carrier.nwarrow_basis)

    def split(self, x: LinComb, side: Side) -> LinComb:
        return x.apply(lambda a: self.carrier.split_basis(a, side))

    def split_tilde_basis(self, a: Hashable) -> LinComb:
        return self.carrier.split_basis(a, "prec") + self.carrier.split_basis(a, "succ")

    def _sweep(self, delta: LinComb, f: Callable[[Hashable, Hashable], LinComb]) -> LinComb:
        acc = LinComb.zero()
        for (a, b), coeff in delta.raw_items():
            acc = acc + f(a, b).scale(coeff)
        return acc

    def _sweep2(
            self,
            first: LinComb,
            second: LinComb,
            f: Callable[[Hashable, Hashable, Hashable, Hashable], LinComb]
    ) -> LinComb:
        acc = LinComb.zero()
        for (a, b), ca in first.raw_items():
            for (c, d), cc in second.raw_items():
                acc = acc + f(a, b, c, d).scale(ca * cc)
        return acc

    # ------------------------------------------------------------------
    # E1: 이중 곱 (duplicial) 대수
    # ------------------------------------------------------------------

    def check_duplicial(self, degree: int) -> List[LawCheck]:
        """(xy)z = x(yz), (x↖y)↖z = x↖(y↖z), (xy)↖z = x(y↖z)"""
        laws: Dict[str, Callable[[LinComb, LinComb, LinComb], bool]] = {
            "e1.product": lambda x, y, z: self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z)),
            "e1.nwarrow": lambda x, y, z: self.nw(self.nw(x, y), z) == self.nw(x, self.nw(y, z)),
            "e1.mixed": lambda x, y, z: self.nw(self.mul(x, y), z) == self.mul(x, self.nw(y, z)),
        }
        cases = basis_tuples(self.carrier, 3, degree)
        return [
            check_law(name, self.carrier.name, degree, cases,
                      lambda c, law=law: law(*(_monomial(k) for k in c)), self.jobs)
            for name, law in laws.items()
        ]

    # ------------------------------------------------------------------
    # E2: 덴드리폼 쌍대대수
    # ------------------------------------------------------------------

    def check_dendriform_coalgebra(self, degree: int) -> List[LawCheck]:
        """
        (δ≺⊗id)δ≺ = (id⊗δ̃)δ≺, (δ≻⊗id)δ≺ = (id⊗δ≺)δ≻, (δ̃⊗id)δ≻ = (id⊗δ≻)δ≻
        """
        prec = lambda a: self.carrier.split_basis(a, "prec")  # noqa: E731
        succ = lambda a: self.carrier.split_basis(a, "succ")  # noqa: E731
        tilde = self.split_tilde_basis

        def first(c: Tuple) -> bool:
            once = prec(c[0])
            return tensor_map(once, (prec, None)) == tensor_map(once, (None, tilde))

        def second(c: Tuple) -> bool:
            return tensor_map(prec(c[0]), (succ, None)) == tensor_map(succ(c[0]), (None, prec))

        def third(c: Tuple) -> bool:
            once = succ(c[0])
            return tensor_map(once, (tilde, None)) == tensor_map(once, (None, succ))

        cases = basis_tuples(self.carrier, 1, degree)
        name = self.carrier.name
        return [
            check_law("e2.prec-prec", name, degree, cases, first, self.jobs),
            check_law("e2.succ-prec", name, degree, cases, second, self.jobs),
            check_law("e2.succ-succ", name, degree, cases, third, self.jobs),
        ]

    # ------------------------------------------------------------------
    # E3 / E4: 호환성
    # ------------------------------------------------------------------

    def e3_rhs(self, x: Hashable, y: Hashable, side: Side) -> LinComb:
        """
        δ≺(xy) = y⊗x + x′y⊗x″ + xy′≺⊗y″≺ + y′≺⊗xy″≺ + x′y′≺⊗x″y″≺
        δ≻(xy) = x⊗y + x′⊗x″y + xy′≻⊗y″≻ + y′≻⊗xy″≻ + x′y′≻⊗x″y″≻
        (x′⊗x″ 는 δ̃ = δ≺ + δ≻)
        """
        X, Y = _monomial(x), _monomial(y)
        dx = self.split_tilde_basis(x)
        dy = self.carrier.split_basis(y, side)
        if side == "prec":
            total = tensor(Y, X) + self._sweep(dx, lambda a, b: tensor(self.mul(_monomial(a), Y), _monomial(b)))
        else:
            total = tensor(X, Y) + self._sweep(dx, lambda a, b: tensor(_monomial(a), self.mul(_monomial(b), Y)))
        total = total + self._sweep(dy, lambda c, d: tensor(self.mul(X, _monomial(c)), _monomial(d)))
        total = total + self._sweep(dy, lambda c, d: tensor(_monomial(c), self.mul(X, _monomial(d))))
        total = total + self._sweep2(dx, dy, lambda a, b, c, d: tensor(
            self.mul(_monomial(a), _monomial(c)), self.mul(_monomial(b), _monomial(d))))
        return total

    def e4_rhs(self, x: Hashable, y: Hashable, side: Side) -> LinComb:
        """
        δ≺(x↖y) = y⊗x + y′≺⊗x↖y″≺ + x′≺↖y⊗x″≺ + x′≻y⊗x″≻ + x′≻y′≺⊗x″≻↖y″≺
        δ≻(x↖y) = y′≻⊗x↖y″≻ + x′≻⊗x″≻↖y + x′≻y′≻⊗x″≻↖y″≻
        """
        X, Y = _monomial(x), _monomial(y)
        x_prec = self.carrier.split_basis(x, "prec")
        x_succ = self.carrier.split_basis(x, "succ")
        dy = self.carrier.split_basis(y, side)
        total = self._sweep(dy, lambda c, d: tensor(_monomial(c), self.nw(X, _monomial(d))))
        total = total + self._sweep2(x_succ, dy, lambda a, b, c, d: tensor(
            self.mul(_monomial(a), _monomial(c)), self.nw(_monomial(b), _monomial(d))))
        if side == "prec":
            total = total + tensor(Y, X)
            total = total + self._sweep(x_prec, lambda a, b: tensor(self.nw(_monomial(a), Y), _monomial(b)))
            total = total + self._sweep(x_succ, lambda a, b: tensor(self.mul(_monomial(a), Y), _monomial(b)))
        else:
            total = total + self._sweep(x_succ, lambda a, b: tensor(_monomial(a), self.nw(_monomial(b), Y)))
        return total

    def check_compatibilities(self, degree: int) -> List[LawCheck]:
        cases = basis_tuples(self.carrier, 2, degree)
        name = self.carrier.name
        reports = []
        for side in SIDES:
            def e3(c: Tuple, side: Side = side) -> bool:
                x, y = c
                return self.split(self.mul(_monomial(x), _monomial(y)), side) == self.e3_rhs(x, y, side)

            def e4(c: Tuple, side: Side = side) -> bool:
                x, y = c
                return self.split(self.nw(_monomial(x), _monomial(y)), side) == self.e4_rhs(x, y, side)

            reports.append(check_law(f"e3.{side}", name, degree, cases, e3, self.jobs))
            reports.append(check_law(f"e4.{side}", name, degree, cases, e4, self.jobs))
        return reports

    def check_all(self, degree: int, laws: Sequence[str] = ("e1", "e2", "e3", "e4")) -> List[LawCheck]:
        """
        선택한 법칙 묶음 실행 (e3 와 e4 는 한 번의 호환성 검사에서 함께 계산된다)
        """
        reports: List[LawCheck] = []
        if "e1" in laws:
            reports += self.check_duplicial(degree)
        if "e2" in laws:
            reports += self.check_dendriform_coalgebra(degree)
        if "e3" in laws or "e4" in laws:
            wanted = {law for law in ("e3", "e4") if law in laws}
            reports += [r for r in self.check_compatibilities(degree) if r.law.split(".")[0] in wanted]
        return reports

    # ------------------------------------------------------------------
    # Prim_tot
    # ------------------------------------------------------------------

    def _split_rows(self, n: int) -> Tuple[List[Dict[int, Fraction]], int]:
        """δ≺ 와 δ≻ 를 쌓은 n 차 행렬의 연관 행"""
        basis = self.carrier.basis(n)
        rows: Dict[Tuple[Side, Hashable], Dict[int, Fraction]] = {}
        for j, b in enumerate(basis):
            for side in SIDES:
                for pair, coeff in self.carrier.split_basis(b, side).raw_items():
                    rows.setdefault((side, pair), {})[j] = coeff
        return list(rows.values()), len(basis)

    def prim_tot(self, n: int) -> List[LinComb]:
        """
        Ker δ≺ ∩ Ker δ≻ 의 n 차 기저 (사다리꼴, 첫 0 아닌 성분 = 1)
        """
        if n < 1:
            raise InvalidInputError(f"Prim_tot needs degree ≥ 1, got {n}")

        def compute() -> List[LinComb]:
            rows, ncols = self._split_rows(n)
            logger.debug(f"Prim_tot {self.carrier.name} degree {n}: {len(rows)} rows x {ncols} columns")
            kernel = linalg.sparse_kernel(rows, ncols)
            vectors = linalg.echelon_basis(kernel, ncols)
            return [linalg.combination(v, self.carrier.basis(n)) for v in vectors]

        return self.repo.get_or_compute("prim-tot", (self.carrier.name, n), compute)

    def prim_tot_dimension(self, n: int) -> int:
        """차원만 (계수만 계산하므로 기저를 만들지 않는다)"""
        rows, ncols = self._split_rows(n)
        return ncols - linalg.sparse_rank(rows, ncols)

    # ------------------------------------------------------------------
    # 반복 쌍대곱
    # ------------------------------------------------------------------

    def iterated_coproduct(self, x: LinComb, steps: Sequence[Step]) -> LinComb:
        """
        (side, slot) 단계를 왼쪽부터 적용한 반복 분할 쌍대곱

        slot 은 현재 텐서에서 쪼갤 성분의 0 기반 위치.

        Raises:
            AugmentationError: 0 이거나 단위원 성분이 있는 원소
            InvalidInputError: 범위 밖 slot
        """
        if x.is_zero():
            raise AugmentationError("iterated coproducts need a non-zero element")
        unit = getattr(self.carrier, "unit", None)
        if unit is not None and unit() in x:
            raise AugmentationError("element has a unit component")
        current = x.map_keys(lambda k: (k,))
        for length, (side, slot) in enumerate(steps, start=1):
            if not 0 <= slot < length:
                raise InvalidInputError(f"slot {slot} out of range for a {length}-fold tensor")
            maps = tuple(
                (lambda a, s=side: self.carrier.split_basis(a, s)) if i == slot else None
                for i in range(length)
            )
            current = tensor_map(current, maps)
        return current

    def deg_p(self, x: LinComb) -> int:
        """
        deg_p(x) = k: 어떤 (k−1) 중 반복이 0 이 아니고 모든 k 중 반복이 0 (원시원은 1)
        """
        if x.is_zero():
            raise AugmentationError("deg_p needs a non-zero element")
        unit = getattr(self.carrier, "unit", None)
        if unit is not None and unit() in x:
            raise AugmentationError("element has a unit component")
        frontier = [x.map_keys(lambda k: (k,))]
        k = 0
        while frontier:
            k += 1
            following = []
            for value in frontier:
                length = len(next(iter(value.raw_items()))[0])
                for slot in range(length):
                    for side in SIDES:
                        maps = tuple(
                            (lambda a, s=side: self.carrier.split_basis(a, s)) if i == slot else None
                            for i in range(length)
                        )
                        image = tensor_map(value, maps)
                        if image:
                            following.append(image)
            frontier = following
        return k

    def check_iterate_partition(self, degree: int) -> LawCheck:
        """Σ_{s₁,s₂} (δ_{s₂} at slot)(δ_{s₁} x) = (δ̃ at slot)(δ̃ x)"""
        def holds(c: Tuple) -> bool:
            x = _monomial(c[0])
            once = tensor_map(x.map_keys(lambda k: (k,)), (self.split_tilde_basis,))
            for slot in (0, 1):
                full = tensor_map(once, tuple(self.split_tilde_basis if i == slot else None for i in range(2)))
                parts = LinComb.zero()
                for s1 in SIDES:
                    for s2 in SIDES:
                        parts = parts + self.iterated_coproduct(x, [(s1, 0), (s2, slot)])
                if parts != full:
                    return False
            return True

        cases = basis_tuples(self.carrier, 1, degree)
        return check_law("iterate.partition", self.carrier.name, degree, cases, holds, self.jobs)


# ================================================================================
# 자유 이중 곱 사상과 강성 정리 구성
# ================================================================================

def free_duplicial_morphism(
        targets: Dict[str, LinComb],
        carrier: Any,
        alphabet: GradedAlphabet,
        degree: int
) -> GradedMap:
    """
    φ: (H_p^D)_+ → carrier, φ(•_d) = a_d, φ(t₁…t_k) = φ(t₁)…φ(t_k), φ(B⁺_d(F)) = a_d ↖ φ(F)

    Args:
        targets: 장식 기호 → 운반체 원소 (같은 차수, 단위원 성분 없음)
        carrier: 대상 Dup-Dend 운반체
        alphabet: 원천 알파벳 D
        degree: 절단 차수 N

    Raises:
        DegreeMismatchError: 기호 차수와 대상 원소 차수가 다름
        AugmentationError: 대상에 단위원 성분
    """
    service = DupDendService(carrier)
    for decoration in alphabet.symbols:
        if decoration.symbol not in targets:
            raise InvalidInputError(f"no target for generator {decoration.symbol}")
        image = targets[decoration.symbol]
        unit = getattr(carrier, "unit", None)
        if unit is not None and unit() in image:
            raise AugmentationError(f"target of {decoration.symbol} has a unit component")
        for key in image.keys():
            if carrier.degree(key) != decoration.degree:
                raise DegreeMismatchError(
                    f"generator {decoration.symbol} has degree {decoration.degree}, "
                    f"target term {key!r} has degree {carrier.degree(key)}"
                )

    memo: Dict[PlanarTree, LinComb] = {}

    def tree_image(tree: PlanarTree) -> LinComb:
        if tree not in memo:
            generator = targets[tree.decoration.symbol]
            if tree.children:
                memo[tree] = service.nw(generator, forest_image(PlanarForest(tree.children)))
            else:
                memo[tree] = generator
        return memo[tree]

    def forest_image(forest: PlanarForest) -> LinComb:
        value = tree_image(forest.trees[0])
        for tree in forest.trees[1:]:
            value = service.mul(value, tree_image(tree))
        return value

    source = PlanarAlgebra(alphabet)
    sources = {n: source.basis(n) for n in range(1, degree + 1)}
    target_bases = {n: carrier.basis(n) for n in range(1, degree + 1)}
    images = {n: {f: forest_image(f) for f in sources[n]} for n in sources}
    logger.debug(f"φ into {carrier.name}: {[len(sources[n]) for n in sources]} source columns")
    return GradedMap(f"phi:{alphabet.to_text()}->{carrier.name}", sources, target_bases, images)


def decorated_generator_targets(service: DupDendService, degree: int) -> Tuple[GradedAlphabet, Dict[str, LinComb]]:
    """Prim_tot 기저 원소마다 장식 기호 하나 (d{차수}_{번호})"""
    primitives = {n: service.prim_tot(n) for n in range(1, degree + 1)}
    alphabet = GradedAlphabet.from_sizes([len(primitives[n]) for n in range(1, degree + 1)])
    targets: Dict[str, LinComb] = {}
    for n in range(1, degree + 1):
        for i, element in enumerate(primitives[n], start=1):
            targets[f"d{n}_{i}"] = element
    return alphabet, targets


def build_isomorphism(
        carrier: Any,
        degree: int,
        verify: bool = True,
        repository: Optional[BasisRepositoryProtocol] = None
) -> IsoCertificate:
    """
    강성 정리의 절단 구성: Prim_tot → 장식 알파벳 → φ → 차수별 가역성 → φ⁻¹

    Raises:
        RankDeficiencyError: 어떤 차수에서 φ 가 전단사가 아님
    """
    service = DupDendService(carrier, repository)
    alphabet, targets = decorated_generator_targets(service, degree)
    phi = free_duplicial_morphism(targets, carrier, alphabet, degree)
    ranks: Dict[int, int] = {}
    dimensions: Dict[int, int] = {}
    for n in range(1, degree + 1):
        dimensions[n] = len(carrier.basis(n))
        ranks[n] = linalg.graded_rank(phi, n)
        if len(phi.source_bases[n]) != dimensions[n] or ranks[n] != dimensions[n]:
            logger.error(
                f"💥 φ into {carrier.name} degree {n}: rank {ranks[n]}, "
                f"source {len(phi.source_bases[n])}, target {dimensions[n]}"
            )
            raise RankDeficiencyError(f"φ into {carrier.name} is not bijective in degree {n}")
    phi_inverse = linalg.invert_graded_map(phi, name=f"{phi.name}^-1")
    certificate = IsoCertificate(
        carrier=carrier.name,
        degree=degree,
        alphabet_sizes=alphabet.sizes(degree),
        ranks=ranks,
        dimensions=dimensions,
        phi=phi,
        phi_inverse=phi_inverse,
    )
    if verify:
        certificate.laws = verify_dupdend_morphism(phi, PlanarAlgebra(alphabet), carrier, degree)
    logger.info(f"✅ Certificate for {carrier.name} up to degree {degree}: alphabet {certificate.alphabet_sizes}")
    return certificate


def relabel_map(alphabet: GradedAlphabet, matching: Dict[str, str], degree: int) -> GradedMap:
    """장식 기호 치환으로 유도되는 H_p^D 의 차수별 사상"""
    lookup = {d.symbol: d for d in alphabet.symbols}

    def rename(tree: PlanarTree) -> PlanarTree:
        decoration = lookup[matching.get(tree.decoration.symbol, tree.decoration.symbol)]
        return PlanarTree(tuple(rename(c) for c in tree.children), decoration)

    algebra = PlanarAlgebra(alphabet)
    bases = {n: algebra.basis(n) for n in range(1, degree + 1)}
    images = {
        n: {f: LinComb.monomial(PlanarForest(tuple(rename(t) for t in f.trees))) for f in bases[n]}
        for n in bases
    }
    return GradedMap("relabel", bases, bases, images)


def compose_isomorphism(
        source: IsoCertificate,
        target: IsoCertificate,
        matching: Optional[Dict[str, str]] = None
) -> GradedMap:
    """
    Ψ = φ_target ∘ relabel ∘ φ_source⁻¹

    matching 이 없으면 차수별로 사다리꼴 순서의 번호끼리 짝짓는다 (같은 기호 이름).

    Raises:
        DegreeMismatchError: 어떤 차수에서 알파벳 크기가 다름
    """
    degree = min(source.degree, target.degree)
    if source.alphabet_sizes[:degree] != target.alphabet_sizes[:degree]:
        raise DegreeMismatchError(
            f"alphabet sizes differ: {source.alphabet_sizes[:degree]} vs {target.alphabet_sizes[:degree]}"
        )
    if source.phi_inverse is None:
        source.phi_inverse = linalg.invert_graded_map(source.phi)
    inner: GradedMap = source.phi_inverse
    if matching:
        alphabet = GradedAlphabet.from_sizes(source.alphabet_sizes[:degree])
        if sorted(matching) != sorted(matching.values()):
            raise InvalidInputError("a generator matching must permute its symbols")
        for old, new in matching.items():
            if alphabet.lookup(old).degree != alphabet.lookup(new).degree:
                raise DegreeMismatchError(f"matching {old} -> {new} changes the degree")
        inner = linalg.compose_graded_maps(relabel_map(alphabet, matching, degree), inner)
    psi = linalg.compose_graded_maps(target.phi, inner, name=f"psi:{source.carrier}->{target.carrier}")
    return _truncate(psi, degree)


def _truncate(m: GradedMap, degree: int) -> GradedMap:
    keep = [n for n in m.degrees() if n <= degree]
    return GradedMap(
        m.name,
        {n: m.source_bases[n] for n in keep},
        {n: m.target_bases[n] for n in keep},
        {n: m.images[n] for n in keep},
    )


# ================================================================================
# 사상 검증
# ================================================================================

def verify_dupdend_morphism(
        psi: GradedMap,
        source: Any,
        target: Any,
        degree: int,
        jobs: int = 1
) -> List[LawCheck]:
    """
    Ψ(xy) = Ψ(x)Ψ(y), Ψ(x↖y) = Ψ(x)↖Ψ(y), (Ψ⊗Ψ)δ≺ = δ≺Ψ, (Ψ⊗Ψ)δ≻ = δ≻Ψ
    """
    src = DupDendService(source, jobs=jobs)
    tgt = DupDendService(target, jobs=jobs)
    label = f"{source.name}->{target.name}"

    def image(x: LinComb) -> LinComb:
        return psi.apply(x)

    def product(c: Tuple) -> bool:
        x, y = (_monomial(k) for k in c)
        return image(src.mul(x, y)) == tgt.mul(image(x), image(y))

    def nwarrow(c: Tuple) -> bool:
        x, y = (_monomial(k) for k in c)
        return image(src.nw(x, y)) == tgt.nw(image(x), image(y))

    def split(c: Tuple, side: Side) -> bool:
        x = _monomial(c[0])
        return tensor_map(src.split(x, side), (psi.image, psi.image)) == tgt.split(image(x), side)

    pairs = basis_tuples(source, 2, degree)
    singles = basis_tuples(source, 1, degree)
    return [
        check_law("morphism.product", label, degree, pairs, product, jobs),
        check_law("morphism.nwarrow", label, degree, pairs, nwarrow, jobs),
        check_law("morphism.prec", label, degree, singles, lambda c: split(c, "prec"), jobs),
        check_law("morphism.succ", label, degree, singles, lambda c: split(c, "succ"), jobs),
    ]


def check_bijective(psi: GradedMap, degree: int, label: str) -> LawCheck:
    def holds(c: Tuple) -> bool:
        n = c[0]
        size = len(psi.source_bases.get(n, []))
        return size == len(psi.target_bases.get(n, [])) and linalg.graded_rank(psi, n) == size

    cases = [(n,) for n in range(1, degree + 1)]
    return check_law("morphism.bijective", label, degree, cases, holds)


def verify_hopf_iso(psi: GradedMap, source: Any, target: Any, degree: int, jobs: int = 1) -> List[LawCheck]:
    """
    Dup-Dend 사상 법칙 + 차수별 가역성

    δ≺ + δ≻ 가 축약 쌍대곱이므로 통과하면 단위/쌍대단위 확장은 Hopf 동형이다.
    """
    reports = verify_dupdend_morphism(psi, source, target, degree, jobs)
    reports.append(check_bijective(psi, degree, f"{source.name}->{target.name}"))
    return reports


def verify_hopf_morphism(
        psi: GradedMap,
        source: HopfService,
        target: HopfService,
        degree: int,
        jobs: int = 1
) -> List[LawCheck]:
    """
    단위원 ↦ 단위원 으로 확장한 Ψ 의 곱셈성과 (전체) 쌍대곱 호환성
    """
    src_unit = source.algebra.unit()
    tgt_unit = target.algebra.unit()
    label = f"{source.algebra.name}->{target.algebra.name}"

    def image_basis(key: Hashable) -> LinComb:
        return LinComb.monomial(tgt_unit) if key == src_unit else psi.image(key)

    def image(x: LinComb) -> LinComb:
        return x.apply(image_basis)

    def product(c: Tuple) -> bool:
        x, y = (_monomial(k) for k in c)
        return image(source.product(x, y)) == target.product(image(x), image(y))

    def coproduct(c: Tuple) -> bool:
        x = _monomial(c[0])
        return tensor_map(source.coproduct(x), (image_basis, image_basis)) == target.coproduct(image(x))

    pairs = basis_tuples(source.algebra, 2, degree, min_degree=0)
    singles = basis_tuples(source.algebra, 1, degree, min_degree=0)
    return [
        check_law("hopf-morphism.product", label, degree, pairs, product, jobs),
        check_law("hopf-morphism.coproduct", label, degree, singles, coproduct, jobs),
        check_bijective(psi, degree, label),
    ]


def untwist_cop(psi: GradedMap, degree: int, repository: Optional[BasisRepositoryProtocol] = None) -> GradedMap:
    """
    Ψ: H_o → PQSym^cop 에 χ = rev∘S (H_o → H_o^cop 동형) 을 앞에 합성한 Ψ∘χ: H_o → PQSym
    """
    ordered = HopfService(OrderedAlgebra(repository), repository)

    def chi(key: Hashable) -> LinComb:
        return ordered.antipode_basis(key).map_keys(reverse_labels)

    keep = [n for n in psi.degrees() if n <= degree]
    images = {n: {key: psi.apply(chi(key)) for key in psi.source_bases[n]} for n in keep}
    return GradedMap(
        f"{psi.name}∘chi",
        {n: psi.source_bases[n] for n in keep},
        {n: psi.target_bases[n] for n in keep},
        images,
    )


def random_graded_map(source: Any, target: Any, degree: int, seed: int = 0) -> GradedMap:
    """
    차수별 무작위 가역 사상 (대각 1 인 상삼각 행렬, 음성 대조군)
    """
    rng = random.Random(seed)
    sources = {n: source.basis(n) for n in range(1, degree + 1)}
    targets = {n: target.basis(n) for n in range(1, degree + 1)}
    matrices = {}
    for n in sources:
        size = len(sources[n])
        if size != len(targets[n]):
            raise DegreeMismatchError(f"dimensions differ in degree {n}")
        matrices[n] = [
            [Fraction(1) if i == j else (Fraction(rng.randint(1, 5)) if j > i else Fraction(0)) for j in range(size)]
            for i in range(size)
        ]
    return linalg.graded_map_from_matrices(f"random:{seed}", sources, targets, matrices)
