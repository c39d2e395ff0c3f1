"""
Workbench service - parses operands, applies degree guards and dispatches to the algebra services
app/services/workbench_service.py
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from app.core.config import settings
from app.core.exceptions import InfeasibleDegreeError, InvalidInputError
from app.core.logging import logger
from app.domain.entities.forest import AdmissibleCut
from app.domain.entities.linear import GradedMap, LinComb
from app.domain.entities.report import IsoCertificate, LawCheck
from app.domain.entities.series import PowerSeries
from app.domain.interfaces.algebra import SIDES, Side
from app.domain.interfaces.basis_repository import BasisRepositoryProtocol
from app.repositories.basis_repository import basis_repository
from app.services import series_service
from app.services.dupdend_service import (
    CORRUPTIONS, CorruptedCarrier, DupDendService, build_isomorphism, compose_isomorphism,
    untwist_cop, verify_dupdend_morphism, verify_hopf_iso, verify_hopf_morphism
)
from app.services.forest_algebras import PlanarAlgebra
from app.services.forest_service import FOREST_KINDS, CutPart, admissible_cuts, enumerate_forests, forest_factorial
from app.services.hopf_service import DUAL_RULES, DualDendriformService, HopfService, dual_dendriform, dual_product
from app.services.parsing import (
    parse_alphabet, parse_lincomb, parse_ordered, parse_planar, parse_rooted, parse_word
)
from app.services.registry import algebra_for, carrier_for
from app.services.theta_service import ThetaService
from app.services.word_algebras import FQSymAlgebra, PQSymAlgebra
from app.services.word_service import WORD_KINDS, enumerate_words, inverse, is_parking, m_index, parkize, standardize

LAW_GROUPS = ("e1", "e2", "e3", "e4", "hopf", "pairing", "theta", "iterate", "dual")
CARRIER_LAW_GROUPS = ("e1", "e2", "e3", "e4", "iterate", "dual")
WORD_ACTIONS = ("parkize", "standardize", "is-parking", "m-index", "inverse")


@dataclass
class IsoResult:
    """iso 명령 결과: 두 인증서, 합성 사상과 그 검증"""
    source: str
    target: str
    degree: int
    psi: GradedMap
    certificates: List[IsoCertificate] = field(default_factory=list)
    laws: List[LawCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(law.passed for law in self.laws) and all(c.full_rank for c in self.certificates)


class WorkbenchService:
    """
    CLI 와 HTTP 표면이 공유하는 진입점

    Args:
        repository: 기저/구조 상수 캐시
        jobs: 병렬 스레드 수
        force: 차수 가드 무시
    """

    def __init__(
            self,
            repository: Optional[BasisRepositoryProtocol] = None,
            jobs: Optional[int] = None,
            force: bool = False
    ):
        self.repo = repository or basis_repository
        self.jobs = jobs or settings.JOBS
        self.force = force

    # ------------------------------------------------------------------
    # 공통
    # ------------------------------------------------------------------

    def guard(self, command: str, degree: int) -> None:
        """
        Raises:
            InvalidInputError: 음수 차수
            InfeasibleDegreeError: 가드 초과 (force 가 아닐 때)
        """
        if degree < 0:
            raise InvalidInputError(f"degree must be non-negative, got {degree}")
        limit = settings.guard_for(command)
        if degree > limit and not self.force:
            raise InfeasibleDegreeError(command, degree, limit)

    def algebra(self, name: str, alphabet: Optional[str] = None) -> Any:
        return algebra_for(name, parse_alphabet(alphabet) if alphabet else None, self.repo)

    def carrier(self, name: str, alphabet: Optional[str] = None, corrupt: Optional[str] = None) -> Any:
        carrier = carrier_for(name, parse_alphabet(alphabet) if alphabet else None, self.repo)
        if corrupt:
            if corrupt not in CORRUPTIONS:
                raise InvalidInputError(f"unknown corruption {corrupt!r}; expected one of {', '.join(CORRUPTIONS)}")
            logger.warning(f"⚠️ Seeding a {corrupt} corruption into {carrier.name}")
            carrier = CorruptedCarrier(carrier, corrupt)
        return carrier

    def element(self, algebra: Any, text: str) -> LinComb:
        return parse_lincomb(text, algebra.parse_key)

    # ------------------------------------------------------------------
    # 열거와 숲 유틸리티
    # ------------------------------------------------------------------

    def enumerate(self, kind: str, degree: int, alphabet: Optional[str] = None) -> List[Any]:
        """숲 종류 또는 단어 종류 (permutation, parking) 의 n 차 기저"""
        self.guard("enumerate", degree)
        if kind in WORD_KINDS:
            return enumerate_words(kind, degree)
        if kind not in FOREST_KINDS:
            raise InvalidInputError(f"unknown kind {kind!r}; expected one of {', '.join(FOREST_KINDS + WORD_KINDS)}")
        return enumerate_forests(kind, degree, parse_alphabet(alphabet) if alphabet else None)

    def parse_forest(self, kind: str, text: str, alphabet: Optional[str] = None) -> Any:
        if kind == "ordered":
            return parse_ordered(text)
        if kind == "rooted":
            return parse_rooted(text)
        if kind == "heap-ordered":
            return self.algebra("hho").parse_key(text)
        if kind in ("planar", "planar-decorated"):
            return parse_planar(text, parse_alphabet(alphabet) if alphabet else None)
        raise InvalidInputError(f"unknown forest kind {kind!r}")

    def cuts(self, kind: str, text: str, alphabet: Optional[str] = None) -> List[Tuple[AdmissibleCut, CutPart, CutPart]]:
        """모든 허용 절단 (순서 숲 부분은 원래 라벨 유지)"""
        return admissible_cuts(self.parse_forest(kind, text, alphabet))

    def factorial(self, kind: str, text: str) -> int:
        return forest_factorial(self.parse_forest(kind, text))

    # ------------------------------------------------------------------
    # 대수 연산
    # ------------------------------------------------------------------

    def multiply(self, algebra_name: str, left: str, right: str, alphabet: Optional[str] = None) -> LinComb:
        algebra = self.algebra(algebra_name, alphabet)
        service = HopfService(algebra, self.repo)
        return service.product(self.element(algebra, left), self.element(algebra, right))

    def nwarrow(self, algebra_name: str, left: str, right: str, alphabet: Optional[str] = None) -> LinComb:
        algebra = self.algebra(algebra_name, alphabet)
        service = HopfService(algebra, self.repo)
        return service.nwarrow(self.element(algebra, left), self.element(algebra, right))

    def comultiply(self, algebra_name: str, text: str, reduced: bool = False, alphabet: Optional[str] = None) -> LinComb:
        algebra = self.algebra(algebra_name, alphabet)
        service = HopfService(algebra, self.repo)
        x = self.element(algebra, text)
        return service.reduced_coproduct(x) if reduced else service.coproduct(x)

    def split(self, algebra_name: str, side: Side, text: str, alphabet: Optional[str] = None) -> LinComb:
        if side not in SIDES:
            raise InvalidInputError(f"side must be one of {', '.join(SIDES)}")
        algebra = self.algebra(algebra_name, alphabet)
        return HopfService(algebra, self.repo).delta_split(self.element(algebra, text), side)

    def antipode(self, algebra_name: str, text: str, alphabet: Optional[str] = None) -> LinComb:
        algebra = self.algebra(algebra_name, alphabet)
        return HopfService(algebra, self.repo).antipode(self.element(algebra, text))

    def dual(self, side: Optional[str], left: str, right: str, rule: str = "root") -> LinComb:
        """Z 기저 곱 (side 없음), ≺ 또는 ≻"""
        if rule not in DUAL_RULES:
            raise InvalidInputError(f"rule must be one of {', '.join(DUAL_RULES)}")
        algebra = PlanarAlgebra(repository=self.repo)
        x, y = self.element(algebra, left), self.element(algebra, right)
        if side is None:
            return dual_product(x, y)
        if side not in SIDES:
            raise InvalidInputError(f"side must be one of {', '.join(SIDES)}")
        return dual_dendriform(side, x, y, rule)

    def word(self, action: str, text: str) -> Any:
        word = parse_word(text)
        if action == "parkize":
            return parkize(word)
        if action == "standardize":
            return standardize(word)
        if action == "is-parking":
            return is_parking(word)
        if action == "m-index":
            return m_index(word)
        if action == "inverse":
            return inverse(word)
        raise InvalidInputError(f"unknown word action {action!r}; expected one of {', '.join(WORD_ACTIONS)}")

    # ------------------------------------------------------------------
    # Θ 와 짝짓기
    # ------------------------------------------------------------------

    def theta(self, text: str) -> LinComb:
        service = ThetaService(self.repo)
        return service.theta(self.element(service.ordered, text))

    def pairing(self, left: str, right: str) -> Fraction:
        service = ThetaService(self.repo)
        return service.pairing_of(self.element(service.ordered, left), self.element(service.ordered, right))

    def pairing_matrix(self, degree: int) -> Tuple[List[Any], List[List[int]]]:
        self.guard("pairing-matrix", degree)
        service = ThetaService(self.repo)
        return service.ordered.basis(degree), service.pairing_matrix(degree, self.jobs)

    def kernel(self, degree: int, of: str = "pairing") -> List[LinComb]:
        """짝짓기 (또는 Θ) 의 n 차 핵 기저"""
        self.guard("kernel", degree)
        service = ThetaService(self.repo)
        if of == "pairing":
            return service.pairing_kernel_basis(degree)
        if of == "theta":
            return service.theta_kernel_basis(degree)
        raise InvalidInputError(f"kernel of {of!r}; expected pairing or theta")

    # ------------------------------------------------------------------
    # Dup-Dend
    # ------------------------------------------------------------------

    def primtot(self, carrier_name: str, degree: int, dimension_only: bool = False) -> Tuple[int, List[LinComb]]:
        self.guard("primtot", degree)
        service = DupDendService(self.carrier(carrier_name), self.repo, self.jobs)
        if dimension_only:
            return service.prim_tot_dimension(degree), []
        basis = service.prim_tot(degree)
        return len(basis), basis

    def deg_p(self, carrier_name: str, text: str) -> int:
        carrier = self.carrier(carrier_name)
        return DupDendService(carrier, self.repo).deg_p(self.element(carrier, text))

    def iterate(self, carrier_name: str, steps: Sequence[Tuple[Side, int]], text: str) -> LinComb:
        carrier = self.carrier(carrier_name)
        return DupDendService(carrier, self.repo).iterated_coproduct(self.element(carrier, text), steps)

    def verify(
            self,
            carrier_name: Optional[str],
            laws: Sequence[str],
            degree: int,
            corrupt: Optional[str] = None,
            alphabet: Optional[str] = None,
            algebra_name: Optional[str] = None
    ) -> List[LawCheck]:
        """
        법칙 묶음 검증

        Args:
            carrier_name: hp, ho, hho, pqsym, fqsym (hopf 만 돌릴 때 algebra_name 으로 대신할 수 있음)
            laws: LAW_GROUPS 의 부분집합
            degree: 전체 차수 상한
            corrupt: 음성 대조군용 구조 상수 변조 (product, nwarrow, prec, succ)
            algebra_name: hopf 묶음을 돌릴 대수 (ALGEBRA_NAMES, ck 와 cop 아닌 pqsym/fqsym 포함)

        Returns:
            List[LawCheck]: 실행 순서대로의 보고서
        """
        self.guard("verify", degree)
        unknown = [law for law in laws if law not in LAW_GROUPS]
        if unknown:
            raise InvalidInputError(f"unknown law groups {unknown}; expected a subset of {', '.join(LAW_GROUPS)}")
        if algebra_name and "hopf" not in laws:
            raise InvalidInputError("an algebra applies to the hopf law group only")
        needs_carrier = [law for law in laws if law in CARRIER_LAW_GROUPS]
        if "hopf" in laws and not algebra_name:
            needs_carrier.append("hopf")
        if carrier_name is None and (needs_carrier or corrupt):
            raise InvalidInputError(f"a carrier is required for {', '.join(needs_carrier) or 'corrupt'}")
        carrier = self.carrier(carrier_name, alphabet, corrupt) if carrier_name else None
        reports: List[LawCheck] = []
        if carrier is not None:
            dupdend = DupDendService(carrier, self.repo, self.jobs)
            reports += dupdend.check_all(degree, [law for law in laws if law in ("e1", "e2", "e3", "e4")])
            if "iterate" in laws:
                reports.append(dupdend.check_iterate_partition(degree))
        if "hopf" in laws:
            target = self.algebra(algebra_name, alphabet) if algebra_name else carrier
            reports += HopfService(target, self.repo).check_hopf(degree, self.jobs)
        if "dual" in laws:
            if not isinstance(carrier, PlanarAlgebra) or carrier.alphabet is not None:
                raise InvalidInputError("the dual dendriform suite runs on the undecorated planar carrier hp")
            dual = DualDendriformService(carrier)
            reports += dual.check_duality(degree, "leaf", self.jobs)
            for rule in DUAL_RULES:
                reports += dual.check_dendriform(degree, rule, self.jobs)
        if "pairing" in laws or "theta" in laws:
            theta = ThetaService(self.repo)
            if "pairing" in laws:
                reports += [
                    theta.check_lemma(degree),
                    theta.check_isometry(degree),
                    theta.check_kernel_coincidence(degree),
                    theta.check_factorial_identity(degree),
                ]
                reports += theta.check_pairing_hopf(degree, self.jobs)
            if "theta" in laws:
                reports += self.verify_theta(theta, degree)
        failed = sum(not r.passed for r in reports)
        label = carrier.name if carrier is not None else algebra_name or "-"
        logger.info(f"verify {label} {','.join(laws)} ≤{degree}: {len(reports) - failed}/{len(reports)} passed")
        return reports

    def verify_theta(self, theta: ThetaService, degree: int) -> List[LawCheck]:
        """Θ: Hopf 사상 (두 관점), Dup-Dend 사상, H_ho 제한의 동형"""
        fqsym_cop = FQSymAlgebra(cop=True, repository=self.repo)
        reports = theta.check_morphism(degree, jobs=self.jobs)
        reports += theta.check_morphism(degree, cop_view=True, jobs=self.jobs)
        reports += [theta.check_restriction_iso(degree), theta.check_orbit(degree)]
        reports += verify_dupdend_morphism(theta.theta_map(degree), theta.ordered, fqsym_cop, degree, self.jobs)
        reports += verify_hopf_iso(theta.theta_map(degree, heap_only=True), theta.heap, fqsym_cop, degree, self.jobs)
        return reports

    def certificate(self, carrier_name: str, degree: int, verify: bool = True) -> IsoCertificate:
        self.guard("iso", degree)
        return build_isomorphism(self.carrier(carrier_name), degree, verify, self.repo)

    def iso(
            self,
            source: str,
            target: str,
            degree: int,
            via: str = "rigidity",
            untwist: bool = False,
            matching: Optional[Dict[str, str]] = None
    ) -> IsoResult:
        """
        source → target 의 명시적 동형과 그 검증

        via="theta" 는 hho → fqsym 에 대해 Θ 제한을 쓴다.
        untwist 는 ho → pqsym 합성에 χ = rev∘S 를 앞에 붙여 PQSym (cop 아님) 으로의 Hopf 동형을 검증한다.
        """
        self.guard("iso", degree)
        src = self.carrier(source)
        tgt = self.carrier(target)
        if via == "theta":
            if (source, target) != ("hho", "fqsym"):
                raise InvalidInputError("the theta route maps hho to fqsym")
            psi = ThetaService(self.repo).theta_map(degree, heap_only=True)
            result = IsoResult(source, target, degree, psi)
        elif via == "rigidity":
            first = build_isomorphism(src, degree, verify=False, repository=self.repo)
            second = build_isomorphism(tgt, degree, verify=False, repository=self.repo)
            psi = compose_isomorphism(first, second, matching)
            result = IsoResult(source, target, degree, psi, [first, second])
        else:
            raise InvalidInputError(f"unknown route {via!r}; expected rigidity or theta")
        result.laws = verify_hopf_iso(psi, src, tgt, degree, self.jobs)
        if untwist:
            if (source, target) != ("ho", "pqsym"):
                raise InvalidInputError("untwisting applies to ho -> pqsym")
            twisted = untwist_cop(psi, degree, self.repo)
            result.laws += verify_hopf_morphism(
                twisted,
                HopfService(src, self.repo),
                HopfService(PQSymAlgebra(cop=False, repository=self.repo), self.repo),
                degree,
                self.jobs,
            )
        return result

    # ------------------------------------------------------------------
    # 급수
    # ------------------------------------------------------------------

    def series(self, direction: str, source: str, order: int) -> PowerSeries:
        """
        direction="to-alphabet": f → f_D, "from-alphabet": f_D → f

        source 는 이름 (ordered, heap-ordered, catalan, x) 또는 계수 목록.
        """
        self.guard("series", order)
        if any(ch.isdigit() for ch in source):
            value = series_service.parse_series(source, order)
        else:
            value = series_service.named_series(source, order)
        if direction == "to-alphabet":
            return series_service.series_to_alphabet(value, order)
        if direction == "from-alphabet":
            return series_service.series_from_alphabet(value, order)
        raise InvalidInputError(f"unknown direction {direction!r}; expected to-alphabet or from-alphabet")

    def alphabet_dimensions(self, name: str, order: int) -> List[Fraction]:
        """series_to_alphabet 로 얻은 D 의 차수별 크기 (1 차부터)"""
        return list(series_service.dimension_list(self.series("to-alphabet", name, order), start=1))
