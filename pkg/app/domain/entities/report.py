"""
Law verification and certificate entities
app/domain/entities/report.py
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from app.domain.entities.linear import GradedMap


@dataclass
class LawCheck:
    """
    법칙 하나의 검증 결과

    failures 는 실패한 기저 튜플의 텍스트 (정렬됨).
    """
    law: str
    carrier: str
    degree: int
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class IsoCertificate:
    """
    강성 정리 구성의 절단 인증서

    alphabet_sizes[k] 는 (k+1) 차 Prim_tot 차원, ranks 는 차수별 φ 의 계수.
    """
    carrier: str
    degree: int
    alphabet_sizes: List[int]
    ranks: Dict[int, int]
    dimensions: Dict[int, int]
    phi: GradedMap
    phi_inverse: Optional[GradedMap] = None
    laws: List[LawCheck] = field(default_factory=list)

    @property
    def full_rank(self) -> bool:
        return all(self.ranks.get(n) == d for n, d in self.dimensions.items())

    @property
    def passed(self) -> bool:
        return self.full_rank and all(law.passed for law in self.laws)
