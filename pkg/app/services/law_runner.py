"""
Law verification runner - basis tuples, parallel evaluation, reports
app/services/law_runner.py
"""
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import Any, Callable, List, Sequence, Tuple

from app.core.logging import logger
from app.domain.entities.linear import key_text
from app.domain.entities.report import LawCheck


def basis_tuples(algebra: Any, arity: int, max_total: int, min_degree: int = 1) -> List[Tuple]:
    """
    차수 합이 max_total 이하인 기저 튜플 (각 성분 차수 ≥ min_degree)

    차수 조합 순서, 각 조합 안에서는 기저의 정규 순서.
    """
    tuples: List[Tuple] = []
    degrees = range(min_degree, max_total + 1)
    for combo in product(degrees, repeat=arity):
        if sum(combo) > max_total:
            continue
        tuples.extend(product(*(algebra.basis(d) for d in combo)))
    return tuples


def case_label(case: Tuple) -> str:
    return " | ".join(key_text(key) for key in case)


def check_law(
        law: str,
        carrier: str,
        degree: int,
        cases: Sequence[Tuple],
        holds: Callable[[Tuple], bool],
        jobs: int = 1
) -> LawCheck:
    """
    모든 경우에 대해 법칙 검사

    Args:
        law: 법칙 이름 (예: "e1.assoc")
        carrier: 대수 이름
        degree: 검사한 최대 전체 차수
        cases: 기저 튜플
        holds: 경우 하나에서 법칙이 성립하면 True
        jobs: 스레드 수 (결과 순서와 무관)

    Returns:
        LawCheck: 실패 목록은 정렬되어 있음
    """
    if jobs > 1 and len(cases) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(holds, cases))
    else:
        outcomes = [holds(case) for case in cases]
    failures = sorted(case_label(case) for case, ok in zip(cases, outcomes) if not ok)
    report = LawCheck(law=law, carrier=carrier, degree=degree, checked=len(cases), failures=failures)
    if failures:
        logger.warning(f"❌ {law} on {carrier} (≤{degree}): {len(failures)}/{len(cases)} failed, first {failures[0]}")
    else:
        logger.info(f"✅ {law} on {carrier} (≤{degree}): {len(cases)} cases")
    return report
