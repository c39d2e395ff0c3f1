"""
API dependencies - Dependency Injection setup
app/api/dependencies.py
"""
from fastapi import Depends, Query

from app.core.config import settings
from app.domain.interfaces.basis_repository import BasisRepositoryProtocol
from app.repositories.basis_repository import basis_repository
from app.services.workbench_service import WorkbenchService


# Repository factories
def get_basis_repository() -> BasisRepositoryProtocol:
    """
    프로세스 공유 기저 캐시

    Returns:
        BasisRepositoryProtocol: 기저/구조 상수 저장소
    """
    return basis_repository


# Service factories (with dependency injection)
def get_workbench_service(
    repository: BasisRepositoryProtocol = Depends(get_basis_repository),
    jobs: int = Query(None, ge=1, description="검증 병렬 스레드 수"),
    force: bool = Query(False, description="차수 가드 무시")
) -> WorkbenchService:
    """
    WorkbenchService 인스턴스 생성 (Repository 주입)

    Args:
        repository: 주입될 저장소
        jobs: 스레드 수 (없으면 설정값)
        force: 차수 가드 무시 여부

    Returns:
        WorkbenchService: 워크벤치 서비스
    """
    return WorkbenchService(repository, jobs or settings.JOBS, force)
