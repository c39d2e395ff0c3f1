"""
Theta and pairing API endpoints (v1)
app/api/v1/theta.py
"""
from fastapi import APIRouter, Depends, Query

from app.api.dependencies import get_workbench_service
from app.domain.entities.linear import format_scalar, key_text
from app.schemas.algebra import ElementResponse, ScalarResponse
from app.schemas.report import KernelResponse, MatrixResponse
from app.services.workbench_service import WorkbenchService

router = APIRouter(prefix="/theta", tags=["theta"])


@router.get("/", response_model=ElementResponse, response_model_exclude_none=True)
def theta(element: str, service: WorkbenchService = Depends(get_workbench_service)):
    """Θ(x) ∈ FQSym"""
    return ElementResponse.of("fqsym", service.theta(element))


@router.get("/pairing", response_model=ScalarResponse)
def pairing(left: str, right: str, service: WorkbenchService = Depends(get_workbench_service)):
    """⟨x, y⟩"""
    return ScalarResponse(value=format_scalar(service.pairing(left, right)))


@router.get("/pairing-matrix", response_model=MatrixResponse)
def pairing_matrix(
        degree: int = Query(..., ge=1),
        service: WorkbenchService = Depends(get_workbench_service)
):
    """n 차 짝짓기 행렬"""
    basis, matrix = service.pairing_matrix(degree)
    return MatrixResponse(degree=degree, basis=[key_text(b) for b in basis], matrix=matrix)


@router.get("/kernel", response_model=KernelResponse)
def kernel(
        degree: int = Query(..., ge=1),
        of: str = Query("pairing", pattern=r"^(pairing|theta)$"),
        service: WorkbenchService = Depends(get_workbench_service)
):
    """짝짓기 / Θ 의 핵"""
    basis = service.kernel(degree, of)
    return KernelResponse(degree=degree, of=of, dimension=len(basis), basis=[b.to_text() for b in basis])
