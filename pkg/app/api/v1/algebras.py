"""
Algebra API endpoints (v1)
app/api/v1/algebras.py
"""
from fastapi import APIRouter, Depends, Query

from app.api.dependencies import get_workbench_service
from app.schemas.algebra import BinaryRequest, DualRequest, ElementResponse, UnaryRequest
from app.services.workbench_service import WorkbenchService

router = APIRouter(prefix="/algebras", tags=["algebras"])


@router.post("/mul", response_model=ElementResponse, response_model_exclude_none=True)
def multiply(request: BinaryRequest, service: WorkbenchService = Depends(get_workbench_service)):
    """곱"""
    value = service.multiply(request.algebra, request.left, request.right, request.alphabet)
    return ElementResponse.of(request.algebra, value)


@router.post("/nwarrow", response_model=ElementResponse, response_model_exclude_none=True)
def nwarrow(request: BinaryRequest, service: WorkbenchService = Depends(get_workbench_service)):
    """↖ 곱"""
    value = service.nwarrow(request.algebra, request.left, request.right, request.alphabet)
    return ElementResponse.of(request.algebra, value)


@router.post("/comul", response_model=ElementResponse, response_model_exclude_none=True)
def comultiply(
        request: UnaryRequest,
        reduced: bool = Query(False),
        service: WorkbenchService = Depends(get_workbench_service)
):
    """쌍대곱"""
    value = service.comultiply(request.algebra, request.element, reduced, request.alphabet)
    return ElementResponse.of(request.algebra, value)


@router.post("/split/{side}", response_model=ElementResponse, response_model_exclude_none=True)
def split(side: str, request: UnaryRequest, service: WorkbenchService = Depends(get_workbench_service)):
    """δ≺ (prec) / δ≻ (succ)"""
    value = service.split(request.algebra, side, request.element, request.alphabet)
    return ElementResponse.of(request.algebra, value)


@router.post("/antipode", response_model=ElementResponse, response_model_exclude_none=True)
def antipode(request: UnaryRequest, service: WorkbenchService = Depends(get_workbench_service)):
    """대합사상"""
    value = service.antipode(request.algebra, request.element, request.alphabet)
    return ElementResponse.of(request.algebra, value)


@router.post("/dual", response_model=ElementResponse, response_model_exclude_none=True)
def dual(request: DualRequest, service: WorkbenchService = Depends(get_workbench_service)):
    """평면 숲 쌍대 기저의 곱 / ≺ / ≻"""
    value = service.dual(request.side, request.left, request.right, request.rule)
    return ElementResponse.of("hp-dual", value)
