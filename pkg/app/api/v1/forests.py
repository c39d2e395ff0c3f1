"""
Forest API endpoints (v1)
app/api/v1/forests.py
"""
from fastapi import APIRouter, Depends, Query
from typing import Optional

from app.api.dependencies import get_workbench_service
from app.domain.entities.linear import key_text
from app.schemas.algebra import ScalarResponse
from app.schemas.forest import CutSchema, CutsResponse, EnumerateResponse
from app.services.workbench_service import WorkbenchService

router = APIRouter(prefix="/forests", tags=["forests"])


@router.get("/enumerate", response_model=EnumerateResponse)
def enumerate_basis(
        kind: str = Query(..., examples=["ordered"]),
        degree: int = Query(..., ge=0),
        alphabet: Optional[str] = None,
        service: WorkbenchService = Depends(get_workbench_service)
):
    """n 차 기저 (숲 종류 또는 permutation / parking)"""
    items = service.enumerate(kind, degree, alphabet)
    return EnumerateResponse(kind=kind, degree=degree, count=len(items), items=[key_text(i) for i in items])


@router.get("/cuts", response_model=CutsResponse)
def list_cuts(
        forest: str,
        kind: str = "ordered",
        alphabet: Optional[str] = None,
        service: WorkbenchService = Depends(get_workbench_service)
):
    """허용 절단 목록"""
    cuts = service.cuts(kind, forest, alphabet)
    return CutsResponse(
        forest=forest,
        cuts=[CutSchema(vertices=sorted(c.vertices), lea=key_text(lea), roo=key_text(roo)) for c, lea, roo in cuts]
    )


@router.get("/factorial", response_model=ScalarResponse)
def factorial(
        forest: str,
        kind: str = "planar",
        service: WorkbenchService = Depends(get_workbench_service)
):
    """F!"""
    return ScalarResponse(value=str(service.factorial(kind, forest)))
