"""
Series API endpoints (v1)
app/api/v1/series.py
"""
from fastapi import APIRouter, Depends, Query

from app.api.dependencies import get_workbench_service
from app.schemas.series import SeriesResponse
from app.services.workbench_service import WorkbenchService

router = APIRouter(prefix="/series", tags=["series"])


@router.get("/", response_model=SeriesResponse)
def convert(
        source: str = "ordered",
        direction: str = Query("to-alphabet", pattern=r"^(to-alphabet|from-alphabet)$"),
        order: int = Query(8, ge=0),
        service: WorkbenchService = Depends(get_workbench_service)
):
    """f ↔ f_D 변환"""
    value = service.series(direction, source, order)
    return SeriesResponse(direction=direction, source=source, order=order, coefficients=value.to_json())
