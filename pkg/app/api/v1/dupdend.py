"""
Dup-Dend API endpoints (v1)
app/api/v1/dupdend.py
"""
from fastapi import APIRouter, Depends, Query
from typing import Optional

from app.api.dependencies import get_workbench_service
from app.schemas.report import (
    CertificateResponse, GradedMapSchema, IsoResponse, LawReport, PrimTotResponse, VerifyResponse
)
from app.services.parsing import parse_matching
from app.services.workbench_service import WorkbenchService

router = APIRouter(prefix="/dupdend", tags=["dupdend"])


@router.get("/primtot", response_model=PrimTotResponse)
def primtot(
        carrier: str,
        degree: int = Query(..., ge=1),
        dimension_only: bool = False,
        service: WorkbenchService = Depends(get_workbench_service)
):
    """Prim_tot 기저 (또는 차원만)"""
    dimension, basis = service.primtot(carrier, degree, dimension_only)
    return PrimTotResponse(carrier=carrier, degree=degree, dimension=dimension, basis=[b.to_text() for b in basis])


@router.get("/verify", response_model=VerifyResponse)
def verify(
        carrier: Optional[str] = None,
        laws: str = "e1,e2,e3,e4",
        degree: int = Query(3, ge=0),
        corrupt: Optional[str] = None,
        alphabet: Optional[str] = None,
        algebra: Optional[str] = None,
        service: WorkbenchService = Depends(get_workbench_service)
):
    """법칙 검증 보고서 (실패도 200 으로 보고)"""
    groups = [law.strip() for law in laws.split(",") if law.strip()]
    reports = service.verify(carrier, groups, degree, corrupt, alphabet, algebra)
    return VerifyResponse(
        carrier=carrier or algebra or "",
        degree=degree,
        passed=all(r.passed for r in reports),
        laws=[LawReport.model_validate(r) for r in reports]
    )


@router.get("/certificate", response_model=CertificateResponse)
def certificate(
        carrier: str,
        degree: int = Query(3, ge=1),
        verify_laws: bool = True,
        service: WorkbenchService = Depends(get_workbench_service)
):
    """강성 정리 인증서"""
    cert = service.certificate(carrier, degree, verify_laws)
    return CertificateResponse(
        carrier=cert.carrier,
        degree=cert.degree,
        alphabet_sizes=cert.alphabet_sizes,
        ranks=cert.ranks,
        dimensions=cert.dimensions,
        full_rank=cert.full_rank,
        passed=cert.passed,
        laws=[LawReport.model_validate(r) for r in cert.laws],
        phi=GradedMapSchema.of(cert.phi)
    )


@router.get("/iso", response_model=IsoResponse)
def iso(
        source: str,
        target: str,
        degree: int = Query(3, ge=1),
        via: str = Query("rigidity", pattern=r"^(rigidity|theta)$"),
        untwist: bool = False,
        match: Optional[str] = None,
        service: WorkbenchService = Depends(get_workbench_service)
):
    """명시적 동형과 검증"""
    result = service.iso(source, target, degree, via, untwist, parse_matching(match) if match else None)
    return IsoResponse(
        source=source,
        target=target,
        degree=degree,
        passed=result.passed,
        alphabet_sizes=[c.alphabet_sizes for c in result.certificates],
        laws=[LawReport.model_validate(r) for r in result.laws],
        psi=GradedMapSchema.of(result.psi)
    )
