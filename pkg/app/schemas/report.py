"""
Verification schemas - law reports, graded maps, certificates
app/schemas/report.py
"""
from pydantic import BaseModel

from app.domain.entities.linear import GradedMap, key_text


class LawReport(BaseModel):
    """법칙 하나의 검증 결과"""
    law: str
    carrier: str
    degree: int
    checked: int
    failures: list[str]
    passed: bool

    class Config:
        from_attributes = True


class VerifyResponse(BaseModel):
    carrier: str
    degree: int
    passed: bool
    laws: list[LawReport]


class MatrixBlock(BaseModel):
    """차수 하나의 행렬 (행 = 목표 기저, 열 = 원천 기저, 유리수 문자열)"""
    degree: int
    sources: list[str]
    targets: list[str]
    matrix: list[list[str]]


class GradedMapSchema(BaseModel):
    name: str
    blocks: list[MatrixBlock]

    @classmethod
    def of(cls, graded_map: GradedMap) -> "GradedMapSchema":
        return cls(
            name=graded_map.name,
            blocks=[
                MatrixBlock(
                    degree=n,
                    sources=[key_text(k) for k in graded_map.source_bases[n]],
                    targets=[key_text(k) for k in graded_map.target_bases[n]],
                    matrix=graded_map.matrix_text(n),
                )
                for n in graded_map.degrees()
            ]
        )


class CertificateResponse(BaseModel):
    """강성 정리 구성의 절단 인증서"""
    carrier: str
    degree: int
    alphabet_sizes: list[int]
    ranks: dict[int, int]
    dimensions: dict[int, int]
    full_rank: bool
    passed: bool
    laws: list[LawReport]
    phi: GradedMapSchema


class IsoResponse(BaseModel):
    source: str
    target: str
    degree: int
    passed: bool
    alphabet_sizes: list[list[int]]
    laws: list[LawReport]
    psi: GradedMapSchema


class PrimTotResponse(BaseModel):
    carrier: str
    degree: int
    dimension: int
    basis: list[str]


class MatrixResponse(BaseModel):
    """짝짓기 행렬"""
    degree: int
    basis: list[str]
    matrix: list[list[int]]


class KernelResponse(BaseModel):
    degree: int
    of: str
    dimension: int
    basis: list[str]
