"""
Algebra schemas - element operations
app/schemas/algebra.py
"""
from pydantic import BaseModel, Field
from typing import Optional

from app.domain.entities.linear import LinComb


class TermSchema(BaseModel):
    """선형결합의 항 (쌍 텐서는 left/right, 더 긴 텐서는 factors)"""
    coeff: str
    key: Optional[str] = None
    left: Optional[str] = None
    right: Optional[str] = None
    factors: Optional[list[str]] = None


class ElementResponse(BaseModel):
    """연산 결과"""
    algebra: str
    text: str
    terms: list[TermSchema]

    @classmethod
    def of(cls, algebra: str, value: LinComb) -> "ElementResponse":
        return cls(
            algebra=algebra,
            text=value.to_text(),
            terms=[TermSchema(**term) for term in value.to_json_terms()]
        )


class BinaryRequest(BaseModel):
    """이항 연산 요청 (mul, nwarrow)"""
    algebra: str = Field(..., examples=["fqsym"])
    left: str = Field(..., min_length=1, examples=["(123)"])
    right: str = Field(..., min_length=1, examples=["(21)"])
    alphabet: Optional[str] = Field(None, description="hp 장식 알파벳 (`a:1,b:2` 또는 `#1,1,7`)")


class UnaryRequest(BaseModel):
    """단항 연산 요청 (comul, split, antipode)"""
    algebra: str = Field(..., examples=["ho"])
    element: str = Field(..., min_length=1, examples=["1(2,3)"])
    alphabet: Optional[str] = None


class DualRequest(BaseModel):
    """Z 기저 곱 요청 (side 가 없으면 전체 곱)"""
    left: str = Field(..., min_length=1)
    right: str = Field(..., min_length=1)
    side: Optional[str] = Field(None, pattern=r"^(prec|succ)$")
    rule: str = Field("root", pattern=r"^(root|leaf)$")


class ScalarResponse(BaseModel):
    """스칼라 결과 (짝짓기, F!, m-index 등)"""
    value: str
