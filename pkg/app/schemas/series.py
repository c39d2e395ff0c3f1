"""
Series schemas
app/schemas/series.py
"""
from pydantic import BaseModel, Field


class SeriesResponse(BaseModel):
    """절단 멱급수 (계수는 유리수 문자열, 0 차부터)"""
    direction: str
    source: str
    order: int
    coefficients: list[str] = Field(default_factory=list)
