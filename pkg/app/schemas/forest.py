"""
Forest schemas - enumeration and cuts
app/schemas/forest.py
"""
from pydantic import BaseModel


class EnumerateResponse(BaseModel):
    """n 차 기저 열거 결과"""
    kind: str
    degree: int
    count: int
    items: list[str]


class CutSchema(BaseModel):
    """허용 절단 하나"""
    vertices: list[int]
    lea: str
    roo: str


class CutsResponse(BaseModel):
    forest: str
    cuts: list[CutSchema]
