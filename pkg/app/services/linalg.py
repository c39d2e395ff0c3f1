"""
Exact degreewise linear algebra over the rationals
app/services/linalg.py

Rank and kernel use fraction-free sparse elimination: rows are cleared to integers and every
updated row is divided by its content. Columns are scanned left to right and the pivot is the
first remaining row that is nonzero in that column.
"""
from fractions import Fraction
from math import gcd
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from app.core.exceptions import InvalidInputError, SingularMatrixError
from app.core.logging import logger
from app.domain.entities.linear import GradedMap, LinComb

Matrix = List[List[Fraction]]
SparseRow = Dict[int, int]


def _as_fraction_rows(m: Sequence[Sequence[Any]]) -> Matrix:
    rows = [[Fraction(x) for x in row] for row in m]
    widths = {len(row) for row in rows}
    if len(widths) > 1:
        raise InvalidInputError("matrix rows must have equal length")
    return rows


def _integer_row(row: Mapping[int, Fraction]) -> SparseRow:
    """분모의 최소공배수를 곱하고 content 로 나눈 정수 희소 행"""
    lcm = 1
    for value in row.values():
        d = value.denominator
        lcm = lcm * d // gcd(lcm, d)
    ints = {col: int(value * lcm) for col, value in row.items() if value}
    return _primitive(ints)


def _primitive(row: SparseRow) -> SparseRow:
    g = 0
    for value in row.values():
        g = gcd(g, value)
        if g == 1:
            return row
    if g > 1:
        return {col: value // g for col, value in row.items()}
    return row


def sparse_rows(m: Sequence[Sequence[Any]]) -> List[Dict[int, Fraction]]:
    """조밀 행렬을 연관(association) 행 목록으로 변환"""
    return [
        {j: Fraction(x) for j, x in enumerate(row) if x}
        for row in m
    ]


def echelon(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> Tuple[List[SparseRow], List[int]]:
    """
    분수 없는 소거 (fraction-free elimination)

    열을 왼쪽부터 훑으며, 남은 행 중 해당 열이 0 이 아닌 첫 행을 피벗으로 잡는다
    (결정적 피벗). 갱신 행 p*r - a*pivot 은 content(gcd) 로 나누어 정수 크기를 억제한다.

    Args:
        rows: 연관 행 (열 번호 → 유리수)
        ncols: 열 개수

    Returns:
        (echelon_rows, pivot_columns): 피벗 열 오름차순의 정수 행과 피벗 열
    """
    remaining = [_integer_row(row) for row in rows]
    remaining = [row for row in remaining if row]
    echelon_rows: List[SparseRow] = []
    pivots: List[int] = []

    for col in range(ncols):
        if not remaining:
            break
        pivot_index = next((i for i, row in enumerate(remaining) if col in row), None)
        if pivot_index is None:
            continue
        pivot_row = remaining.pop(pivot_index)
        p = pivot_row[col]
        survivors = []
        for row in remaining:
            a = row.get(col)
            if a is None:
                survivors.append(row)
                continue
            updated = {c: p * v for c, v in row.items()}
            for c, v in pivot_row.items():
                value = updated.get(c, 0) - a * v
                if value:
                    updated[c] = value
                else:
                    updated.pop(c, None)
            if updated:
                survivors.append(_primitive(updated))
        remaining = survivors
        echelon_rows.append(pivot_row)
        pivots.append(col)

    return echelon_rows, pivots


def reduced_echelon(
        rows: Sequence[Mapping[int, Fraction]],
        ncols: int
) -> Tuple[List[Dict[int, Fraction]], List[int]]:
    """기약 행사다리꼴 (피벗 = 1, 피벗 열의 다른 성분 = 0)"""
    ech, pivots = echelon(rows, ncols)
    reduced: List[Dict[int, Fraction]] = [
        {c: Fraction(v, row[pivots[i]]) for c, v in row.items()}
        for i, row in enumerate(ech)
    ]
    for i in range(len(reduced) - 1, -1, -1):
        pc = pivots[i]
        pivot_row = reduced[i]
        for j in range(i):
            factor = reduced[j].get(pc)
            if not factor:
                continue
            target = reduced[j]
            for c, v in pivot_row.items():
                value = target.get(c, Fraction(0)) - factor * v
                if value:
                    target[c] = value
                else:
                    target.pop(c, None)
    return reduced, pivots


def rank(m: Sequence[Sequence[Any]]) -> int:
    """
    유리수 위의 계수 (빈 행렬 → 0)

    Args:
        m: 직사각 행렬

    Returns:
        int: 계수
    """
    rows = _as_fraction_rows(m)
    if not rows:
        return 0
    return sparse_rank(sparse_rows(rows), len(rows[0]))


def sparse_rank(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> int:
    return len(echelon(rows, ncols)[1])


def sparse_kernel(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> List[List[Fraction]]:
    """
    오른쪽 핵의 기저

    자유 열마다 하나씩, 자유 열 오름차순으로 (자유 열 성분 1, 피벗 성분은 RREF 에서 결정).
    """
    reduced, pivots = reduced_echelon(rows, ncols)
    pivot_set = set(pivots)
    basis: List[List[Fraction]] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * ncols
        vector[free] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            value = row.get(free)
            if value:
                vector[pc] = -value
        basis.append(vector)
    return basis


def kernel_basis(m: Sequence[Sequence[Any]], ncols: Optional[int] = None) -> List[List[Fraction]]:
    """
    오른쪽 핵의 결정적 기저

    Args:
        m: 직사각 행렬 (행이 없으면 ncols 로 열 개수 지정)

    Returns:
        List[List[Fraction]]: RREF 에서 유도된 핵 벡터 (자유 열 순서)
    """
    rows = _as_fraction_rows(m)
    width = len(rows[0]) if rows else (ncols or 0)
    return sparse_kernel(sparse_rows(rows), width)


def normalize_leading(vector: Sequence[Fraction]) -> List[Fraction]:
    """첫 번째 0 아닌 성분이 1 이 되도록 정규화"""
    lead = next((v for v in vector if v), None)
    if lead is None:
        return list(vector)
    return [v / lead for v in vector]


def echelon_basis(vectors: Sequence[Sequence[Fraction]], ncols: int) -> List[List[Fraction]]:
    """
    생성 벡터들의 기약 사다리꼴 기저 (각 벡터의 첫 0 아닌 성분 = 1)

    같은 부분공간은 항상 같은 결과를 준다.
    """
    reduced, _ = reduced_echelon([{j: Fraction(v) for j, v in enumerate(vec) if v} for vec in vectors], ncols)
    return [[row.get(j, Fraction(0)) for j in range(ncols)] for row in reduced]


def same_span(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]], ncols: int) -> bool:
    """두 벡터 집합이 같은 부분공간을 생성하는가"""
    return echelon_basis(a, ncols) == echelon_basis(b, ncols)


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise InvalidInputError("matrix dimensions do not match")
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [Fraction(0)] * cols
        for k, x in enumerate(row):
            if x:
                for j, y in enumerate(b[k]):
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def inverse(m: Sequence[Sequence[Any]]) -> Matrix:
    """
    정사각 행렬의 역행렬 (Gauss-Jordan, 결정적 피벗)

    Raises:
        SingularMatrixError: 비정사각 또는 특이 행렬
    """
    rows = _as_fraction_rows(m)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise SingularMatrixError("only square matrices are invertible")
    aug = [row[:] + identity(n)[i] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise SingularMatrixError(f"matrix is singular (column {col})")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            factor = aug[r][col]
            if r != col and factor:
                pivot_row = aug[col]
                aug[r] = [v - factor * w for v, w in zip(aug[r], pivot_row)]
    return [row[n:] for row in aug]


# ================================================================================
# GradedMap 연산
# ================================================================================

def _vector(element: LinComb, basis: Sequence[Any]) -> List[Fraction]:
    index = {key: i for i, key in enumerate(basis)}
    vector = [Fraction(0)] * len(basis)
    for key, coeff in element.raw_items():
        if key not in index:
            raise InvalidInputError(f"{key!r} is not in the basis")
        vector[index[key]] = coeff
    return vector


def coordinates(element: LinComb, basis: Sequence[Any]) -> List[Fraction]:
    """기저에 대한 좌표 벡터"""
    return _vector(element, basis)


def combination(vector: Sequence[Fraction], basis: Sequence[Any]) -> LinComb:
    """좌표 벡터 → 선형결합"""
    return LinComb({key: c for key, c in zip(basis, vector) if c})


def graded_map_from_matrices(
        name: str,
        source_bases: Dict[int, List[Any]],
        target_bases: Dict[int, List[Any]],
        matrices: Dict[int, Matrix]
) -> GradedMap:
    images: Dict[int, Dict[Any, LinComb]] = {}
    for n, mat in matrices.items():
        per_degree = {}
        for j, key in enumerate(source_bases[n]):
            per_degree[key] = combination([mat[i][j] for i in range(len(mat))], target_bases[n])
        images[n] = per_degree
    return GradedMap(name, source_bases, target_bases, images)


def invert_graded_map(m: GradedMap, name: Optional[str] = None) -> GradedMap:
    """차수별 역사상 (어느 한 차수라도 특이하면 SingularMatrixError)"""
    matrices = {}
    for n in m.degrees():
        logger.debug(f"Inverting {m.name} in degree {n} ({len(m.source_bases[n])} columns)")
        matrices[n] = inverse(m.matrix(n)) if m.source_bases[n] else []
    return graded_map_from_matrices(name or f"{m.name}^-1", m.target_bases, m.source_bases, matrices)


def compose_graded_maps(outer: GradedMap, inner: GradedMap, name: Optional[str] = None) -> GradedMap:
    """outer ∘ inner"""
    images = {
        n: {key: outer.apply(image) for key, image in inner.images[n].items()}
        for n in inner.degrees()
    }
    return GradedMap(
        name or f"{outer.name}∘{inner.name}",
        inner.source_bases,
        {n: outer.target_bases.get(n, []) for n in inner.degrees()},
        images
    )


def identity_map(name: str, bases: Dict[int, List[Any]]) -> GradedMap:
    images = {n: {key: LinComb.monomial(key) for key in keys} for n, keys in bases.items()}
    return GradedMap(name, bases, bases, images)


def graded_rank(m: GradedMap, n: int) -> int:
    return rank(m.matrix(n)) if m.source_bases.get(n) else 0
