"""
Poincaré-Hilbert series of decorated planar forest algebras
app/services/series_service.py
"""
from fractions import Fraction
from math import comb
from typing import List, Sequence

from app.core.exceptions import InvalidInputError
from app.core.logging import logger
from app.domain.entities.linear import ScalarLike
from app.domain.entities.series import PowerSeries


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def sqrt_one_minus_four(order: int) -> PowerSeries:
    """√(1−4t) = 1 − 2 Σ_{k≥1} Cat(k−1) t^k"""
    return PowerSeries.of([1] + [-2 * catalan(k - 1) for k in range(1, order + 1)], order)


def series_from_alphabet(f_d: PowerSeries, order: int) -> PowerSeries:
    """
    알파벳 급수 f_D 로부터 f = (1 − √(1−4 f_D)) / (2 f_D)

    Args:
        f_D: 상수항 0 인 알파벳 급수
        order: 결과 절단 차수 N

    Returns:
        PowerSeries: c_0 = 1 인 급수

    Raises:
        InvalidInputError: f_D 의 상수항이 0 이 아님
    """
    if f_d[0]:
        raise InvalidInputError("alphabet series must have zero constant term")
    v = f_d.valuation()
    if v > min(f_d.order, order):
        return PowerSeries.constant(1, order)

    work = order + v
    f = f_d.truncate(work)
    numerator = PowerSeries.constant(1, work) - sqrt_one_minus_four(work).compose(f)
    result = (numerator / f.scale(2)).truncate(order)
    logger.debug(f"series_from_alphabet: order={order}, valuation={v}")
    return result


def series_to_alphabet(f_a: PowerSeries, order: int) -> PowerSeries:
    """
    대수 급수 f 로부터 f_D = (f − 1) / f²

    Raises:
        InvalidInputError: f 의 상수항이 1 이 아님
    """
    if f_a[0] != 1:
        raise InvalidInputError("algebra series must have constant term 1")
    f = f_a.truncate(order)
    return (f - PowerSeries.constant(1, order)) * (f * f).inverse()


def parse_series(text: str, order: int) -> PowerSeries:
    """쉼표로 구분된 유리수 계수 목록 ("0,1,1,7") 파싱"""
    try:
        values: List[ScalarLike] = [Fraction(part.strip()) for part in text.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidInputError(f"invalid series coefficients {text!r}: {e}") from e
    if not values:
        raise InvalidInputError("series needs at least one coefficient")
    return PowerSeries.of(values, order)


def named_series(name: str, order: int) -> PowerSeries:
    """
    자주 쓰는 차원 급수

    Args:
        name: "ordered" (Σ(n+1)^{n−1}xⁿ), "heap-ordered" (Σ n! xⁿ), "catalan", "x"
    """
    if name == "ordered":
        return PowerSeries.of([(n + 1) ** (n - 1) if n else 1 for n in range(order + 1)], order)
    if name == "heap-ordered":
        values: List[int] = []
        fact = 1
        for n in range(order + 1):
            fact = fact * n if n else 1
            values.append(fact)
        return PowerSeries.of(values, order)
    if name == "catalan":
        return PowerSeries.of([catalan(n) for n in range(order + 1)], order)
    if name == "x":
        return PowerSeries.variable(order)
    raise InvalidInputError(f"unknown named series {name!r}")


def dimension_list(series: PowerSeries, start: int = 0) -> Sequence[Fraction]:
    return series.coeffs[start:]
