"""
Truncated formal power series
app/domain/entities/series.py
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from app.core.exceptions import InvalidInputError
from app.domain.entities.linear import ScalarLike, format_scalar, to_scalar


@dataclass(frozen=True)
class PowerSeries:
    """
    c_0 + c_1 x + ... + c_N x^N (mod x^{N+1})

    연산은 절단 차수 N 너머를 읽지 않는다. 두 피연산자의 차수가 다르면 작은 쪽을 따른다.
    """
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise InvalidInputError("a power series needs at least the constant coefficient")

    @classmethod
    def of(cls, values: Sequence[ScalarLike], order: int) -> "PowerSeries":
        """계수 목록을 차수 order 로 절단하거나 0 으로 채움"""
        padded = [to_scalar(v) for v in values[: order + 1]]
        padded += [Fraction(0)] * (order + 1 - len(padded))
        return cls(tuple(padded))

    @classmethod
    def constant(cls, value: ScalarLike, order: int) -> "PowerSeries":
        return cls.of([value], order)

    @classmethod
    def variable(cls, order: int) -> "PowerSeries":
        return cls.of([0, 1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k <= self.order else Fraction(0)

    def valuation(self) -> int:
        """첫 번째 0 아닌 계수의 지수 (0 급수면 order + 1)"""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.order + 1

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries.of(self.coeffs, order)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        return PowerSeries(tuple(self[k] + other[k] for k in range(n + 1)))

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        return PowerSeries(tuple(self[k] - other[k] for k in range(n + 1)))

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(tuple(-c for c in self.coeffs))

    def scale(self, value: ScalarLike) -> "PowerSeries":
        factor = to_scalar(value)
        return PowerSeries(tuple(c * factor for c in self.coeffs))

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(n + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return PowerSeries(tuple(out))

    def inverse(self) -> "PowerSeries":
        """곱셈 역원 (c_0 ≠ 0)"""
        c0 = self.coeffs[0]
        if not c0:
            raise InvalidInputError("series with zero constant term is not invertible")
        out = [Fraction(1) / c0]
        for k in range(1, self.order + 1):
            acc = sum((self.coeffs[j] * out[k - j] for j in range(1, k + 1)), Fraction(0))
            out.append(-acc / c0)
        return PowerSeries(tuple(out))

    def shift_down(self, v: int) -> "PowerSeries":
        """x^v 로 나눔 (앞 v 개 계수는 0 이어야 함, 차수가 v 만큼 줄어듦)"""
        if any(self.coeffs[:v]):
            raise InvalidInputError(f"series is not divisible by x^{v}")
        return PowerSeries(self.coeffs[v:]) if v <= self.order else PowerSeries((Fraction(0),))

    def __truediv__(self, other: "PowerSeries") -> "PowerSeries":
        """
        정확한 나눗셈

        분모의 valuation v 만큼 양쪽을 x^v 로 나눈 뒤 역원을 곱한다 (정밀도 v 만큼 감소).
        """
        v = other.valuation()
        if v > other.order:
            raise InvalidInputError("division by the zero series")
        return self.shift_down(v) * other.shift_down(v).inverse()

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """self(inner(x)), inner 의 상수항은 0 이어야 함"""
        if inner.coeffs[0]:
            raise InvalidInputError("composition requires an inner series with zero constant term")
        n = min(self.order, inner.order)
        result = PowerSeries.constant(self.coeffs[0], n)
        power = PowerSeries.constant(1, n)
        inner_n = inner.truncate(n)
        for k in range(1, n + 1):
            power = power * inner_n
            if self.coeffs[k]:
                result = result + power.scale(self.coeffs[k])
        return result

    def to_json(self) -> List[str]:
        return [format_scalar(c) for c in self.coeffs]

    def to_text(self) -> str:
        return ",".join(self.to_json())
