"""
Error hierarchy
app/core/exceptions.py
"""


class HopfLabError(Exception):
    """워크벤치 공통 예외 (exit_code 는 CLI 종료 코드)"""

    exit_code = 1
    http_status = 400


class InvalidInputError(HopfLabError, ValueError):
    """잘못된 입력 (정점 범위, 중복 라벨, 빈 입력, 알파벳 누락 등)"""


class ParseError(InvalidInputError):
    """텍스트 문법 파싱 실패"""

    def __init__(self, text: str, reason: str):
        super().__init__(f"cannot parse {text!r}: {reason}")
        self.text = text
        self.reason = reason


class AlgebraMismatchError(InvalidInputError):
    """서로 다른 대수의 원소를 결합하려 할 때"""


class AugmentationError(InvalidInputError):
    """augmentation ideal 에서만 정의된 연산에 단위 성분이 들어온 경우"""


class DegreeMismatchError(InvalidInputError):
    """차수가 맞지 않는 입력"""


class SingularMatrixError(HopfLabError, ArithmeticError):
    """역행렬이 존재하지 않음"""

    http_status = 422


class RankDeficiencyError(HopfLabError):
    """동형사상 구성 중 계수 부족 (정리와 모순되는 하드 실패)"""

    http_status = 500


class InfeasibleDegreeError(HopfLabError):
    """차수 가드 초과"""

    exit_code = 3
    http_status = 413

    def __init__(self, command: str, degree: int, limit: int):
        super().__init__(
            f"{command}: degree {degree} exceeds the feasibility bound {limit} "
            f"(use --force or HOPF_LAB_MAX_DEGREE)"
        )
        self.command = command
        self.degree = degree
        self.limit = limit


class VerificationFailedError(HopfLabError):
    """법칙 검증 실패"""

    exit_code = 2
    http_status = 200
