"""
Runtime settings
app/core/config.py
"""
from pydantic_settings import BaseSettings, SettingsConfigDict
from typing import List, Optional
import json


class Settings(BaseSettings):
    """워크벤치 설정 (환경변수 접두어: HOPF_LAB_)"""

    # Application
    PROJECT_NAME: str = "hopf-lab"
    VERSION: str = "1.0.0"
    ENVIRONMENT: str = "development"

    # Logging
    LOG_DIR: str = "logs"
    LOG_LEVEL: str = "WARNING"
    LOG_TO_CONSOLE: bool = True
    LOG_TO_FILE: bool = False
    LOG_BACKUP_COUNT: int = 30

    # Degree guards (HOPF_LAB_MAX_DEGREE 가 설정되면 모든 가드를 덮어씀)
    MAX_DEGREE: Optional[int] = None
    DEFAULT_DEGREE: int = 4
    ENUMERATE_MAX_DEGREE: int = 8
    PAIRING_MATRIX_MAX_DEGREE: int = 5
    ISO_MAX_DEGREE: int = 4
    PRIMTOT_MAX_DEGREE: int = 5
    VERIFY_MAX_DEGREE: int = 5
    SERIES_MAX_ORDER: int = 40

    # Parallelism
    JOBS: int = 1

    # HTTP surface
    CORS_ORIGINS: str = '["http://localhost:3000"]'

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="HOPF_LAB_",
        case_sensitive=True,
        extra="ignore"
    )

    @property
    def cors_origins_list(self) -> List[str]:
        """CORS origins를 리스트로 변환"""
        return json.loads(self.CORS_ORIGINS)

    @property
    def is_development(self) -> bool:
        """개발 환경 여부"""
        return self.ENVIRONMENT == "development"

    def guard_for(self, command: str) -> int:
        """
        명령별 차수 상한

        Args:
            command: 명령 이름 (enumerate, pairing-matrix, iso, primtot, verify, series)

        Returns:
            int: MAX_DEGREE 가 설정되어 있으면 그 값, 아니면 명령별 기본값
        """
        if self.MAX_DEGREE is not None:
            return self.MAX_DEGREE
        guards = {
            "enumerate": self.ENUMERATE_MAX_DEGREE,
            "pairing-matrix": self.PAIRING_MATRIX_MAX_DEGREE,
            "kernel": self.PAIRING_MATRIX_MAX_DEGREE,
            "iso": self.ISO_MAX_DEGREE,
            "primtot": self.PRIMTOT_MAX_DEGREE,
            "verify": self.VERIFY_MAX_DEGREE,
            "series": self.SERIES_MAX_ORDER,
        }
        return guards.get(command, self.VERIFY_MAX_DEGREE)


# 전역 설정 인스턴스
settings = Settings()
