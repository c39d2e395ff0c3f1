"""
pytest 설정 및 공통 fixture
tests/conftest.py
"""

import logging
from dataclasses import dataclass
from typing import Callable, Generator

import pytest
from fastapi.testclient import TestClient

from app.cli import run
from app.domain.entities.linear import LinComb
from app.main import app
from app.repositories.basis_repository import BasisRepository
from app.services.forest_algebras import ConnesKreimerAlgebra, HeapOrderedAlgebra, OrderedAlgebra, PlanarAlgebra
from app.services.parsing import parse_lincomb
from app.services.word_algebras import FQSymAlgebra, PQSymAlgebra
from app.services.workbench_service import WorkbenchService


# ================================================================================
# 저장소와 대수
# ================================================================================

@pytest.fixture
def repository() -> BasisRepository:
    """테스트마다 새 캐시 (법칙 검사가 서로의 캐시를 오염시키지 않도록)"""
    return BasisRepository()


@pytest.fixture
def ck(repository):
    return ConnesKreimerAlgebra(repository)


@pytest.fixture
def planar(repository):
    return PlanarAlgebra(repository=repository)


@pytest.fixture
def ordered(repository):
    return OrderedAlgebra(repository)


@pytest.fixture
def heap(repository):
    return HeapOrderedAlgebra(repository)


@pytest.fixture
def pqsym(repository):
    return PQSymAlgebra(repository=repository)


@pytest.fixture
def pqsym_cop(repository):
    return PQSymAlgebra(cop=True, repository=repository)


@pytest.fixture
def fqsym(repository):
    return FQSymAlgebra(repository=repository)


@pytest.fixture
def fqsym_cop(repository):
    return FQSymAlgebra(cop=True, repository=repository)


@pytest.fixture
def workbench(repository) -> WorkbenchService:
    return WorkbenchService(repository, jobs=1)


@pytest.fixture
def element() -> Callable[[object, str], LinComb]:
    """
    대수의 텍스트 원소 파서

    사용 예:
        def test_product(ordered, element):
            x = element(ordered, "1(2) + 2(1)")
    """
    def _parse(algebra, text: str) -> LinComb:
        return parse_lincomb(text, algebra.parse_key)

    return _parse


# ================================================================================
# 테스트 클라이언트
# ================================================================================

@pytest.fixture
def client() -> Generator:
    """
    동기 테스트 클라이언트

    사용 예:
        def test_health(client):
            response = client.get("/health")
            assert response.status_code == 200
    """
    with TestClient(app) as test_client:
        yield test_client


# ================================================================================
# CLI
# ================================================================================

@dataclass
class CliResult:
    exit_code: int
    stdout: str
    stderr: str

    @property
    def lines(self):
        return self.stdout.splitlines()


@pytest.fixture
def run_cli(capsys) -> Callable[..., CliResult]:
    """
    CLI 실행 헬퍼 (종료 코드와 캡처된 출력)

    사용 예:
        def test_enumerate(run_cli):
            result = run_cli("enumerate", "--kind", "ordered", "--degree", "2")
            assert result.lines == ["1 2", "1(2)", "2(1)"]
    """
    def _run(*args: str) -> CliResult:
        capsys.readouterr()
        code = run(list(args))
        captured = capsys.readouterr()
        return CliResult(code, captured.out, captured.err)

    return _run


# ================================================================================
# 로깅 설정
# ================================================================================

@pytest.fixture(scope="session", autouse=True)
def configure_test_logging():
    """테스트용 로깅 설정"""
    hopf_logger = logging.getLogger("hopf_lab")
    level = hopf_logger.level
    hopf_logger.setLevel(logging.WARNING)

    yield

    hopf_logger.setLevel(level)
