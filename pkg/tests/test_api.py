"""
HTTP API 테스트
tests/test_api.py
"""

import pytest

from app.api.dependencies import get_basis_repository
from app.main import app
from app.repositories.basis_repository import BasisRepository

API = "/api/v1"


class TestHealth:
    """헬스 체크와 공통 헤더"""

    def test_health(self, client):
        response = client.get("/health")
        assert response.status_code == 200
        assert response.json()["status"] == "healthy"
        assert response.json()["version"]

    def test_headers(self, client):
        response = client.get("/health")
        assert response.headers["X-Request-ID"]
        assert float(response.headers["X-Compute-Time"]) >= 0

    def test_request_id_is_propagated(self, client):
        response = client.get("/health", headers={"X-Request-ID": "abc123"})
        assert response.headers["X-Request-ID"] == "abc123"

    def test_root(self, client):
        assert client.get("/").json()["message"] == "hopf-lab workbench"


class TestForests:
    """/forests"""

    def test_enumerate(self, client):
        response = client.get(f"{API}/forests/enumerate", params={"kind": "ordered", "degree": 2})
        assert response.status_code == 200
        assert response.json()["items"] == ["1 2", "1(2)", "2(1)"]

    def test_cuts(self, client):
        response = client.get(f"{API}/forests/cuts", params={"forest": "[[[]][]]", "kind": "planar"})
        assert len(response.json()["cuts"]) == 7

    def test_factorial(self, client):
        response = client.get(f"{API}/forests/factorial", params={"forest": "[[[[]]]]"})
        assert response.json() == {"value": "24"}

    def test_parse_error_is_400(self, client):
        response = client.get(f"{API}/forests/cuts", params={"forest": "1(2"})
        assert response.status_code == 400
        assert "cannot parse" in response.json()["detail"]

    def test_guard_is_413(self, client):
        response = client.get(f"{API}/forests/enumerate", params={"kind": "ordered", "degree": 20})
        assert response.status_code == 413

    def test_negative_degree_is_422(self, client):
        response = client.get(f"{API}/forests/enumerate", params={"kind": "ordered", "degree": -1})
        assert response.status_code == 422


class TestAlgebras:
    """/algebras"""

    def test_mul(self, client):
        response = client.post(f"{API}/algebras/mul", json={"algebra": "fqsym", "left": "(1)", "right": "(1)"})
        assert response.status_code == 200
        body = response.json()
        assert body["text"] == "(1,2) + (2,1)"
        assert body["terms"] == [{"coeff": "1", "key": "(1,2)"}, {"coeff": "1", "key": "(2,1)"}]

    def test_comul_reduced(self, client):
        response = client.post(f"{API}/algebras/comul", params={"reduced": True}, json={"algebra": "hp", "element": "[[]]"})
        assert response.json()["terms"] == [{"coeff": "1", "left": "[]", "right": "[]"}]

    def test_split(self, client):
        response = client.post(f"{API}/algebras/split/succ", json={"algebra": "ho", "element": "1(2,3)"})
        assert response.json()["text"] == "1 (x) 1(2)"

    def test_split_unknown_side(self, client):
        response = client.post(f"{API}/algebras/split/left", json={"algebra": "ho", "element": "1(2,3)"})
        assert response.status_code == 400

    def test_split_on_connes_kreimer(self, client):
        response = client.post(f"{API}/algebras/split/prec", json={"algebra": "ck", "element": "[[]]"})
        assert response.status_code == 400

    def test_antipode(self, client):
        response = client.post(f"{API}/algebras/antipode", json={"algebra": "ho", "element": "1(2)"})
        assert response.json()["text"] == "1 2 - 1(2)"

    def test_nwarrow(self, client):
        response = client.post(f"{API}/algebras/nwarrow", json={"algebra": "hp", "left": "[] []", "right": "[]"})
        assert response.json()["text"] == "[] [[]]"

    def test_dual(self, client):
        response = client.post(f"{API}/algebras/dual", json={"left": "[]", "right": "[[]]", "side": "prec"})
        body = response.json()
        assert body["algebra"] == "hp-dual"
        assert body["text"] == "[[]] []"

    def test_empty_operand_is_422(self, client):
        response = client.post(f"{API}/algebras/mul", json={"algebra": "ho", "left": "", "right": "1"})
        assert response.status_code == 422


class TestTheta:
    """/theta"""

    def test_theta(self, client):
        response = client.get(f"{API}/theta/", params={"element": "1(2) + 2(1) - 1 2"})
        assert response.json()["text"] == "0"

    def test_pairing_matrix(self, client):
        body = client.get(f"{API}/theta/pairing-matrix", params={"degree": 2}).json()
        assert body["basis"] == ["1 2", "1(2)", "2(1)"]
        assert body["matrix"] == [[2, 1, 1], [1, 1, 0], [1, 0, 1]]

    def test_kernel(self, client):
        body = client.get(f"{API}/theta/kernel", params={"degree": 3}).json()
        assert body["dimension"] == 10

    def test_pairing(self, client):
        assert client.get(f"{API}/theta/pairing", params={"left": "1(2)", "right": "1 2"}).json() == {"value": "1"}

    def test_guard(self, client):
        assert client.get(f"{API}/theta/pairing-matrix", params={"degree": 9}).status_code == 413


@pytest.mark.integration
class TestDupDend:
    """/dupdend"""

    def test_primtot_dimension(self, client):
        response = client.get(f"{API}/dupdend/primtot", params={"carrier": "ho", "degree": 3, "dimension_only": True})
        assert response.json()["dimension"] == 7
        assert response.json()["basis"] == []

    def test_verify(self, client):
        body = client.get(f"{API}/dupdend/verify", params={"carrier": "pqsym", "degree": 3}).json()
        assert body["passed"] is True
        assert len(body["laws"]) == 10

    def test_verify_failure_is_still_200(self, client):
        response = client.get(
            f"{API}/dupdend/verify", params={"carrier": "hp", "laws": "e2", "degree": 3, "corrupt": "succ"}
        )
        assert response.status_code == 200
        assert response.json()["passed"] is False

    def test_verify_hopf_on_algebra(self, client):
        body = client.get(
            f"{API}/dupdend/verify", params={"algebra": "ck", "laws": "hopf", "degree": 3}
        ).json()
        assert body["passed"] is True
        assert body["carrier"] == "ck"
        assert {law["carrier"] for law in body["laws"]} == {"ck"}

    def test_verify_without_carrier(self, client):
        assert client.get(f"{API}/dupdend/verify", params={"laws": "e1"}).status_code == 400

    def test_certificate(self, client):
        body = client.get(f"{API}/dupdend/certificate", params={"carrier": "hho", "degree": 3}).json()
        assert body["alphabet_sizes"] == [1, 0, 1]
        assert body["full_rank"] is True
        assert [block["degree"] for block in body["phi"]["blocks"]] == [1, 2, 3]

    def test_iso(self, client):
        body = client.get(f"{API}/dupdend/iso", params={"source": "ho", "target": "pqsym", "degree": 3}).json()
        assert body["passed"] is True
        assert body["alphabet_sizes"] == [[1, 1, 7], [1, 1, 7]]

    def test_unknown_carrier(self, client):
        assert client.get(f"{API}/dupdend/verify", params={"carrier": "ck"}).status_code == 400


class TestSeries:
    """/series"""

    def test_ordered(self, client):
        body = client.get(f"{API}/series/", params={"order": 5}).json()
        assert body["coefficients"] == ["0", "1", "1", "7", "66", "786"]

    def test_heap_ordered(self, client):
        body = client.get(f"{API}/series/", params={"source": "heap-ordered", "order": 5}).json()
        assert body["coefficients"] == ["0", "1", "0", "1", "6", "39"]

    def test_bad_direction(self, client):
        assert client.get(f"{API}/series/", params={"direction": "sideways"}).status_code == 422


@pytest.mark.integration
class TestDependencyOverride:
    """저장소 주입"""

    @pytest.fixture
    def fresh_repository(self):
        repository = BasisRepository()
        app.dependency_overrides[get_basis_repository] = lambda: repository
        yield repository
        app.dependency_overrides.clear()

    def test_requests_fill_the_injected_cache(self, client, fresh_repository):
        client.get(f"{API}/forests/enumerate", params={"kind": "heap-ordered", "degree": 3})
        client.get(f"{API}/theta/pairing-matrix", params={"degree": 2})
        assert fresh_repository.get_or_compute("pairing-matrix", 2, lambda: None) == [[2, 1, 1], [1, 1, 0], [1, 0, 1]]


class TestGuards:
    """차수 가드와 force"""

    def test_series_guard(self, client):
        assert client.get(f"{API}/series/", params={"order": 41}).status_code == 413

    def test_force_lifts_guard(self, client):
        response = client.get(f"{API}/series/", params={"order": 41, "force": True})
        assert response.status_code == 200
        assert len(response.json()["coefficients"]) == 42

    def test_guard_message(self, client):
        response = client.get(f"{API}/forests/enumerate", params={"kind": "ordered", "degree": 20})
        assert "feasibility bound" in response.json()["detail"]
