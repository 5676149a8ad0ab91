import pytest
from fastapi.testclient import TestClient

from zipchow.service.app import app
from zipchow.service.handlers import handle_bt, handle_graded
from zipchow.service.models import BtRequest, ReportModel, ReportRequest


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


class TestEndpoints:
    def test_health(self, client):
        resp = client.get("/health")
        assert resp.status_code == 200
        assert resp.json() == {"status": "ok"}

    def test_picard(self, client):
        resp = client.post("/picard", json={"group": "gl", "h": 3, "d": 0, "p": 3})
        assert resp.status_code == 200
        assert resp.json() == {"free_rank": 0, "torsion": [2]}

    def test_qdim(self, client):
        resp = client.post(
            "/qdim", json={"group": "sp", "n": 1, "parabolic": "borel", "q": 2}
        )
        assert resp.status_code == 200
        assert resp.json() == {"q_dimension": 2}

    def test_orbits_without_q(self, client):
        resp = client.post("/orbits", json={"group": "gl", "h": 4, "composition": [2, 2]})
        assert resp.status_code == 200
        assert resp.json() == {"orbit_count": 6}

    def test_graded(self, client):
        resp = client.post(
            "/graded", json={"group": "gl", "h": 2, "d": 1, "p": 3, "max_degree": 2}
        )
        assert resp.status_code == 200
        body = resp.json()
        assert body["graded"] == [
            {"degree": 0, "free_rank": 1, "torsion": []},
            {"degree": 1, "free_rank": 1, "torsion": [2]},
            {"degree": 2, "free_rank": 0, "torsion": [2, 2, 8]},
        ]
        assert body["picard"] == {"free_rank": 1, "torsion": [2]}

    def test_present_relations(self, client):
        resp = client.post("/present", json={"group": "gl", "h": 2, "d": 1, "p": 3})
        texts = [rel["text"] for rel in resp.json()["presentation"]["relations"]]
        assert texts == ["2*t1 + 2*t2", "8*t1*t2"]

    def test_fzip(self, client):
        resp = client.post("/fzip", json={"composition": [1, 1, 1], "p": 3})
        body = resp.json()
        assert body["picard"] == {"free_rank": 2, "torsion": [2]}
        assert body["rational_dimension"] == 6
        assert body["datum"]["support"] == [0, 1, 2]

    def test_bt(self, client):
        resp = client.post("/bt", json={"h": 2, "d": 1, "level": 3, "p": 3})
        body = resp.json()
        assert body["picard"] == {"free_rank": 1, "torsion": [2]}
        assert "level" not in str(body["datum"])
        assert body["metadata"]["localized_at"] == 3

    def test_m11(self, client):
        resp = client.post("/m11", json={"p": 5})
        body = resp.json()
        assert body["compatible"] is True
        assert body["images"][0]["image"] == "0"
        assert body["images"][1]["image"] == "-24*t1^2"


class TestValidation:
    def test_parameter_error_maps_to_422(self, client):
        resp = client.post("/qdim", json={"group": "gl", "h": 2, "d": 1, "q": 1})
        assert resp.status_code == 422
        assert "finite-dimensional" in resp.json()["detail"]

    def test_missing_flags(self, client):
        resp = client.post("/picard", json={"group": "gl", "h": 2, "d": 1})
        assert resp.status_code == 422
        resp = client.post("/picard", json={"group": "gl", "p": 3})
        assert resp.status_code == 422

    def test_conflicting_levi(self, client):
        resp = client.post(
            "/picard",
            json={"group": "gl", "h": 2, "d": 1, "composition": [1, 1], "p": 3},
        )
        assert resp.status_code == 422

    def test_pydantic_type_error(self, client):
        resp = client.post("/picard", json={"group": "gl", "h": "two", "d": 1, "p": 3})
        assert resp.status_code == 422

    def test_matrix_cap_maps_to_413(self, client, monkeypatch):
        monkeypatch.setenv("ZIPCHOW_MATRIX_CAP", "1")
        resp = client.post("/graded", json={"group": "gl", "h": 2, "d": 1, "p": 3})
        assert resp.status_code == 413
        assert "cap" in resp.json()["detail"]


class TestDeterminism:
    def test_identical_requests_identical_bytes(self, client):
        payload = {"group": "gl", "h": 3, "d": 1, "p": 3, "max_degree": 3}
        first = client.post("/graded", json=payload)
        second = client.post("/graded", json=payload)
        assert first.content == second.content

    def test_bt_level_never_changes_bytes(self, client):
        bodies = [
            client.post("/bt", json={"h": 2, "d": 1, "level": n, "p": 3}).content
            for n in (1, 2, 5)
        ]
        assert bodies[0] == bodies[1] == bodies[2]


class TestRoundTrip:
    def test_report_model_round_trips(self):
        model = handle_graded(ReportRequest(group="gl", h=2, d=1, p=3, max_degree=2))
        encoded = model.model_dump_json()
        assert ReportModel.model_validate_json(encoded) == model

    def test_bt_model_round_trips(self):
        model = handle_bt(BtRequest(h=2, d=1, level=2, p=3))
        encoded = model.model_dump_json()
        assert ReportModel.model_validate_json(encoded) == model

    def test_endpoint_json_equals_handler_model(self):
        client = TestClient(app)
        resp = client.post("/graded", json={"group": "gl", "h": 2, "d": 1, "p": 3})
        via_http = ReportModel.model_validate(resp.json())
        direct = handle_graded(ReportRequest(group="gl", h=2, d=1, p=3))
        assert via_http == direct
