"""Tests for the HTTP API."""

import math

import pytest
from fastapi.testclient import TestClient

from hypalg.main import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


def test_multiply_quaternions(client):
    response = client.post("/api/algebra/multiply", json={"factors": ["e1", "e2"]})
    assert response.status_code == 200
    body = response.json()
    assert body["product"] == "e3"
    assert body["grouping"] == "associative"
    assert body["quaternion"]["coefficients"] == ["0", "0", "0", "1"]


def test_multiply_octonions_right_grouped(client):
    response = client.post(
        "/api/algebra/multiply",
        json={"factors": ["e1", "e2", "e4"], "octonion": True, "group_left": False},
    )
    assert response.status_code == 200
    assert response.json()["product"] == "-e7"


def test_bad_octonion_factor_is_a_domain_error(client):
    response = client.post("/api/algebra/multiply", json={"factors": ["e9"], "octonion": True})
    assert response.status_code == 422
    assert response.json()["error"] == "ParseError"


def test_empty_factor_list_is_rejected(client):
    response = client.post("/api/algebra/multiply", json={"factors": []})
    assert response.status_code == 422
    assert isinstance(response.json()["detail"], list)


def test_translate(client):
    response = client.post("/api/algebra/translate", json={"operator": "1|e1"})
    assert response.status_code == 200
    body = response.json()
    assert body["determinant"] == "1"
    assert body["real"]["rows"] == 4
    assert body["complex"] is None
    assert body["barred"]["q1"] == ["1", "0", "0", "0"]


def test_translate_complex(client):
    response = client.post("/api/algebra/translate", json={"operator": "1|e1", "complex": True})
    assert response.status_code == 200
    assert response.json()["complex"]["rows"] == 2


@pytest.mark.parametrize("path, dim", [("/api/groups/U/Qr/1", 6), ("/api/groups/Sp/Qc/1", 6), ("/api/groups/O/q/2", 6)])
def test_group_generators(client, path, dim):
    response = client.get(path)
    assert response.status_code == 200
    body = response.json()
    assert body["dim"] == body["formula"] == dim
    assert body["closure"] == "ok"
    assert body["basis"] == []


def test_unsupported_group(client):
    response = client.get("/api/groups/O~/Qc/1")
    assert response.status_code == 422
    assert response.json()["error"] == "UnsupportedCarrier"


def test_dimension_table(client):
    response = client.get("/api/groups/dimension-table", params={"n_max": 2})
    assert response.status_code == 200
    rows = response.json()
    assert len(rows) == 13
    assert rows[0]["formula"] == [3, 10]


def test_verify_suite(client):
    response = client.get("/api/verify/rank64", params={"seed": 7})
    assert response.status_code == 200
    body = response.json()
    assert body["ok"] is True
    assert body["seed"] == 7
    assert body["suites"][0]["summary"] == "rank=64 OK"


def test_verify_unknown_suite(client):
    response = client.get("/api/verify/rank65")
    assert response.status_code == 422
    assert response.json()["error"] == "InvalidSelector"


def test_lorentz_rotation(client):
    response = client.post(
        "/api/lorentz/transform",
        json={"kind": "rot_z", "theta": math.pi / 2, "event": [0, 1, 0, 0]},
    )
    assert response.status_code == 200
    body = response.json()
    assert body["transformed"] == pytest.approx([0.0, 0.0, 1.0, 0.0], abs=1e-12)
    assert body["interval_after"] == pytest.approx(-1.0)


def test_lorentz_rejects_short_event(client):
    response = client.post("/api/lorentz/transform", json={"kind": "boost_x", "theta": 0.1, "event": [1, 0]})
    assert response.status_code == 422


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
