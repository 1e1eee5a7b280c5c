"""HTTP endpoints mirror the command line pipelines."""

import pytest
from fastapi.testclient import TestClient

from scaleflat.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_check_flat(client):
    response = client.post("/check", json={"f11": "0", "f12": "0", "f22": "0"})
    assert response.status_code == 200
    body = response.json()
    assert body["verdict"] == "Flat"
    assert body["exit_code"] == 0


def test_check_not_flat(client):
    response = client.post("/check", json={"f11": "z1^2", "f12": "0", "f22": "0"})
    body = response.json()
    assert body["verdict"] == "NotFlat"
    assert body["witnesses"] == ["S5"]


def test_check_matches_cli_pipeline(client):
    from scaleflat.cli.reports import check_report
    from scaleflat.jetframe import PDESystem

    body = client.post(
        "/check", json={"f11": "z1*z2", "f12": "0", "f22": "0"}
    ).json()
    direct = check_report(PDESystem.from_strings("z1*z2", "0", "0"))
    assert body == direct.model_dump()


def test_check_rejects_bad_expression(client):
    response = client.post("/check", json={"f11": "(", "f12": "0", "f22": "0"})
    assert response.status_code == 422


def test_check_rejects_missing_field(client):
    response = client.post("/check", json={"f11": "0"})
    assert response.status_code == 422


def test_dual_flat_family(client):
    response = client.post(
        "/dual",
        json={
            "h": "X1*x1 + X2*x2 + Y",
            "inverse_x1": "-Z1",
            "inverse_x2": "-Z2",
        },
    )
    body = response.json()
    assert response.status_code == 200
    assert body["closed"] is True
    assert body["entries"] == {"F11": "0", "F12": "0", "F22": "0"}


def test_dual_rejects_half_inverse(client):
    response = client.post(
        "/dual", json={"h": "X1*x1 + X2*x2 + Y", "inverse_x1": "-Z1"}
    )
    assert response.status_code == 422


def test_verify_structure(client):
    response = client.post(
        "/verify-structure",
        json={"f11": "0", "f12": "0", "f22": "0", "level": 11},
    )
    assert response.json()["verdict"] == "holds"


def test_verify_structure_rejects_level_out_of_range(client):
    response = client.post(
        "/verify-structure",
        json={"f11": "0", "f12": "0", "f22": "0", "level": 8},
    )
    assert response.status_code == 422


def test_fibration(client):
    response = client.post(
        "/fibration", json={"group": "compact", "seed": 42, "samples": 25}
    )
    body = response.json()
    assert body["exit_code"] == 0
    assert body["dimensions"]["group"] == 9


def test_selftest_quick_default(client):
    response = client.post("/selftest", json={"seed": 0})
    body = response.json()
    assert body["quick"] is True
    assert body["ok"] is True
    assert len(body["suites"]) == 11
