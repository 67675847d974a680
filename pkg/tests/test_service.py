"""HTTP endpoints: request/response contract over the same computations."""

import pytest
from fastapi.testclient import TestClient

from hulthen1d import PotentialParams, scatter
from hulthen1d.service import app

ENVELOPE_KEYS = {"params", "command", "results", "tolerances", "status"}


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


BARRIER = {"m": 1, "a": 0.4, "b": 0.5, "q": 0.6, "qt": 0.7, "v0": 2,
           "mode": "barrier"}
WELL = {"m": 1, "a": 0.5, "b": 0.75, "q": 0.1, "qt": 0.5, "v0": 5,
        "mode": "well"}


def test_health(client):
    body = client.get("/health").json()
    assert body["status"] == "ok"


def test_profile_endpoint(client):
    resp = client.post("/profile", json={"xmin": -10, "xmax": 10, "n": 3})
    assert resp.status_code == 200
    doc = resp.json()
    assert set(doc) == ENVELOPE_KEYS
    assert doc["results"]["rows"][1] == {"x": 0.0, "V": 2.0}


def test_scatter_endpoint_matches_library(client):
    resp = client.post("/scatter", json={"params": BARRIER, "energy": 2.0})
    assert resp.status_code == 200
    row = resp.json()["results"]["rows"][0]
    expected = scatter(PotentialParams(m=1, a=0.4, b=0.5, q=0.6, q_tilde=0.7,
                                       v0=2), 2.0)
    assert row["T"] == pytest.approx(expected.transmission, rel=1e-12)
    assert row["R"] == pytest.approx(expected.reflection, rel=1e-12)


def test_scan_e_endpoint(client):
    resp = client.post("/scan-e", json={"params": BARRIER, "emin": 0.1,
                                        "emax": 5.0, "n": 12})
    rows = resp.json()["results"]["rows"]
    assert len(rows) == 12
    assert max(r["unitarity_defect"] for r in rows) < 1e-8


def test_scan_v0_endpoint(client):
    resp = client.post("/scan-v0", json={"params": BARRIER, "energy": 1.0,
                                         "v0min": 0.0, "v0max": 5.0, "n": 6})
    rows = resp.json()["results"]["rows"]
    assert rows[0]["T"] == pytest.approx(1.0, abs=1e-10)


def test_bound_endpoint_with_trace(client):
    resp = client.post("/bound", json={"params": WELL, "scan_points": 400,
                                       "trace": True})
    assert resp.status_code == 200
    results = resp.json()["results"]
    assert results["count"] == 6
    assert len(results["trace"]) == 400


def test_verify_endpoint(client):
    resp = client.post("/verify", json={"params": BARRIER, "emin": 0.5,
                                        "emax": 5.0, "n": 3})
    doc = resp.json()
    assert doc["status"] == "ok"
    assert doc["results"]["max_abs_diff"] < 1e-4


def test_invalid_parameters_map_to_400(client):
    resp = client.post("/scatter", json={"params": {**BARRIER, "q": 2.0},
                                         "energy": 1.0})
    assert resp.status_code == 400
    resp = client.post("/scatter", json={"params": BARRIER, "energy": -1.0})
    assert resp.status_code == 400


def test_malformed_body_maps_to_422(client):
    resp = client.post("/scatter", json={"params": BARRIER})  # no energy
    assert resp.status_code == 422
    resp = client.post("/scatter", json={"params": {**BARRIER, "mode": "x"},
                                         "energy": 1.0})
    assert resp.status_code == 422
