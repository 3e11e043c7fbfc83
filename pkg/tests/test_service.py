import pytest
from fastapi.testclient import TestClient

from cherncalc.service import create_app


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


LINE = {"pos": [[1]], "neg": []}
TWO_LINES = {"pos": [[1, 0], [0, 1]], "neg": []}


def test_healthz(client):
    resp = client.get("/healthz")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok"}


def test_chern_total(client):
    resp = client.post("/chern/total", json={"x": TWO_LINES, "degree": 3})
    assert resp.status_code == 200
    body = resp.json()
    assert body["degree"] == 3
    assert len(body["coefficients"]) == 3  # 1, c1, c2; c3 vanishes
    assert body["coefficients"][1]["terms"] == [
        {"exps": [1, 0], "coeff": "1"},
        {"exps": [0, 1], "coeff": "1"},
    ]


def test_chern_total_root_mismatch_is_a_domain_error(client):
    resp = client.post("/chern/total", json={"x": TWO_LINES, "roots": 1})
    assert resp.status_code == 400
    assert "root" in resp.json()["detail"]


def test_chern_tensor(client):
    resp = client.post("/chern/tensor", json={"x": LINE, "y": LINE})
    assert resp.status_code == 200
    assert resp.json() == {"pos": [[2]], "neg": []}


def test_chern_lambda(client):
    resp = client.post("/chern/lambda", json={"k": 2, "x": TWO_LINES})
    assert resp.status_code == 200
    assert resp.json() == {"pos": [[1, 1]], "neg": []}


def test_chern_dual(client):
    resp = client.post("/chern/dual", json={"x": LINE})
    assert resp.status_code == 200
    assert resp.json() == {"pos": [[-1]], "neg": []}


def test_schur(client):
    resp = client.post("/schur", json={"mu": [1, 1], "x": TWO_LINES})
    assert resp.status_code == 200
    body = resp.json()
    # x (x) x minus lambda^2: both squares and one of the two mixed lines survive
    assert sorted(body["pos"]) == [[0, 2], [1, 1], [2, 0]]
    assert body["neg"] == []


def test_universal_poly(client):
    resp = client.post("/universal-poly", json={"n": 1, "m": 1, "i": 1})
    assert resp.status_code == 200
    body = resp.json()
    assert body["vars"] == ["cF1", "cG1"]
    assert body["terms"] == [
        {"exps": [1, 0], "coeff": "1"},
        {"exps": [0, 1], "coeff": "1"},
    ]


def test_lr_golden_bytes(client):
    resp = client.post("/lr", json={"mu": [2, 1], "eps": [1], "nu": [1, 1]})
    assert resp.status_code == 200
    assert resp.content == b'{"coefficient":1}'


def test_gamma_degree(client):
    prod = {"pos": [[1, 1], [0, 0]], "neg": [[1, 0], [0, 1]]}
    resp = client.post("/gamma/degree", json={"x": prod})
    assert resp.status_code == 200
    assert resp.json() == {"degree": 2}
    resp = client.post("/gamma/degree", json={"x": {"pos": [], "neg": []}})
    assert resp.json() == {"degree": "inf"}


def test_gamma_series(client):
    resp = client.post("/gamma/series", json={"x": {"pos": [[1]], "neg": [[0]]}, "degree": 4})
    assert resp.status_code == 200
    body = resp.json()
    assert body["degree"] == 4
    assert len(body["coefficients"]) == 2  # the series terminates at gamma^1


def test_grass_present(client):
    resp = client.post("/grass/present", json={"m": 2, "n": 4})
    assert resp.status_code == 200
    body = resp.json()
    assert body["rank"] == 6
    assert body["generators"] == ["c1", "c2"]
    assert body["checks"] == {
        "relations_vanish": True,
        "rank_matches": True,
        "series_inverse": True,
    }


def test_grass_present_is_capped(client):
    resp = client.post("/grass/present", json={"m": 1, "n": 11})
    assert resp.status_code == 400
    assert "n <= 10" in resp.json()["detail"]


def test_grass_rank_golden_bytes(client):
    resp = client.post("/grass/rank", json={"m": 2, "n": 4})
    assert resp.status_code == 200
    assert resp.content == b'{"rank":6}'


def test_grass_domain_error(client):
    resp = client.post("/grass/rank", json={"m": 2, "n": 2})
    assert resp.status_code == 400
    assert isinstance(resp.json()["detail"], str)


def test_grr_verify(client):
    resp = client.post("/grr/verify", json={"max_i": 2, "seed": 5})
    assert resp.status_code == 200
    reports = resp.json()
    assert all(r["pass"] for r in reports)
    assert reports[0]["case"] == "vanishing[i=1,k=1]"
    seeded = [r for r in reports if "seed" in r["inputs"]]
    assert seeded and all(r["inputs"]["seed"] == 5 for r in seeded)


def test_validation_errors_are_422(client):
    assert client.post("/lr", json={"mu": [1, 2], "eps": [], "nu": []}).status_code == 422
    assert client.post("/chern/lambda", json={"k": -1, "x": LINE}).status_code == 422
    big = {"pos": [[1]] * 17, "neg": []}
    assert client.post("/chern/dual", json={"x": big}).status_code == 422
    assert client.post("/chern/total", json={"x": LINE, "degree": 40}).status_code == 422
