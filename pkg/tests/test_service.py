"""HTTP service endpoints."""

import json

import pytest
from fastapi.testclient import TestClient

from bvgrid import save_function
from bvgrid.service import create_app
from conftest import scalar_fn, theta_family


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def fn_obj(values):
    return json.loads(save_function(scalar_fn(values)))


W1 = {"family": "wiener", "p": 1}


def test_health(client):
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json()["status"] == "ok"


def test_variation_endpoint(client):
    body = {"function": fn_obj([[0, 0], [1, 1]]), "family_config": W1}
    resp = client.post("/variation", json=body)
    assert resp.status_code == 200
    obj = resp.json()
    assert obj["status"] == "computed"
    assert obj["results"]["sup"]["value"] == 1.0
    assert obj["results"]["breakdown"]["total"] == 1.0


def test_variation_is_deterministic(client):
    body = {"function": fn_obj([[0, 1], [2, 0.5]]), "family_config": {"family": "riesz", "p": 2}}
    r1 = client.post("/variation", json=body).json()
    r2 = client.post("/variation", json=body).json()
    assert r1 == r2


def test_distance_endpoint(client):
    body = {
        "function_a": fn_obj([[0, 0], [0, 0]]),
        "function_b": fn_obj([[0, 0], [0, 1]]),
        "family_config": W1,
    }
    resp = client.post("/distance", json=body)
    assert resp.status_code == 200
    assert resp.json()["results"]["rho"] == 1.0


def test_distance_grid_mismatch_maps_to_422(client):
    body = {
        "function_a": fn_obj([[0, 0], [1, 1]]),
        "function_b": fn_obj([[0, 0, 0], [1, 1, 1]]),
        "family_config": W1,
    }
    assert client.post("/distance", json=body).status_code == 422


def test_bad_config_maps_to_422(client):
    body = {"function": fn_obj([[0, 0], [1, 1]]), "family_config": {"family": "riesz", "p": 1}}
    assert client.post("/variation", json=body).status_code == 422


def test_size_guard_maps_to_413(client):
    big = scalar_fn([[float(i % 2)] * 2 for i in range(30)])
    body = {
        "function": json.loads(save_function(big)),
        "family_config": {"family": "wiener", "p": 2},
        "method": "brute",
    }
    assert client.post("/variation", json=body).status_code == 413


def test_verify_endpoint(client):
    resp = client.post("/verify", json={"suite": "semigroup", "seed": 1, "count": 50})
    assert resp.status_code == 200
    assert resp.json()["status"] == "pass"


def test_verify_unknown_suite_maps_to_422(client):
    resp = client.post("/verify", json={"suite": "nope", "seed": 1, "count": 5})
    assert resp.status_code == 422


def test_precompact_endpoint(client):
    fam = theta_family(11)
    body = {"family": fam.to_json(), "epsilon": 0.25, "family_config": W1}
    resp = client.post("/precompact", json=body)
    assert resp.status_code == 200
    obj = resp.json()
    assert obj["status"] == "pass"
    assert obj["results"]["verification"]["ok"] is True
