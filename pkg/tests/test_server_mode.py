"""CLI thin-client mode against a live service."""

import json
import socket
import subprocess
import sys
import threading
import time

import pytest
import uvicorn

from bvgrid import save_function
from bvgrid.service import create_app
from conftest import scalar_fn


@pytest.fixture(scope="module")
def server_url():
    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        port = s.getsockname()[1]
    config = uvicorn.Config(create_app(), host="127.0.0.1", port=port, log_level="error")
    server = uvicorn.Server(config)
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    deadline = time.time() + 10
    while not server.started:
        if time.time() > deadline:
            raise RuntimeError("server did not start")
        time.sleep(0.05)
    yield f"http://127.0.0.1:{port}"
    server.should_exit = True
    thread.join(timeout=5)


def test_cli_against_server_matches_in_process(server_url, tmp_path):
    f = tmp_path / "f.json"
    f.write_bytes(save_function(scalar_fn([[0, 0], [1, 1]])))
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"family": "wiener", "p": 1}))
    base = [sys.executable, "-m", "bvgrid.cli", "variation", str(f), "--family-config", str(cfg)]
    local = subprocess.run(base, capture_output=True, timeout=60)
    remote = subprocess.run(base + ["--server", server_url], capture_output=True, timeout=60)
    assert local.returncode == 0 and remote.returncode == 0
    assert json.loads(local.stdout) == json.loads(remote.stdout)


def test_cli_server_mode_maps_422_to_exit_2(server_url, tmp_path):
    f = tmp_path / "f.json"
    f.write_bytes(save_function(scalar_fn([[0, 0], [1, 1]])))
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"family": "riesz", "p": 1}))
    res = subprocess.run(
        [
            sys.executable,
            "-m",
            "bvgrid.cli",
            "variation",
            str(f),
            "--family-config",
            str(cfg),
            "--server",
            server_url,
        ],
        capture_output=True,
        timeout=60,
    )
    assert res.returncode == 2
