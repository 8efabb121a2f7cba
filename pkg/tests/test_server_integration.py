"""End-to-end check of the CLI talking to a real uvicorn instance."""

import socket
import subprocess
import sys
import time

import httpx
import pytest


def _free_port() -> int:
    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        return s.getsockname()[1]


@pytest.fixture(scope="module")
def server_url():
    port = _free_port()
    proc = subprocess.Popen(
        [sys.executable, "-m", "uvicorn", "cumulants.service:app",
         "--host", "127.0.0.1", "--port", str(port), "--log-level", "warning"],
        stdout=subprocess.DEVNULL,
        stderr=subprocess.DEVNULL,
    )
    url = f"http://127.0.0.1:{port}"
    try:
        deadline = time.time() + 30
        while True:
            try:
                if httpx.get(url + "/health", timeout=1.0).status_code == 200:
                    break
            except httpx.HTTPError:
                pass
            if time.time() > deadline:
                proc.terminate()
                pytest.fail("server did not come up")
            time.sleep(0.2)
        yield url
    finally:
        proc.terminate()
        proc.wait(timeout=10)


def test_cli_against_running_server(server_url):
    out = subprocess.run(
        [sys.executable, "-m", "cumulants", "convert", "--from", "moments",
         "--to", "free", "--seq", "0,1,0,2,0,5", "--server", server_url],
        capture_output=True, text=True,
    )
    assert out.returncode == 0
    assert out.stdout == "0,1,0,0,0,0\n"


def test_cli_remote_semantic_error(server_url):
    out = subprocess.run(
        [sys.executable, "-m", "cumulants", "convert", "--from", "moments",
         "--to", "free", "--seq", "1,2", "--order", "9", "--server", server_url],
        capture_output=True, text=True,
    )
    assert out.returncode == 3


def test_cli_unreachable_server_is_usage_error():
    out = subprocess.run(
        [sys.executable, "-m", "cumulants", "table", "wigner_catalan",
         "--server", "http://127.0.0.1:9"],
        capture_output=True, text=True,
    )
    assert out.returncode == 2
