"""The numba kernels and the plain-Python fallback must agree exactly."""

import json
import os
import subprocess
import sys

import qcatalan

DIGEST_SCRIPT = """
import json
import qcatalan as qc
from qcatalan.verify import report_to_json

audit = report_to_json(qc.audit_injection(4, 5, 2))
res = qc.inject("112112221122", "12111212212212", r=2)
doc = {
    "backend": qc.BACKEND,
    "words7": qc.enumerate_words(7),
    "inv6": [qc.inversions(w) for w in qc.enumerate_words(6)],
    "audit": audit,
    "inject": [res.nu, res.omega, res.shift_exponent],
}
print(json.dumps(doc, sort_keys=True))
"""


def run_digest(backend):
    env = dict(os.environ, QCAT_BACKEND=backend)
    proc = subprocess.run(
        [sys.executable, "-c", DIGEST_SCRIPT],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    return json.loads(proc.stdout)


def test_backend_is_reported():
    assert qcatalan.BACKEND in ("numba", "numpy")


def test_numpy_fallback_selected_by_env():
    doc = run_digest("numpy")
    assert doc["backend"] == "numpy"


def test_backends_agree():
    numba_doc = run_digest("numba")
    numpy_doc = run_digest("numpy")
    assert numba_doc["backend"] == "numba"
    assert numpy_doc["backend"] == "numpy"
    for key in ("words7", "inv6", "audit", "inject"):
        assert numba_doc[key] == numpy_doc[key], key


def test_bad_backend_env_rejected():
    env = dict(os.environ, QCAT_BACKEND="gpu")
    proc = subprocess.run(
        [sys.executable, "-c", "import qcatalan"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode != 0
    assert "QCAT_BACKEND" in proc.stderr
