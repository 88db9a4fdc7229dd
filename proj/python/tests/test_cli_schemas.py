"""CLI --format json output against schemas/*.schema.json."""
import json
import os
import pathlib
import shutil
import subprocess

import jsonschema
import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMAS = ROOT / "schemas"
CLI = os.environ.get("EIGENSTRATA_CLI") or shutil.which("eigenstrata") or str(ROOT / "build" / "eigenstrata")

CASES = [
    ("dimension", ["dimension", "-p", "3,1"]),
    ("sample", ["sample", "-p", "2,1", "-n", "3"]),
    ("interpolate", ["interpolate", "-p", "2,1", "-d", "3"]),
    ("interpolate", ["--mode", "modular", "interpolate", "-p", "2,2", "-d", "2"]),
    ("verify", ["verify"]),
    ("hilbert", ["hilbert", "-p", "2,1", "--t-range", "0..4"]),
    ("hilbert", ["hilbert", "-p", "1,1", "--t-range", "0..2"]),
    ("degree", ["degree", "-p", "2,2"]),
    ("edd", ["edd", "-p", "2,1", "--u", "0,2,10"]),
    ("edd", ["edd", "-p", "2,2"]),
    ("nearest", ["nearest", "-p", "2,1", "--matrix", "{matrix}"]),
    ("invariants", ["invariants", "-p", "2,1", "--dmax", "3"]),
    ("discriminant", ["discriminant", "-n", "2"]),
    ("suite", ["suite", "-q", "--criteria", "1,4"]),
]


def run(args, tmp_path):
    m = tmp_path / "m.json"
    m.write_text(json.dumps({"n": 3, "upper": [1, 0.5, 0, 2, 0, 10]}))
    args = [a.replace("{matrix}", str(m)) for a in args]
    p = subprocess.run([CLI, "--format", "json", *args], capture_output=True, text=True, check=False)
    assert p.returncode == 0, p.stderr
    return json.loads(p.stdout)


@pytest.mark.parametrize("schema,args", CASES, ids=[" ".join(a) for _, a in CASES])
def test_schema(schema, args, tmp_path):
    doc = run(args, tmp_path)
    jsonschema.validate(doc, json.loads((SCHEMAS / f"{schema}.schema.json").read_text()))


def test_output_file(tmp_path):
    out = tmp_path / "o.json"
    p = subprocess.run([CLI, "--format", "json", "-o", str(out), "dimension", "-p", "2,2"], capture_output=True)
    assert p.returncode == 0
    assert json.loads(out.read_text())["codimension"] == 4


def test_seed_reproducible(tmp_path):
    a = run(["--seed", "9", "sample", "-p", "2,2", "-n", "2"], tmp_path)
    b = run(["--seed", "9", "sample", "-p", "2,2", "-n", "2"], tmp_path)
    c = run(["--seed", "10", "sample", "-p", "2,2", "-n", "2"], tmp_path)
    assert a == b
    assert a != c
