import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

exe, schema_path = sys.argv[1], sys.argv[2]
schema = json.loads(Path(schema_path).read_text())

with tempfile.TemporaryDirectory() as d:
    runs = []
    for k in range(2):
        out = Path(d) / f"r{k}.json"
        p = subprocess.run([exe, "contract", "--order", "2", "--deg", "2", "--no-time", "--json", str(out)],
                           capture_output=True, text=True)
        # the form expansion fails on one printed coefficient
        assert p.returncode == 1, p.returncode
        runs.append(out.read_bytes())
    report = json.loads(runs[0])
    jsonschema.validate(report, schema)
    assert runs[0] == runs[1], "reports differ between identical runs"
    ids = [c["id"] for c in report["checks"]]
    assert "limit-relations" in ids and "ideal-contraction.rplus" in ids, ids
    assert all(c["witness"] for c in report["checks"] if c["status"] == "fail")

    out = Path(d) / "hopf.json"
    p = subprocess.run([exe, "check", "hopf", "--algebra", "ekappa", "--deg", "3", "--json", str(out)])
    assert p.returncode == 0
    report = json.loads(out.read_text())
    jsonschema.validate(report, schema)
    assert [c["status"] for c in report["checks"]] == ["pass", "pass"]
print("ok")
