"""Runs the suite with --json and validates the report against the schema."""
import json
import subprocess
import sys

import jsonschema

hopfcalc, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
for args in (["--field", "Qr", "suite", "--filter", "confluence.*"],
             ["--field", "Q", "suite", "--filter", "quantum.*"]):
    out = subprocess.run([hopfcalc, "--json", *args], capture_output=True, text=True, check=True)
    report = json.loads(out.stdout)
    jsonschema.validate(report, schema)
    ids = [r["check_id"] for r in report["results"]]
    assert ids == sorted(ids) and len(ids) == len(set(ids)), ids
print("report validates")
