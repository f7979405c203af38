#!/usr/bin/env python3
"""Validate the CLI's JSON output against the schemas shipped in docs/schemas."""
import json
import subprocess
import sys
from pathlib import Path

import jsonschema

OCA = sys.argv[1]
SCHEMA_DIR = Path(sys.argv[2])

CASES = [
    (["check-robin", "-n", "5040"], "check.schema.json", {0, 1}),
    (["check-robin", "--factored", "3^4*5^3*7^2*11", "--threshold", "half-egamma"],
     "check.schema.json", {0}),
    (["check-lagarias", "-n", "135135"], "check.schema.json", {0}),
    (["gen-ca", "--below", "10000000"], "record.schema.json", {0, 1}),
    (["gen-oca", "--max-records", "8"], "record.schema.json", {0, 1}),
    (["scan", "--kind", "robin", "--from", "5041", "--to", "20000"], "scan.schema.json", {0}),
    (["scan", "--kind", "lagarias", "--from", "3", "--to", "9999"], "scan.schema.json", {0}),
    (["ca-like", "--x", "17", "--schedule", "13:0.67,11:0.91,7:1.06,5:1.12,3:1.38,2:1.75"],
     "ca_like.schema.json", {0}),
    (["max-k", "-n", "135135"], "max_k.schema.json", {0}),
    (["g-curve", "-n", "135135", "--k-max", "6"], "g_curve.schema.json", {0}),
    (["xk", "--eps", "0.021", "--k", "2"], "xk.schema.json", {0}),
    (["constants", "--name", "all", "--digits", "6"], "constant.schema.json", {0}),
    (["verify-lemma", "--id", "L4.4"], "lemma.schema.json", {0}),
    (["verify-lemma", "--id", "P3.5"], "lemma.schema.json", {0}),
]


def main() -> int:
    store = {}
    for f in SCHEMA_DIR.glob("*.schema.json"):
        doc = json.loads(f.read_text())
        store[f.name] = doc
        store[doc["$id"]] = doc

    failures = 0
    for args, schema_name, ok_codes in CASES:
        schema = store[schema_name]
        resolver = jsonschema.RefResolver(
            base_uri=schema["$id"], referrer=schema, store=store)
        proc = subprocess.run(
            [OCA, *args, "--format", "json"], capture_output=True, text=True, timeout=300)
        label = " ".join(args)
        if proc.returncode not in ok_codes:
            print(f"FAIL {label}: exit code {proc.returncode}, stderr: {proc.stderr.strip()}")
            failures += 1
            continue
        lines = [ln for ln in proc.stdout.splitlines() if ln.strip()]
        if not lines:
            print(f"FAIL {label}: no JSON output")
            failures += 1
            continue
        try:
            for ln in lines:
                jsonschema.validate(json.loads(ln), schema, resolver=resolver)
            print(f"ok   {label} ({len(lines)} object(s))")
        except Exception as exc:  # noqa: BLE001 - report any validation problem
            print(f"FAIL {label}: {exc}")
            failures += 1

    # Determinism: with --no-meta, identical argv must give byte-identical output.
    for args in (["constants", "--name", "all", "--digits", "8"],
                 ["gen-oca", "--max-records", "6"],
                 ["scan", "--kind", "robin", "--from", "3", "--to", "6000"]):
        cmd = [OCA, *args, "--format", "json", "--no-meta"]
        a = subprocess.run(cmd, capture_output=True, timeout=300)
        b = subprocess.run(cmd, capture_output=True, timeout=300)
        label = " ".join(args)
        if a.stdout == b.stdout and a.returncode == b.returncode:
            print(f"ok   determinism: {label}")
        else:
            print(f"FAIL determinism: {label}: outputs differ between runs")
            failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
