"""Runs every report-producing command and validates its JSON against the shipped schema."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def run(rdl, *args):
    proc = subprocess.run([rdl, *args], capture_output=True, text=True, check=False)
    if proc.returncode != 0:
        raise SystemExit(f"{' '.join(args)} exited {proc.returncode}: {proc.stderr}")
    return proc.stdout


def main():
    rdl, schema_path, data = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    schema = json.loads(schema_path.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        generated = {}
        for kind in ("random-family", "random-lsip", "random-conic"):
            for seed in (1, 2, 3):
                path = tmp / f"{kind}-{seed}.json"
                path.write_text(run(rdl, "generate", "--kind", kind, "--seed", str(seed)))
                generated.setdefault(kind, []).append(str(path))

        cases = [
            ["diagnose", "--input", str(data / "t1.json"), "--eps-grid", "0.25,1"],
            ["conjugate", "--input", str(data / "abs_function.json")],
            ["lsip-solve", "--input", str(data / "polygon64.json")],
            ["lsip-discretize", "--input", str(data / "polygon64.json"),
             "--schedule", str(data / "polygon_schedule.json")],
            ["lsip-reduce", "--input", str(data / "polygon64.json")],
            ["lsip-farkas", "--input", str(data / "polygon64.json")],
            ["conic-farkas", "--input", str(data / "conic_demo.json"), "--r", "0"],
            ["conic-opt", "--input", str(data / "conic_demo.json"), "--point", "0"],
        ]
        cases += [["diagnose", "--input", p] for p in generated["random-family"]]
        cases += [["lsip-solve", "--input", p] for p in generated["random-lsip"]]
        cases += [["lsip-discretize", "--input", p] for p in generated["random-lsip"]]
        cases += [["conic-farkas", "--input", p, "--r", "0.5"] for p in generated["random-conic"]]

        failures = 0
        for args in cases:
            report = json.loads(run(rdl, *args))
            errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
            for err in errors:
                print(f"{args[0]} {args[2]}: {'/'.join(map(str, err.path))}: {err.message}")
            failures += bool(errors)
        print(f"{len(cases)} reports checked, {failures} invalid")
        return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
