"""Runs JSON-emitting bgrover commands and validates each document."""
import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["plan", "--n", "8", "--k", "2"],
    ["plan", "--n", "8", "--k", "4", "--convention", "round"],
    ["table", "amplitudes", "--n", "11", "--omega", "15/32pi", "--out", "json"],
    ["table", "table1", "--n", "8", "--out", "json"],
    ["sweep", "qubits-vs-iterations", "--n-max", "6", "--out", "json"],
    ["sweep", "iterations-vs-probability", "--out", "json"],
    ["sweep", "compare", "--target", "10000001", "--j", "6", "--out", "json"],
    ["search", "set", "--n", "4", "--target", "1101", "--mode", "binomial", "--j", "1"],
    ["search", "set", "--n", "4", "--target", "0000", "--mode", "binomial", "--plan", "ceil"],
    ["search", "retrieve", "--array", "1,-1,1", "--value-bits", "2", "--index", "110", "--j", "1"],
    ["search", "value", "--array", "1,-1,1", "--value-bits", "2", "--predicate", "negative", "--j", "1"],
    ["search", "value", "--array", "1,-1,1", "--value-bits", "2", "--predicate", "negative",
     "--adaptive", "--seed", "7"],
]


def main():
    exe, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in COMMANDS:
        proc = subprocess.run([exe, *args], capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        for e in errors:
            print(f"FAIL {' '.join(args)}: {e.json_path}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
