"""Run every qcli subcommand on the golden configs and validate the JSON output."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

qcli, schema_path, golden = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
schema = json.loads(schema_path.read_text())
validator = jsonschema.Draft202012Validator(schema)

three = golden / "three_variable.json"
root3 = golden / "root_of_unity_3.json"
generic = golden / "generic_3.json"

runs = [
    (three, ["center"]),
    (three, ["spectrum"]),
    (three, ["strata"]),
    (root3, ["hprimes"]),
    (root3, ["is-generic"]),
    (generic, ["is-ufd"]),
    (root3, ["goldie"]),
    (three, ["goldie"]),
    (root3, ["mul", "x2", "x1^-1"]),
    (root3, ["pow", "(x1+x2)", "3"]),
    (root3, ["inv", "x1*(1 + x2)"]),
    (generic, ["normal-check", "x1 + x2", "--precision", "3"]),
    (root3, ["normal-check", "x1^2*x2"]),
    (root3, ["decompose", "x1^2 + x2^3 + 1/2*x1"]),
    (three, ["monomialize", "x1 + x1*x2 - zeta*x3^2"]),
    (generic, ["chain-check"]),
    (generic, ["dot"]),
]

failures = 0
for config, args in runs:
    out = subprocess.run([qcli, *args, "--config", str(config)], capture_output=True, text=True)
    label = " ".join(args)
    if out.returncode != 0:
        print(f"FAIL {label}: exit {out.returncode}: {out.stderr.strip()}")
        failures += 1
        continue
    errors = list(validator.iter_errors(json.loads(out.stdout)))
    if errors:
        print(f"FAIL {label}: {errors[0].message}")
        failures += 1
    else:
        print(f"ok   {label}")

sys.exit(1 if failures else 0)
