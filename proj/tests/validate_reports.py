#!/usr/bin/env python3
# Copyright 2026 The mincontrol Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Checks every --json report of the CLI against docs/report.schema.json."""

import argparse
import json
import os
import subprocess
import sys
import tempfile

import jsonschema


def run(binary, args):
    proc = subprocess.run([binary] + args, capture_output=True, text=True)
    return proc.returncode, proc.stdout


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("binary")
    parser.add_argument("schema")
    parser.add_argument("data_dir")
    opts = parser.parse_args()

    with open(opts.schema) as f:
        schema = json.load(f)
    validator_cls = jsonschema.Draft202012Validator
    validator_cls.check_schema(schema)
    validator = validator_cls(schema)

    eq7 = os.path.join(opts.data_dir, "eq7.json")
    tmp = tempfile.mkdtemp()
    zero_diag = os.path.join(tmp, "zero_diag.txt")
    with open(zero_diag, "w") as f:
        f.write("1 1 0\n0 0 1\n0 1 2\n")
    report = os.path.join(tmp, "report.json")

    cases = [
        (0, ["solve-mcp", eq7]),
        (0, ["solve-mcp", "--mode", "greedy", "--no-timings", eq7]),
        (0, ["solve-mcp", "--perturb", "1e-10", "--seed", "3", eq7]),
        (0, ["solve-mscp", eq7]),
        (1, ["solve-mscp", zero_diag]),
        (0, ["verify", "--b", "[0,1,1,1,0]", eq7]),
        (1, ["verify", "--method", "pbh-vec", "--b", "[0,1,0,0,0]", eq7]),
        (0, ["oracle", eq7]),
        (0, ["compare", eq7]),
        (0, ["compare", zero_diag]),
        (0, ["eig", eq7]),
        (2, ["solve-mcp", os.path.join(tmp, "missing.json")]),
    ]
    failures = 0
    for expected_status, args in cases:
        status, out = run(opts.binary, args[:1] + ["--json"] + args[1:])
        label = " ".join(args[:-1])
        if status != expected_status:
            print(f"FAIL {label}: exit {status}, expected {expected_status}")
            failures += 1
            continue
        doc = json.loads(out)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        for e in errors:
            print(f"FAIL {label}: {list(e.path)}: {e.message}")
        failures += bool(errors)
        if args[0] == "solve-mcp" and status == 0:
            with open(report, "w") as f:
                f.write(out)
            status, out = run(opts.binary, ["verify", "--json", "--report", report])
            errors = list(validator.iter_errors(json.loads(out)))
            if status != 0 or errors:
                print(f"FAIL verify --report after {label}")
                failures += 1
    print(f"{len(cases) - failures}/{len(cases)} reports valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
