# Copyright 2026 The kzp Authors
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


"""End-to-end checks of the kzp command-line tool.

Usage: cli_integration.py <path to kzp> <path to suite_report.schema.json>
"""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

KZP = sys.argv[1]
SCHEMA = sys.argv[2]
failures = []


def run(*args, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run([KZP, *args], capture_output=True, text=True, env=full_env, timeout=300)


def expect(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def solve_and_check(tmp):
    sol = os.path.join(tmp, "sol.json")
    r = run("solve", "--p", "3", "--kappa", "4", "--m", "2,2", "--k", "2", "-o", sol)
    expect(r.returncode == 0 and r.stdout == "", "solve writes the document to -o and exits 0")
    doc = json.load(open(sol))
    coords = doc["solution"]["coords"]
    expect([c["J"] for c in coords] == [[2, 0], [1, 1], [0, 2]],
           "solution lists the three weight coordinates in basis order")

    r = run("check", "kz", "--sol", sol)
    report = json.loads(r.stdout)
    expect(r.returncode == 0 and report["passed"] and report["name"] == "kz", "check kz passes with exit 0")

    r = run("check", "all", "--sol", sol)
    report = json.loads(r.stdout)
    names = [c["name"] for c in report["checks"]]
    expect(r.returncode == 0 and report["passed"] and "singular" in names, "check all passes and includes singular")

    # Flip one coefficient: the KZ check must fail with a witness.
    term = coords[0]["poly"]["terms"][0]
    term["c"] = 1 if term["c"] == 2 else 2
    bad = os.path.join(tmp, "bad.json")
    json.dump(doc, open(bad, "w"))
    r = run("check", "kz", "--sol", bad)
    report = json.loads(r.stdout) if r.stdout else {}
    expect(r.returncode == 1 and not report.get("passed", True) and "witness" in report,
           "perturbed solution fails kz with exit 1 and a witness")

    r = run("check", "nonsense", "--sol", sol)
    expect(r.returncode == 2 and r.stderr.startswith("kzp:"), "unknown check name exits 2")

    r = run("check", "kz", "--sol", os.path.join(tmp, "missing.json"))
    expect(r.returncode == 2, "missing solution file exits 2")


def usage_errors():
    r = run("solve", "--p", "3", "--kappa", "3", "--m", "1,1")
    expect(r.returncode == 2 and "kzp:" in r.stderr, "kappa divisible by p is a precondition error (exit 2)")
    r = run("solve", "--p", "3", "--kappa", "5/3", "--m", "1,1")
    expect(r.returncode == 2, "p dividing the denominator of kappa exits 2")
    r = run("solve", "--p", "9", "--kappa", "2", "--m", "1,1")
    expect(r.returncode == 2, "composite modulus exits 2")
    r = run("frobnicate")
    expect(r.returncode == 2, "unknown subcommand exits 2")
    r = run("solve", "--kappa", "2")
    expect(r.returncode == 2, "missing required option exits 2")
    r = run("--help")
    expect(r.returncode == 0 and "solve" in r.stdout, "--help exits 0")
    r = run("--version")
    expect(r.returncode == 0 and r.stdout.strip() != "", "--version exits 0")


def integrals_and_curves():
    r = run("integrate", "--p", "5", "--kappa", "2", "--m", "1,1,1")
    report = json.loads(r.stdout)
    expect(r.returncode == 0 and report["passed"] and report["tuples"] == 60, "k=1 integral identity on all 60 triples")

    r = run("integrate", "--p", "7", "--kappa", "4", "--m", "2,2", "--k", "2", "--x", "0,1")
    report = json.loads(r.stdout)
    expect(r.returncode == 0 and report["passed"], "k=2 integral identity at one point")

    r = run("curve", "--kind", "elliptic", "--p", "7")
    report = json.loads(r.stdout)
    expect(r.returncode == 0 and report["passed"] and report["tuples"] == 210, "elliptic point sums at p=7")

    r = run("curve", "--kind", "surface", "--p", "7", "--x", "2,5")
    expect(r.returncode == 0 and json.loads(r.stdout)["passed"], "surface point sums at p=7")

    r = run("curve", "--kind", "elliptic", "--p", "3")
    expect(r.returncode == 2, "elliptic at p=3 is refused by the gate")
    r = run("curve", "--kind", "elliptic", "--p", "3", "--no-gate")
    report = json.loads(r.stdout)
    expect(r.returncode == 1 and report["outside_gate"], "elliptic at p=3 without the gate fails with exit 1")


def suite(tmp):
    first = run("suite", "--level", "quick", "--seed", "42")
    second = run("suite", "--level", "quick", "--seed", "42")
    expect(first.returncode == 0, "quick suite exits 0")
    expect(first.stdout == second.stdout, "quick suite output is byte-identical across runs")

    out = os.path.join(tmp, "suite.json")
    third = run("suite", "--level", "quick", "--seed", "42", "-o", out, env={"KZP_WORKERS": "1"})
    expect(third.returncode == 0 and open(out).read() == first.stdout,
           "single-worker run written with -o matches the default run")

    report = json.loads(first.stdout)
    try:
        jsonschema.validate(report, json.load(open(SCHEMA)))
        expect(True, "suite report validates against the schema")
    except jsonschema.ValidationError as e:
        expect(False, "suite report validates against the schema: " + e.message)
    expect([c["id"] for c in report["criteria"]] == list(range(1, 11)), "report lists criteria 1..10 in order")
    expect(all(c["passed"] for c in report["criteria"]), "every criterion passed")

    r = run("suite", "--criterion", "1")
    one = json.loads(r.stdout)
    expect(r.returncode == 0 and one["id"] == 1 and one["passed"], "single criterion run")
    r = run("suite", "--criterion", "11")
    expect(r.returncode == 2, "criterion out of range exits 2")
    r = run("suite", "--level", "medium")
    expect(r.returncode == 2, "unknown level exits 2")


with tempfile.TemporaryDirectory() as tmp:
    solve_and_check(tmp)
    usage_errors()
    integrals_and_curves()
    suite(tmp)

if failures:
    print(f"{len(failures)} check(s) failed")
    sys.exit(1)
print("all CLI checks passed")
