#!/usr/bin/env python3
"""Runs wtatool on the fixture files and checks reports and exit codes.

usage: cli_smoke.py WTATOOL DATA_DIR
"""

import json
import os
import subprocess
import sys
import tempfile

CODES = {"yes": 0, "no": 1, "unknown": 2, "error": 3}

tool, data = sys.argv[1], sys.argv[2]
failures = []


def run(*args, code=None, verdict=None):
    p = subprocess.run([tool, *args], capture_output=True, text=True)
    try:
        report = json.loads(p.stdout)
    except json.JSONDecodeError:
        failures.append(f"{args}: stdout is not JSON: {p.stdout!r}")
        return {}
    # the exit code always matches the verdict
    if CODES.get(report.get("verdict")) != p.returncode:
        failures.append(f"{args}: verdict {report.get('verdict')} but exit {p.returncode}")
    if code is not None and p.returncode != code:
        failures.append(f"{args}: expected exit {code}, got {p.returncode}")
    if verdict is not None and report.get("verdict") != verdict:
        failures.append(f"{args}: expected {verdict}, got {report.get('verdict')}")
    return report


def expect(cond, what):
    if not cond:
        failures.append(what)


def path(name):
    return os.path.join(data, name)


r = run("eval", path("arctic1.json"), "--tree", "gamma(gamma(alpha))", code=0)
expect(r.get("value") == "2", f"eval value {r.get('value')!r}")

run("decide", "image-at-most", path("arctic2.json"), "--k", "2", code=1)
run("decide", "image-at-most", path("arctic2.json"), "--k", "3", code=0)
run("cfg-finite", path("infinite.cfg"), code=1)
run("cfg-finite", path("finite.cfg"), code=0)

with tempfile.TemporaryDirectory() as tmp:
    out = os.path.join(tmp, "p.json")
    four = "gamma(gamma(gamma(gamma(e))))"
    r = run("preimage", path("nat3.json"), "--weight", "4", "--out", out, "--tree", four, code=0)
    expect(r.get("member") is True, "gamma^4(e) not in the preimage of 4")
    expect(os.path.exists(out), "preimage automaton not written")
    # the written automaton is a wta file again
    r = run("eval", out, "--tree", four, code=0)
    expect(r.get("literal") == "1", f"preimage automaton gives {r.get('literal')!r}")
    r = run("eval", out, "--tree", "gamma(gamma(e))", code=0)
    expect(r.get("literal") == "0", f"preimage automaton gives {r.get('literal')!r} on gamma^2(e)")

run("decide", "finite-image", path("arctic1.json"), code=1)
run("decide", "finite-image", path("arctic2.json"), code=0)
run("decide", "finite-image", path("twochain.json"), code=2)
run("decide", "cost-finite", path("nat3.json"), code=0)
run("decide", "e-step", path("arctic2.json"), "--set", '["-inf","0","1"]', code=0)
run("crisp", path("arctic2.json"), code=0)

# errors still produce a report
run("eval", path("arctic1.json"), "--tree", "delta(alpha)", code=3)
run("eval", path("missing.json"), "--tree", "alpha", code=3)
run("decide", "image-at-most", path("arctic2.json"), code=3)

for f in failures:
    print("FAIL:", f)
print(f"cli smoke: {len(failures)} failure(s)")
sys.exit(1 if failures else 0)
