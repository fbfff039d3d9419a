#!/usr/bin/env python3
"""End-to-end checks for the hodgeparam command line tool.

Usage: cli_checks.py TOOL DATADIR SCENARIO
Exits 0 when the scenario's contract holds.
"""

import json
import pathlib
import subprocess
import sys
import tempfile


def run(tool, *args):
    return subprocess.run([tool, *args], capture_output=True, text=True)


def load(path):
    with open(path) as f:
        return json.load(f)


def require(cond, message):
    if not cond:
        sys.exit("FAIL: " + message)


def scenario_check_pass(tool, data, tmp):
    out = tmp / "report.json"
    r = run(tool, "check", str(data / "gl3_sample.json"), "--out", str(out))
    require(r.returncode == 0, "expected exit 0, got %d" % r.returncode)
    rep = load(out)
    require(rep["pass"] is True, "report should pass")
    require(rep["schema"] == "v1", "schema tag missing")
    require(rep["shape"]["S0"] == [1], "S0 should be [1]")
    require(rep["shape"]["I0"] == [1], "I0 should be [1]")
    require(rep["generic"] is True, "shape should be generic")
    require(rep["non_critical"] is True, "sample should be non-critical")
    require(rep["normal_form"]["2,3"] == "1", "boundary entry should scale to 1")


def scenario_check_critical(tool, data, tmp):
    out = tmp / "report.json"
    r = run(tool, "check", str(data / "crystalline_critical.json"),
            "--out", str(out))
    require(r.returncode == 1, "expected exit 1, got %d" % r.returncode)
    rep = load(out)
    require(rep["pass"] is False, "report should fail")
    require(rep["witness"]["u"] == [2, 1], "witness permutation should be the swap")
    require(rep["witness"]["k"] == 1, "witness index should be 1")


def scenario_parse_error(tool, data, tmp):
    r = run(tool, "check", str(data / "malformed.json"))
    require(r.returncode == 2, "expected exit 2, got %d" % r.returncode)
    require("zero denominator" in r.stderr, "stderr should name the bad rational")
    r = run(tool, "check", str(data / "no_such_file.json"))
    require(r.returncode == 2, "missing file should exit 2, got %d" % r.returncode)
    r = run(tool, "sweep", "nonsense")
    require(r.returncode == 2, "bad sweep kind should exit 2, got %d" % r.returncode)


def scenario_roundtrip(tool, data, tmp):
    out = tmp / "report.json"
    r = run(tool, "roundtrip", str(data / "gl3_sample.json"), "--out", str(out))
    require(r.returncode == 0, "expected exit 0, got %d" % r.returncode)
    rep = load(out)
    require(rep["mode"] == "parameter", "mode should be parameter")
    require(rep["equivalent"] is True, "roundtrip should be equivalent")


def scenario_forward_reconstruct(tool, data, tmp):
    bundle = tmp / "bundle.json"
    back = tmp / "back.json"
    r = run(tool, "forward", str(data / "gl3_sample.json"), "--out", str(bundle))
    require(r.returncode == 0, "forward should exit 0, got %d" % r.returncode)
    r = run(tool, "reconstruct", str(bundle), "--out", str(back))
    require(r.returncode == 0, "reconstruct should exit 0, got %d" % r.returncode)
    r = run(tool, "check", str(data / "gl3_sample.json"),
            "--out", str(tmp / "check.json"))
    require(r.returncode == 0, "check should exit 0")
    normal = load(tmp / "check.json")["normal_form"]
    require(load(back)["matrix"] == normal,
            "reconstruction should return the normal form")
    r = run(tool, "roundtrip", str(bundle), "--out", str(tmp / "rt.json"))
    require(r.returncode == 0, "bundle roundtrip should exit 0")


def scenario_corrupt_bundle(tool, data, tmp):
    bundle = tmp / "bundle.json"
    run(tool, "forward", str(data / "gl3_sample.json"), "--out", str(bundle))
    b = load(bundle)
    key = sorted(k for k, w in b["windows"].items() if w["cst"])[0]
    cst_key = sorted(b["windows"][key]["cst"].keys())[0]
    b["windows"][key]["cst"][cst_key][0][0] = "7777"
    corrupted = tmp / "corrupt.json"
    corrupted.write_text(json.dumps(b))
    out = tmp / "report.json"
    r = run(tool, "roundtrip", str(corrupted), "--out", str(out))
    require(r.returncode == 1, "corrupt bundle should exit 1, got %d" % r.returncode)
    rep = load(out)
    require(rep["pass"] is False, "corrupt roundtrip should fail")
    require("error" in rep, "report should carry the failure reason")


def scenario_determinism(tool, data, tmp):
    pairs = [
        ("sweep", "extcomb", "--seed", "5", "--trials", "4"),
        ("sweep", "jacobian", "--seed", "9", "--trials", "2", "--max-n", "3"),
        ("forward", str(data / "gl3_sample.json")),
    ]
    for args in pairs:
        a = tmp / "a.json"
        b = tmp / "b.json"
        ra = run(tool, *args, "--out", str(a))
        rb = run(tool, *args, "--out", str(b))
        require(ra.returncode == rb.returncode, "exit codes should agree")
        require(a.read_bytes() == b.read_bytes(),
                "repeated run should be byte-identical: %s" % " ".join(args))


def scenario_sweep_values(tool, data, tmp):
    out = tmp / "report.json"
    r = run(tool, "sweep", "extcomb", "--seed", "3", "--trials", "6",
            "--out", str(out))
    require(r.returncode == 0, "extcomb sweep should exit 0, got %d" % r.returncode)
    rep = load(out)
    require(rep["pass"] is True, "extcomb sweep should pass")
    table = rep["rows"][0]["f_table"]
    counts = [row["brute"] for row in table]
    require(counts == [2, 5, 13, 34, 89], "interval counts off: %r" % counts)
    for row in table:
        require(row["brute"] == row["recurrence"], "recurrence mismatch")
    require(rep["rows"][3]["roundtrips"] == 6, "all round trips should pass")


SCENARIOS = {
    "check_pass": scenario_check_pass,
    "check_critical": scenario_check_critical,
    "parse_error": scenario_parse_error,
    "roundtrip": scenario_roundtrip,
    "forward_reconstruct": scenario_forward_reconstruct,
    "corrupt_bundle": scenario_corrupt_bundle,
    "determinism": scenario_determinism,
    "sweep_values": scenario_sweep_values,
}


def main():
    if len(sys.argv) != 4:
        sys.exit(__doc__)
    tool, data, name = sys.argv[1], pathlib.Path(sys.argv[2]), sys.argv[3]
    if name not in SCENARIOS:
        sys.exit("unknown scenario %r" % name)
    with tempfile.TemporaryDirectory() as tmp:
        SCENARIOS[name](tool, data, pathlib.Path(tmp))
    print("PASS:", name)


if __name__ == "__main__":
    main()
