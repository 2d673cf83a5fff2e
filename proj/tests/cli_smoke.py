"""End-to-end checks of the cwb executable: reports, verdicts, exit codes, determinism."""

import json
import os
import subprocess
import sys
import tempfile

CWB = sys.argv[1]
SCHEMA = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "docs", "report.schema.json")
failures = []

try:
    import jsonschema

    with open(SCHEMA) as fh:
        validator = jsonschema.Draft202012Validator(json.load(fh))
except ImportError:
    validator = None


def run(*args, stdin=None):
    p = subprocess.run([CWB, *args], input=stdin, capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def report(*args, stdin=None, code=0):
    rc, out, err = run(*args, stdin=stdin)
    if rc != code:
        failures.append(f"{args}: exit {rc}, wanted {code}\n{err}")
        return {}
    if code != 0:
        return {}
    doc = json.loads(out)
    if validator is not None:
        for e in validator.iter_errors(doc):
            failures.append(f"{args}: schema: {e.message}")
    return doc


def check(name, cond):
    if not cond:
        failures.append(name)


REQUIRED = {"problem", "parameters", "result", "runtime_ms", "seed", "tool_version", "verdict", "schema_version"}

r = report("perms", "count", "--n", "7", "--pattern", "4 _ 1 3 2")
check("perms count 3592", r.get("result", {}).get("count") == 3592)
check("report fields", REQUIRED <= set(r))
check("problem id", r.get("problem") == "perms.count")

r = report("surfaces", "classify-k5", "--genus", "3")
check("13 classes", r["result"]["classes"] == 13)
check("24 without reversal", r["result"]["classes_without_reversal"] == 24)

r = report("graphs", "colours-z", "--set", "1")
check("colours-z {1} refuted-instance", r["verdict"] == "refuted-instance" and r["result"]["colours"] is False)
check("colours-z {1} reason", bool(r["result"].get("reason")))
r = report("graphs", "colours-z", "--set", "1,2,3")
check("colours-z {1,2,3}", r["verdict"] == "verified" and len(r["result"]["certificate"]) == 4)

r = report("perms", "wilf", "--n-max", "6", "--triples")
check("triples verified", r["verdict"] == "verified")
r = report("perms", "wilf", "--n-max", "5", "--pattern", "1 2 3", "--pattern", "1 3 2 4")
check("unequal patterns refuted with certificate", r["verdict"] == "refuted" and r["result"]["groups"][0]["certificate"]["n"] == 3)

r = report("tournaments", "inv", "--tournament", "3 101")
check("3-cycle inv 1", r["result"]["inv"] == 1)
r = report("game", "solve", "--n", "4")
check("game n=4", r["result"]["winner"] == "BLUE" and len(r["result"]["principal_variation"]) == 6)
r = report("setfam", "construct", "--a", "3", "--b", "5")
check("setfam construct", r["verdict"] == "verified" and r["result"]["check"]["bound"] == "6")
r = report("setfam", "check", "--mode", "bollobas", "--file", "-", stdin="[[[1,2],[3]],[[1,2],[3]]]")
check("setfam check identical pairs", r["verdict"] == "refuted-instance")
r = report("latin", "count", "--group", "Z4")
check("latin Z4", r["result"]["count"] == 1024)
r = report("latin", "count", "--file", "-", stdin="0 1\n1 0\n")
check("latin from stdin", r["result"]["count"] == 32)
r = report("capset", "max", "--n", "3")
check("capset 9", r["result"]["size"] == 9)
r = report("capset", "disjoint", "--n", "2", "--size", "4")
check("capset disjoint", r["verdict"] == "found")
r = report("capset", "disjoint", "--n", "1", "--size", "2")
check("capset disjoint impossible", r["verdict"] == "not-found")
r = report("graphs", "hall", "--file", "-", "--lambda", "0,0", stdin="2 1\n0 1\n")
check("hall single edge", r["verdict"] == "refuted-instance" and r["result"]["violating"] == [0, 1])
r = report("graphs", "cycle-check", "--file", "-", stdin="4 4 2\n0 2\n0 3\n1 2\n1 3\n")
check("K22 cycle", r["result"]["outcome"] == "conjecture_holds")
r = report("stirling", "number", "--n", "4", "--k", "2", "--r", "2")
check("stirling 3", r["result"]["value"] == "3")
r = report("stirling", "real-rooted", "--r", "2", "--n-max", "20")
check("real-rooted", r["verdict"] == "verified")

rc, out, _ = run("stirling", "table", "--n-max", "3", "--r", "1", "--format", "csv")
check("csv table", out == "1\n0,1\n0,1,1\n0,2,3,1\n")
rc, out, _ = run("tournaments", "inv", "--tournament", "3 101", "--format", "text")
check("text format", rc == 0 and "inv: 1" in out)

# exit codes
check("unknown subcommand", run("nonsense")[0] == 2)
check("unknown flag", run("perms", "count", "--n", "5", "--pattern", "12", "--bogus")[0] == 2)
check("missing flag", run("perms", "count", "--n", "5")[0] == 2)
check("bad pattern", run("perms", "count", "--n", "5", "--pattern", "1 1")[0] == 2)
rc, _, err = run("perms", "count", "--n", "13", "--pattern", "1 2 3")
check("refused cap exit 3", rc == 3 and "refused" in err)
check("capset cap exit 3", run("capset", "max", "--n", "5")[0] == 3)
rc, _, err = run("--timeout", "0.2", "capset", "max", "--n", "4")
check("timeout exit 3", rc == 3 and "timed out" in err)
check("tournament cap exit 3", run("tournaments", "table", "--n", "9")[0] == 3)

# determinism and --out
with tempfile.TemporaryDirectory() as d:
    a, b = os.path.join(d, "a.json"), os.path.join(d, "b.json")
    base = ["--seed", "7", "--no-timing", "latin", "sample", "--n", "6", "--count", "3"]
    run("--threads", "1", "--out", a, *base)
    run("--threads", "2", "--out", b, *base)
    with open(a) as fa, open(b) as fb:
        ta, tb = fa.read(), fb.read()
    check("byte-identical reports", ta == tb and len(ta) > 0)
    check("seed recorded", json.loads(ta)["seed"] == 7)

r = report("suite", "quick")
check("suite quick", r["verdict"] == "verified" and r["result"]["failed"] == 0)

for f in failures:
    print("FAIL", f)
print(f"{'ok' if not failures else 'failed'}: {len(failures)} failures")
sys.exit(1 if failures else 0)
