#!/usr/bin/env python3
"""End-to-end checks of the borelmm command line: exit codes, report schema,
byte-determinism (timing stripped), witness round-trips, cache behavior."""

import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1] if len(sys.argv) > 1 else "./borelmm"
failures = []


def run(*args, env=None, expect=0):
    e = dict(os.environ)
    e.pop("BORELMM_CACHE_DIR", None)
    if env:
        e.update(env)
    p = subprocess.run([BIN, *args], capture_output=True, text=True, env=e)
    if p.returncode != expect:
        failures.append(f"{args}: exit {p.returncode}, expected {expect}\n{p.stderr}")
    return p


def check(name, cond, detail=""):
    if not cond:
        failures.append(f"{name}: {detail}")
    print(f"[{'pass' if cond else 'FAIL'}] {name}")


def stripped(text):
    doc = json.loads(text)
    doc.pop("timing", None)
    return json.dumps(doc, sort_keys=True)


def validate_report(doc):
    assert set(doc) == {"checks", "command", "config", "exit_code", "summary", "timing"}, sorted(doc)
    names = [c["name"] for c in doc["checks"]]
    assert names == sorted(names), "checks not sorted by name"
    assert len(set(names)) == len(names), "duplicate check names"
    for c in doc["checks"]:
        assert c["status"] in {"pass", "fail", "skipped", "capped"}
        if c["status"] == "fail":
            assert "witness" in c, f"failing check {c['name']} lacks a witness"
    s = doc["summary"]
    assert s["total"] == len(names) == s["pass"] + s["fail"] + s["skipped"] + s["capped"]
    assert set(doc["timing"]) == set(names) | {"total"}


# --- determinism: byte-identical reports for identical configs -------------
a = run("components", "--n", "3", "--seed", "9").stdout
b = run("components", "--n", "3", "--seed", "9").stdout
check("determinism.components", stripped(a) == stripped(b))
validate_report(json.loads(a))

a = run("verify-invariants", "--n", "2", "--trials", "5", "--seed", "1").stdout
b = run("verify-invariants", "--n", "2", "--trials", "5", "--seed", "1").stdout
check("determinism.verify-invariants", stripped(a) == stripped(b))
doc = json.loads(a)
validate_report(doc)
check("verify-invariants.all-pass", doc["summary"]["fail"] == 0 and doc["summary"]["pass"] > 0)

# --- spec'd facts through the CLI ------------------------------------------
doc = json.loads(run("components", "--n", "3").stdout)
check("components.count", len(doc["checks"]) == 8, f"{len(doc['checks'])} witnesses")
check("components.all-zero", doc["summary"]["pass"] == 8)

doc = json.loads(run("groebner", "--n", "2").stdout)
by_name = {c["name"]: c for c in doc["checks"]}
check("groebner.dimension-7", by_name["groebner.dimension"]["witness"]["dimension"] == 7)
check("groebner.ci", by_name["groebner.complete-intersection"]["witness"]["complete_intersection"])
check("groebner.certified", by_name["groebner.certified"]["status"] == "pass")

doc = json.loads(run("moment-ideal", "--n", "2", "--flavor", "borel").stdout)
check("moment-ideal.count", len(doc["generators"]) == 3)
check("moment-ideal.schema",
      all(set(g) == {"vars", "terms"} and
          all(set(t) == {"coeff", "exps"} for t in g["terms"]) for g in doc["generators"]))

# --- exit codes --------------------------------------------------------------
run("groebner", "--n", "2", "--max-degree", "1", expect=3)
run("semi-invariants", "--n", "2", "--twist", "det", "--words", "1,ELL{1},ELL{2}",
    "--verify", expect=2)
run("nonsense-command", expect=2)
run("semi-invariants", "--n", "2", "--twist", "det", "--words", "1,ELL{9}", "--verify", expect=2)

# --- failing checks carry witnesses that re-evaluate -------------------------
from fractions import Fraction

p = run("semi-invariants", "--n", "2", "--twist", "det", "--claim-twist", "det-inv",
        "--words", "1,ELL{1}", "--verify", expect=1)  # psi checked against the wrong law
doc = json.loads(p.stdout)
validate_report(doc)
fail = [c for c in doc["checks"] if c["status"] == "fail"]
check("wrong-twist.fails", len(fail) == 1)
w = fail[0]["witness"]
check("wrong-twist.witness-has-point", "x" in w and "b" in w, json.dumps(fail[0])[:200])

ev = json.loads(run("eval", "--n", "2", "--words", "1,ELL{1}", "--twist", "det",
                    "--x", json.dumps(w["x"]), "--b", json.dumps(w["b"])).stdout)
check("witness.reeval-det-law", ev["twist_law_holds"] is True)  # the det law does hold
vx, vbx = Fraction(ev["value_at_x"]), Fraction(ev["value_at_bx"])
detb = Fraction(ev["det_b"])
check("witness.reeval-discrepancy", vbx != vx / detb and vbx == vx * detb,
      f"{vx} {vbx} {detb}")  # ...so the claimed det-inv law reproduces the reported failure

# --- restriction surface ------------------------------------------------------
doc = json.loads(run("restrict", "--n", "2", "--twist", "det", "--words", "1,ELL{1}").stdout)
by_name = {c["name"]: c for c in doc["checks"]}
check("restrict.alternating", by_name["restrict.alternating"]["status"] == "pass")
check("restrict.factorization", by_name["restrict.torus-factorization"]["status"] == "pass")
check("restrict.orbit", by_name["restrict.orbit-alternating"]["status"] == "pass")

# fixed labels are permuted, not preserved, by variable swaps: the squared word
# restricts to a symmetric polynomial, while its orbit sum still alternates
p = run("restrict", "--n", "2", "--twist", "det", "--words", "1,ELL{1}*ELL{1}", expect=1)
doc = json.loads(p.stdout)
validate_report(doc)
by_name = {c["name"]: c for c in doc["checks"]}
check("restrict.raw-not-alternating", by_name["restrict.alternating"]["status"] == "fail")
check("restrict.square-factorizes", by_name["restrict.torus-factorization"]["status"] == "pass")
check("restrict.square-orbit", by_name["restrict.orbit-alternating"]["status"] == "pass")

# guard atoms pin rows n/1, so the orbit check is skipped for them
doc = json.loads(
    run("restrict", "--n", "2", "--twist", "det", "--words", "1,GUARDN{}", expect=1).stdout)
by_name = {c["name"]: c for c in doc["checks"]}
check("restrict.guard-raw", by_name["restrict.alternating"]["status"] == "fail")
check("restrict.guard-orbit-skipped",
      by_name["restrict.orbit-alternating"]["status"] == "skipped")

# --- unique lift --------------------------------------------------------------
doc = json.loads(run("unique-lift", "--n", "3", "--trials", "10", "--seed", "4").stdout)
validate_report(doc)
check("unique-lift.pass", doc["summary"]["fail"] == 0 and doc["summary"]["pass"] == 12)

# --- singular probe -----------------------------------------------------------
doc = json.loads(run("singular-probe", "--n", "2", "--samples", "5").stdout)
by_name = {c["name"]: c for c in doc["checks"]}
check("singular.dim-certified", by_name["singular.dimension"]["status"] == "pass")
check("singular.codim-1",
      by_name["singular.dimension"]["witness"]["codimension_in_fiber"] == 1)
doc = json.loads(run("singular-probe", "--n", "3", "--samples", "3").stdout)
by_name = {c["name"]: c for c in doc["checks"]}
check("singular.n3-sampled", by_name["singular.dimension"]["status"] == "skipped"
      and by_name["singular.collision-drop"]["status"] == "pass")

# --- groebner cache -----------------------------------------------------------
with tempfile.TemporaryDirectory() as tmp:
    env = {"BORELMM_CACHE_DIR": tmp}
    p1 = run("groebner", "--n", "2", env=env)
    p2 = run("groebner", "--n", "2", env=env)
    check("cache.miss-then-hit", "basis cached to" in p1.stderr
          and "loaded from cache" in p2.stderr, p1.stderr + p2.stderr)
    check("cache.same-answers", stripped(p1.stdout) == stripped(p2.stdout))
    cache_file = os.path.join(tmp, "mu_b.n2.grevlex.json")
    with open(cache_file, "w") as f:
        f.write('{"basis": [{"vars": [], "terms": []}]}')  # zero poly: install must refuse
    p3 = run("groebner", "--n", "2", env=env)
    check("cache.rejects-bad", "loaded from cache" not in p3.stderr
          and "basis cached to" in p3.stderr
          and stripped(p3.stdout) == stripped(p1.stdout))

# --- emitted basis reloads ------------------------------------------------------
with tempfile.TemporaryDirectory() as tmp:
    out = os.path.join(tmp, "basis.json")
    run("groebner", "--n", "2", "--emit", out)
    emitted = json.load(open(out))
    check("emit.schema", set(emitted) == {"basis", "n", "order"} and len(emitted["basis"]) > 0)

print(f"\n{len(failures)} failure(s)")
for f in failures:
    print("  -", f)
sys.exit(1 if failures else 0)
