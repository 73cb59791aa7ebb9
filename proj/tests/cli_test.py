#!/usr/bin/env python3
"""End-to-end checks of the cofreyd command line: exit codes, report schema, file handling."""

import argparse
import copy
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

ARGS = None
SCHEMAS = {}


def load_schemas(root):
    registry = Registry()
    for name in ("report", "coalgebra", "comodule", "freyd_object"):
        doc = json.loads((root / f"{name}.schema.json").read_text())
        SCHEMAS[name] = doc
        registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))
    return registry


def validate(kind, doc):
    jsonschema.Draft202012Validator(SCHEMAS[kind], registry=REGISTRY).validate(doc)


def run(*args, expect):
    proc = subprocess.run([str(ARGS.cli), *map(str, args)], capture_output=True, text=True)
    if proc.returncode != expect:
        raise AssertionError(f"{args}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
    return proc


def report(*args, expect=0):
    proc = run(*args, expect=expect)
    doc = json.loads(proc.stdout)
    validate("report", doc)
    names = [c["name"] for c in doc["checks"]]
    assert names == sorted(names), "checks are not sorted"
    counts = {s: sum(c["status"] == s for c in doc["checks"]) for s in ("pass", "fail", "finding")}
    assert counts == doc["summary"], (counts, doc["summary"])
    return doc


def check(doc, name):
    for c in doc["checks"]:
        if c["name"] == name:
            return c
    raise AssertionError(f"no check named {name}")


def write(name, doc):
    path = ARGS.work / name
    path.write_text(json.dumps(doc, indent=2))
    return path


def built(name, order):
    doc = json.loads(run("build", name, "--order", order, expect=0).stdout)
    validate("coalgebra", doc["coalgebra"])
    return doc


def regular_right(coalgebra, name="C"):
    """Right regular comodule: rho(b_k) = sum c b_i (x) b_j, i.e. entry (k, i, j, c)."""
    entries = sorted([k, i, j, c] for k, i, j, c in coalgebra["delta"])
    doc = {"schema": "cofreyd.comodule/1", "name": name, "side": "right", "dim": coalgebra["dim"], "coaction": entries}
    validate("comodule", doc)
    return doc


def zero_comodule():
    return {"schema": "cofreyd.comodule/1", "name": "0", "side": "right", "dim": 0, "coaction": []}


def identity(n):
    return {"rows": n, "cols": n, "entries": [[i, i, "1"] for i in range(n)]}


def obj(m, u, n, flavor="B"):
    doc = {"schema": "cofreyd.freyd-object/1", "flavor": flavor, "M": m, "u": u, "N": n}
    validate("freyd_object", doc)
    return doc


def case_build_check():
    doc = built("incidence-chain", 2)
    doc["comodules"] = [regular_right(doc["coalgebra"])]
    path = write("good.json", doc)
    rep = report("check", path)
    assert check(rep, f"{path}:coalgebra")["status"] == "pass"
    assert check(rep, f"{path}:comodule000")["status"] == "pass"
    h = built("H", 2)
    rep = report("check", write("h.json", h))
    assert rep["summary"]["fail"] == 0


def case_broken_counit():
    doc = built("incidence-chain", 1)
    doc["comodules"] = [regular_right(doc["coalgebra"])]
    doc["coalgebra"]["epsilon"][0] = "0"
    path = write("broken.json", doc)
    rep = report("check", path, expect=1)
    c = check(rep, f"{path}:coalgebra")
    assert c["status"] == "fail"
    assert c["data"]["defect_locations"], c


def case_empty_comodules():
    path = write("empty.json", built("dividedpower", 3))
    rep = report("check", path)
    assert [c["name"] for c in rep["checks"]] == [f"{path}:coalgebra"]


def case_example_suites():
    for name in ("incidence-chain", "dividedpower", "H", "matrix2-of-incidence"):
        rep = report("example", name, "--orders", "1..2")
        assert rep["summary"]["fail"] == 0, name
        assert rep["config"]["orders"] == [1, 2]
    rep = report("example", "H", "--orders", "1")
    f = check(rep, "d01.coradical_filtration.term1_vs_stated")
    assert f["status"] == "finding"
    assert f["data"]["computed_dim"] == 4
    rep = report("example", "incidence-chain", "--orders", "2", "--field", "Fp:101")
    assert rep["config"]["field"] == "F101"


def case_freyd_files():
    c = built("incidence-chain", 1)["coalgebra"]
    reg = regular_right(c)
    split = obj(reg, identity(3), reg)
    path = write("split.json", {"coalgebra": c, "object": split})
    rep = report("freyd", "zero-object", path)
    assert check(rep, "freyd.zero_object")["data"]["zero"] is True
    assert check(rep, "freyd.identity_zero_law")["status"] == "pass"

    to_zero = obj(reg, {"rows": 0, "cols": 3, "entries": []}, zero_comodule())
    path = write("to_zero.json", {"coalgebra": c, "object": to_zero})
    rep = report("freyd", "zero-object", path)
    assert check(rep, "freyd.zero_object")["data"]["zero"] is False
    rep = report("freyd", "complete", path)
    assert check(rep, "freyd.complex")["data"]["dims"] == [3, 0, 0]
    rep = report("freyd", "m2-equiv", path)
    assert check(rep, "m2.forward_valid")["status"] == "pass"
    assert check(rep, "m2.round_trip_iso")["status"] == "pass"
    assert check(rep, "m2.literal_display")["status"] == "finding"

    ident = {"source": to_zero, "target": to_zero, "f": identity(3), "g": identity(0)}
    path = write("map_nonzero.json", {"coalgebra": c, "map": ident})
    rep = report("freyd", "zero-morphism", path)
    assert check(rep, "freyd.zero_morphism")["data"]["zero"] is False
    assert check(rep, "freyd.matches_null_homotopy")["status"] == "pass"

    ident = {"source": split, "target": split, "f": identity(3), "g": identity(3)}
    path = write("map_zero.json", {"coalgebra": c, "map": ident})
    rep = report("freyd", "zero-morphism", path)
    z = check(rep, "freyd.zero_morphism")["data"]
    assert z["zero"] is True and "witness" in z
    assert check(rep, "freyd.split_sums_to_map")["status"] == "pass"


def case_probe():
    rep = report("probe", "--orders", "1..3")
    for name in ("probe.left_min_unbounded", "probe.right_min_constant", "probe.both_sides_witnessed"):
        assert check(rep, name)["status"] == "pass", name
    rep = report("probe", "--example", "incidence-chain", "--orders", "1,2")
    assert check(rep, "probe.growth")["status"] == "finding"


def case_oracle_finding():
    rep = report("oracle")
    assert check(rep, "oracle.complete")["status"] == "pass"
    assert check(rep, "oracle.witnesses_simple")["status"] == "pass"
    assert check(rep, "oracle.vs_witnesses")["status"] == "finding"
    c = built("incidence-chain", 1)
    c["coalgebra"]["field"] = "F101"
    path = write("family.json", {"coalgebra": c["coalgebra"], "family": [regular_right(c["coalgebra"])]})
    rep = report("oracle", "--family", path)
    assert check(rep, "oracle.complete")["status"] == "pass"


def case_determinism():
    a = run("--seed", "7", "example", "incidence-chain", "--orders", "1..3", expect=0).stdout
    b = run("--seed", "7", "example", "incidence-chain", "--orders", "1..3", expect=0).stdout
    assert a == b
    out = ARGS.work / "out.json"
    run("--seed", "7", "--out", out, "example", "incidence-chain", "--orders", "1..3", expect=0)
    assert out.read_text() == a
    assert json.loads(a)["config"]["seed"] == 7


def case_unknown_example():
    proc = run("example", "no-such-thing", expect=2)
    assert proc.stderr.startswith("error:"), proc.stderr
    assert proc.stdout == ""


def case_char_too_small():
    proc = run("probe", "--field", "F5", expect=2)
    assert "characteristic" in proc.stderr, proc.stderr
    run("probe", "--field", "Q", expect=2)


def case_schema_errors():
    doc = built("incidence-chain", 1)
    bad = copy.deepcopy(doc)
    del bad["coalgebra"]["epsilon"]
    proc = run("check", write("no_eps.json", bad), expect=2)
    assert "/coalgebra/epsilon" in proc.stderr, proc.stderr
    bad = copy.deepcopy(doc)
    bad["coalgebra"]["delta"][2] = [0, 1]
    proc = run("check", write("short_term.json", bad), expect=2)
    assert "/coalgebra/delta/2" in proc.stderr, proc.stderr
    bad = copy.deepcopy(doc)
    bad["comodules"] = [regular_right(doc["coalgebra"])]
    bad["comodules"][0]["side"] = "middle"
    proc = run("check", write("bad_side.json", bad), expect=2)
    assert "/comodules/0/side" in proc.stderr, proc.stderr
    proc = run("freyd", "complete", write("no_object.json", {"coalgebra": doc["coalgebra"]}), expect=2)
    assert "/object" in proc.stderr, proc.stderr
    (ARGS.work / "garbage.json").write_text("{not json")
    run("check", ARGS.work / "garbage.json", expect=2)


def main():
    global ARGS, REGISTRY
    p = argparse.ArgumentParser()
    p.add_argument("--cli", type=pathlib.Path, required=True)
    p.add_argument("--schemas", type=pathlib.Path, required=True)
    p.add_argument("--work", type=pathlib.Path, required=True)
    p.add_argument("--case", required=True)
    ARGS = p.parse_args()
    ARGS.work = ARGS.work / ARGS.case
    ARGS.work.mkdir(parents=True, exist_ok=True)
    REGISTRY = load_schemas(ARGS.schemas)
    fn = globals().get(f"case_{ARGS.case}")
    if fn is None:
        print(f"unknown case {ARGS.case}", file=sys.stderr)
        return 2
    fn()
    print(f"{ARGS.case}: ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
