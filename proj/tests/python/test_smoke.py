import json
import os
import pathlib
import subprocess

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]
FIXTURES = ROOT / "tests" / "fixtures"
SCHEMAS = ROOT / "schema"
GOLDEN = "no C & (forall B(x,y). forall C(z). no C) & (forall B(x,y). forall C(z). y = z)"


def fixture(name):
    return (FIXTURES / name).read_text()


# --- extension module -------------------------------------------------------

adr = pytest.importorskip("adr")


def test_wp_golden():
    out = adr.wp(fixture("example1.adr"), "p", "phi")
    assert out["text"] == GOLDEN
    assert out["definite"] == {"op": "no", "types": ["C"]}
    assert out["wpre"]["op"] == "and"


def test_errors_map_to_exceptions():
    text = fixture("example1.adr")
    with pytest.raises(adr.FragmentError):
        adr.wp(text, "p", "absence_post")
    with pytest.raises(adr.AdrError, match="post-condition must be closed"):
        adr.wp(text, "p", "free_post")
    with pytest.raises(adr.AdrError, match="arity mismatch"):
        adr.parse(fixture("bad_arity.adr"))


def test_check_apply_recover():
    text = fixture("example1.adr")
    assert adr.check(text, "ex1")["status"] == "holds"
    bottom = adr.check(text, "to_bottom", theorem="validity", max_nodes=1, max_edges=1)
    assert bottom["status"] == "fails"
    assert "counterexample" in bottom

    g = adr.apply(text, "single", "p", "a")
    assert sorted(g["nodes"]) == ["n", "u_1"]
    assert g["edges"][0]["attachment"] == ["n", "u_1"]

    rec = fixture("recovery.adr")
    assert adr.recover(rec, "conformant", "refined")["steps"] == []
    assert len(adr.recover(rec, "one_a", "refined")["steps"]) == 1
    assert adr.recover(rec, "blocked", "refined", max_depth=2) is None


def test_logic_helpers():
    text = fixture("example1.adr")
    assert adr.equivalent(text, "top", "empty_conj")
    assert not adr.equivalent(text, "phi", "golden")
    assert adr.count_graphs([("C", 1)], 1, 1) == 3
    assert adr.count_graphs([("B", 2)], 2, 1) == 8


def test_format_round_trip():
    for path in sorted(FIXTURES.glob("*.adr")):
        if path.name.startswith("bad_"):
            continue
        once = adr.format(path.read_text())
        assert adr.format(once) == once, path.name
        assert adr.parse(once) == adr.parse(path.read_text()), path.name


# --- command-line JSON against the schemas ----------------------------------

jsonschema = pytest.importorskip("jsonschema")
referencing = pytest.importorskip("referencing")


def cli():
    path = os.environ.get("ADR_BIN")
    if not path:
        candidate = ROOT / "build" / "tools" / "adr"
        path = str(candidate) if candidate.exists() else None
    if not path:
        pytest.skip("adr binary not found; set ADR_BIN")
    return path


def run_json(*args, ok_codes=(0,)):
    proc = subprocess.run([cli(), *args, "--json"], capture_output=True, text=True)
    assert proc.returncode in ok_codes, proc.stderr
    return json.loads(proc.stdout)


def validator(name):
    registry = referencing.Registry()
    for path in SCHEMAS.glob("*.schema.json"):
        schema = json.loads(path.read_text())
        registry = registry.with_resource(path.name, referencing.Resource.from_contents(schema))
    schema = json.loads((SCHEMAS / name).read_text())
    return jsonschema.Draft202012Validator(schema, registry=registry)


@pytest.mark.parametrize("name", sorted(p.name for p in FIXTURES.glob("*.adr") if not p.name.startswith("bad_")))
def test_document_schema(name):
    validator("document.schema.json").validate(run_json("fmt", str(FIXTURES / name)))


def test_wp_schema():
    for mode in ("literal", "feasible"):
        out = run_json("wp", str(FIXTURES / "example1.adr"), "p", "phi", "--mode", mode)
        validator("wp.schema.json").validate(out)


def test_verdict_schema():
    v = validator("verdict.schema.json")
    v.validate(run_json("check", str(FIXTURES / "example1.adr"), "ex1"))
    v.validate(run_json("check", str(FIXTURES / "example1.adr"), "to_bottom", "--theorem", "validity",
                        "--max-nodes", "1", "--max-edges", "1", ok_codes=(3,)))
    v.validate(run_json("check", str(FIXTURES / "example1.adr"), "ex1", "--theorem", "weakest", ok_codes=(0, 3)))


def test_plan_schema():
    v = validator("plan.schema.json")
    v.validate(run_json("recover", str(FIXTURES / "recovery.adr"), "one_a", "refined"))
    v.validate(run_json("recover", str(FIXTURES / "recovery.adr"), "blocked", "refined", "--max-depth", "2",
                        ok_codes=(4,)))


def test_graph_schema():
    validator("graph.schema.json").validate(run_json("apply", str(FIXTURES / "example1.adr"), "single", "p",
                                                     "--at", "a"))
