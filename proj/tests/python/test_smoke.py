import json

import pytest

import ldlab


@pytest.fixture(scope="module")
def l3():
    return ldlab.generate("lukasiewicz", n=3).artifact


def test_generate_and_validate(l3):
    assert l3["backend"]["kind"] == "thin-quantale"
    r = ldlab.validate(l3)
    assert r.ok
    assert r.overall == "pass"
    assert {a["id"] for a in r.report["axioms"]} >= {"cat", "mon-⋆", "mon-⋄", "tri-1"}


def test_mutation_fails_associativity(l3):
    bad = ldlab.mutate(l3, kind="table-entry", target="lindist.star", at=[0, 1], value=1).artifact
    r = ldlab.validate(bad)
    assert r.exit_code == ldlab.EXIT_FAIL
    assert "mon-⋆" in r.failing()


def test_unknown_field_is_a_schema_error(l3):
    r = ldlab.validate(dict(l3, colour="blue"))
    assert r.exit_code == ldlab.EXIT_SCHEMA


def test_derived_par_matches_native(l3):
    r = ldlab.translate(l3, "star")
    assert r.ok
    assert r.report["derived_par_matches"] is True
    assert len(r.report["derived_par"]) == 9


def test_search_counts_are_nested(l3):
    r = ldlab.search(l3)
    counts = list(r.report["counts"].values())
    assert counts[0] == 4
    assert counts == sorted(counts, reverse=True)


def test_interior_comonad_lift_round_trips():
    inst = ldlab.generate("lukasiewicz", n=3, comonad="interior", g=[0, 0, 2]).artifact
    assert ldlab.coincide(inst).ok
    lifted = ldlab.lift(inst)
    assert lifted.ok
    assert ldlab.validate(lifted.artifact).ok


def test_compact_hopf_table():
    inst = ldlab.generate("group-hopf", p=2, m=2).artifact
    r = ldlab.compact(inst)
    assert r.ok
    assert r.report["correspondence"]["text"] == "(5)↔23, (6)↔22, (7)↔21, (8)↔20"
    assert "BV-23" in ldlab.summarize(r.report)


def test_missing_comonad_is_a_precondition_error(l3):
    assert ldlab.coincide(l3).exit_code == ldlab.EXIT_PRECONDITION


def test_seed_corpus(tmp_path):
    assert ldlab.seed_corpus(tmp_path).ok
    manifest = json.loads((tmp_path / "manifest.json").read_text(encoding="utf-8"))
    for entry in manifest["entries"]:
        r = ldlab.validate(tmp_path / entry["file"])
        assert (r.exit_code == ldlab.EXIT_PASS) == (entry["expect"]["validate"] == "pass")


def test_reports_are_deterministic(l3):
    assert json.dumps(ldlab.validate(l3).report) == json.dumps(ldlab.validate(l3).report)


def test_bialgebra_comonad_on_the_unit():
    inst = ldlab.generate("lukasiewicz", n=3, comonad="bialgebra", b=0).artifact
    assert inst["comonad"] == {"kind": "bialgebra"}
    r = ldlab.validate(inst, axioms=["comonad", "monoidal", "L1", "L2"])
    assert r.ok
    assert ldlab.generate("lukasiewicz", n=3, comonad="bialgebra", b=2).exit_code == ldlab.EXIT_PRECONDITION
