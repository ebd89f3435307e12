import json
import shutil
import subprocess

import pytest

from latpoly.cli import main

DIAMOND = {
    "kind": "table",
    "elements": ["0", "a", "b", "1"],
    "meet": [["0", "0", "0", "0"], ["0", "a", "0", "a"], ["0", "0", "b", "b"], ["0", "a", "b", "1"]],
    "join": [["0", "a", "b", "1"], ["a", "a", "1", "1"], ["b", "1", "b", "1"], ["1", "1", "1", "1"]],
}


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        p = tmp_path / name
        p.write_text(json.dumps(obj))
        return str(p)

    out = {}
    out["chain3"] = write("chain3.json", {"kind": "chain", "size": 3})
    out["chain2"] = write("chain2.json", {"kind": "chain", "size": 2})
    out["diamond"] = write("diamond.json", DIAMOND)
    # top when a coordinate is 1 or both are b; otherwise a if a coordinate is a, else 0
    vals = ["0", "a", "0", "1", "a", "a", "a", "1", "0", "a", "1", "1", "1", "1", "1", "1"]
    out["diamond_fn"] = write("diamond_fn.json", {"lattice": "diamond.json", "arity": 2, "values": vals})
    out["meas"] = write("meas.json", {"lattice": "chain3.json", "arity": 2, "values": [0, 2, 1, 2]})
    out["min3"] = write("min3.json", {"lattice": "chain3.json", "arity": 2, "values": [0, 0, 0, 0, 1, 1, 0, 1, 2]})
    out["max3"] = write("max3.json", {"lattice": "chain3.json", "arity": 2, "values": [0, 1, 2, 1, 1, 2, 2, 2, 2]})
    out["gap"] = write("gap.json", {"lattice": "chain3.json", "arity": 1, "values": [0, 0, 2]})
    out["mix"] = write(
        "mix.json",
        {"lattice": {"kind": "chain", "size": 3}, "arity": 2, "values": [0, 0, 0, 0, 1, 2, 0, 2, 2]},
    )
    out["bad_values"] = write("bad.json", {"lattice": "chain3.json", "arity": 2, "values": [0, 1]})
    out["bad_lattice"] = write("badlat.json", {"lattice": {"kind": "chain"}, "arity": 1, "values": [0]})
    out["tmp"] = tmp_path
    return out


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def js(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, (json.loads(out) if out.strip() else None), err


def test_diamond_fixture_is_the_registry_function(files):
    from latpoly.harness.registry import entry
    from latpoly.io import load_table

    assert load_table(files["diamond_fn"]).values == entry("diamond").table.values


def test_decide_diamond(files, capsys):
    code, out, _ = js(capsys, "decide", "--table", files["diamond_fn"])
    assert code == 1
    assert out["verdict"] is False and out["counterexample"] == ["b", "b"]


def test_decide_classes(files, capsys):
    assert js(capsys, "decide", "--table", files["min3"])[0] == 0
    assert js(capsys, "decide", "--table", files["min3"], "--class", "term")[0] == 0
    code, out, _ = js(capsys, "decide", "--table", files["mix"], "--class", "term")
    assert code == 1 and out["counterexample"] == [1, 2]
    code, out, _ = js(capsys, "decide", "--table", files["min3"], "--class", "sugeno")
    assert code == 0 and out["certificate"] == [0, 0, 0, 2]


def test_eval_sugeno_measure(files, capsys):
    code, out, _ = js(capsys, "eval", "--func", files["meas"], "--at", "(1,2)", "--form", "sugeno")
    assert code == 0 and out["value"] == 1


def test_eval_forms_agree(files, capsys):
    for form in ("dnf", "simplex", "sugeno"):
        code, out, _ = js(capsys, "eval", "--func", files["meas"], "--at", "2,0", "--form", form)
        assert code == 0 and out["value"] == 2


def test_eval_bad_tuple(files, capsys):
    code, out, err = run(capsys, "eval", "--func", files["meas"], "--at", "(1,2,0)")
    assert code == 2 and out == ""
    assert json.loads(err)["field"] == "at"


def test_canon(files, capsys):
    code, out, _ = js(capsys, "canon", "--table", files["max3"])
    assert code == 0
    assert out["alpha"] == [0, 2, 2, 2]
    assert out["alpha_star"] == [0, 2, 2, 0]
    assert out["unique_dnf"] is False
    code, _, err = run(capsys, "canon", "--table", files["gap"])
    assert code == 2 and "not a polynomial" in err


def test_check(files, capsys):
    code, out, _ = js(capsys, "check", "--table", files["gap"], "--prop", "convex-range")
    assert code == 1 and out["witness"]["missing"] == 1
    # the hull [0,2] still contains 1, where the gap table drops to 0
    code, out, _ = js(capsys, "check", "--table", files["gap"], "--prop", "idempotent", "--s", "range")
    assert code == 1 and out["witness"]["c"] == 1
    assert js(capsys, "check", "--table", files["mix"], "--prop", "idempotent", "--s", "range")[0] == 0
    code, out, _ = js(capsys, "check", "--table", files["gap"], "--prop", "idempotent")
    assert code == 1 and out["witness"]["c"] == 1
    code, out, _ = js(
        capsys, "check", "--table", files["diamond_fn"], "--prop", "min-homogeneous", "--domain", "weak"
    )
    assert code == 1 and out["domain"] == "L_n^(0,2)"


def test_check_rejects_inapplicable_options(files, capsys):
    assert run(capsys, "check", "--table", files["gap"], "--prop", "nondecreasing", "--s", "range")[0] == 2
    assert run(capsys, "check", "--table", files["gap"], "--prop", "nondecreasing", "--domain", "weak")[0] == 2


def test_characterize(files, capsys):
    code, out, _ = js(capsys, "characterize", "--table", files["gap"])
    assert code == 0
    assert out["polynomial"] is False and out["bundles"]["ChainStrIdem"] is False
    code, out, _ = js(capsys, "characterize", "--table", files["diamond_fn"])
    assert code == 0 and out["bundles"]["comonot(vi)"] is None


def test_verify_main_char(files, capsys):
    code, out, err = js(
        capsys, "verify", "--theorem", "mainChar", "--lattice", files["chain3"], "--arity", "2", "--mode", "exhaustive"
    )
    assert code == 0
    assert out["tables_checked"] == 19683 and out["discrepancy_count"] == 0
    assert "elapsed" in err


def test_verify_random_requires_seed(files, capsys):
    argv = ["verify", "--theorem", "mainChar", "--lattice", files["chain3"], "--arity", "2", "--mode", "random"]
    assert run(capsys, *argv, "--samples", "10")[0] == 2
    code, out, _ = js(capsys, *argv, "--samples", "10", "--seed", "4")
    assert code == 0 and out["plan"]["mode"] == "random-monotone" and out["plan"]["seed"] == 4


def test_verify_cap_error(files, capsys):
    code, _, err = run(capsys, "verify", "--theorem", "DNF-CNF", "--lattice", files["diamond"], "--arity", "2")
    assert code == 2 and "CapExceeded" in err


def test_verify_invalid_plan(files, capsys):
    code, _, err = run(
        capsys, "verify", "--theorem", "mainChar", "--lattice", files["diamond"], "--arity", "1", "--mode", "monotone"
    )
    assert code == 2 and "InvalidPlan" in err


def test_counterexample(capsys):
    code, out, _ = js(capsys, "counterexample", "threshold-mix")
    assert code == 0 and out["matches"] is True
    code, out, _ = js(capsys, "counterexample")
    assert code == 0 and len(out["entries"]) >= 8
    assert run(capsys, "counterexample", "nope")[0] == 2


def test_malformed_files_name_the_field(files, capsys):
    code, _, err = run(capsys, "decide", "--table", files["bad_values"])
    assert code == 2 and json.loads(err)["field"] == "values"
    code, _, err = run(capsys, "decide", "--table", files["bad_lattice"])
    assert code == 2 and json.loads(err)["field"] == "lattice.size"
    p = files["tmp"] / "notjson.json"
    p.write_text("{")
    code, _, err = run(capsys, "decide", "--table", str(p))
    assert code == 2 and json.loads(err)["field"] == "json"
    code, _, err = run(capsys, "decide", "--table", str(files["tmp"] / "missing.json"))
    assert code == 2 and json.loads(err)["field"] == "path"


def test_non_distributive_lattice_rejected(files, capsys):
    pent = {
        "kind": "table",
        "elements": ["0", "a", "b", "c", "1"],
        "meet": [[0, 0, 0, 0, 0], [0, 1, 0, 1, 1], [0, 0, 2, 0, 2], [0, 1, 0, 3, 3], [0, 1, 2, 3, 4]],
        "join": [[0, 1, 2, 3, 4], [1, 1, 4, 3, 4], [2, 4, 2, 4, 4], [3, 3, 4, 3, 4], [4, 4, 4, 4, 4]],
    }
    p = files["tmp"] / "pent.json"
    p.write_text(json.dumps(pent))
    code, _, err = run(capsys, "verify", "--theorem", "DNF-CNF", "--lattice", str(p), "--arity", "1")
    assert code == 2 and "LawViolation" in err


def test_text_format(files, capsys):
    code, out, _ = run(capsys, "--format", "text", "characterize", "--table", files["gap"])
    assert code == 0
    assert "polynomial: false" in out
    assert "ChainStrIdem" in out


def test_reports_are_deterministic(files, capsys):
    argv = ["verify", "--theorem", "all-bundles", "--lattice", files["chain3"], "--arity", "2",
            "--mode", "random", "--samples", "50", "--seed", "12"]
    a = run(capsys, *argv)[1]
    b = run(capsys, *argv)[1]
    assert a == b


@pytest.mark.skipif(shutil.which("latpoly") is None, reason="console script not installed")
def test_console_script(files):
    r = subprocess.run(["latpoly", "decide", "--table", files["diamond_fn"]], capture_output=True, text=True)
    assert r.returncode == 1
    assert json.loads(r.stdout)["counterexample"] == ["b", "b"]
