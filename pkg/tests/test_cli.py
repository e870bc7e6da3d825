import json
import subprocess
import sys


from hmodular.cli import main, run


def call(capsys, *argv):
    code = main(["--json", *argv])
    return code, json.loads(capsys.readouterr().out)


def test_verify(capsys):
    code, out = call(capsys, "verify", "--presentation", "lemma54", "--n", "4")
    assert code == 0 and out == {"presentation": "lemma54:4", "pass": True, "relators_checked": 41}


def test_verify_printed_is_false_but_exit_zero(capsys):
    code, out = call(capsys, "verify", "--presentation", "lemma54", "--n", "3", "--printed")
    assert code == 0 and out["pass"] is False and out["failures"]


def test_abelianize(capsys):
    assert call(capsys, "abelianize", "--presentation", "lemma54", "--n", "1") == (0, {"torsion": [12], "rank": 0})


def test_counterexample(capsys):
    code, out = call(capsys, "counterexample-o5")
    assert code == 0
    assert out["relation_holds_in_O5"] is True and out["image_holds_in_O2"] is False


def test_eval_and_parse_errors(capsys):
    code, out = call(capsys, "eval", "--ctx", "gamma:4", "1 - 2*i1*i3")
    assert code == 0 and out["value"] == "1 - 2*i1*i3"
    code, out = call(capsys, "eval", "--ctx", "gamma:3", "1 + i3")
    assert code == 2
    assert out["error"]["type"] == "ParseError" and out["error"]["offset"] == 4


def test_matrix_entry_error_has_position(capsys):
    code, out = call(capsys, "matinv", "--ctx", "Z", '[["1","2"],["0","x"]]')
    assert code == 2 and out["error"]["entry"] == [1, 1]
    code, out = call(capsys, "matinv", "--ctx", "Z", '[["1","2"]')
    assert code == 2 and out["error"]["type"] == "ParseError"


def test_matinv_and_matmul(capsys):
    code, out = call(capsys, "matinv", "--ctx", "hurwitz", '[["1","i"],["0","1"]]')
    assert out["inverse"] == [["1", "-i"], ["0", "1"]]
    code, out = call(capsys, "matmul", "--ctx", "Z", '[["1","1"],["0","1"]]', '[["1","0"],["1","1"]]')
    assert out["product"] == [["2", "1"], ["1", "1"]]
    code, out = call(capsys, "matinv", "--ctx", "Z", '[["2","0"],["0","1"]]')
    assert code == 0 and out["inverse"] == [["1/2", "0"], ["0", "1"]]
    code, out = call(capsys, "matinv", "--ctx", "Z", '[["1","2"],["2","4"]]')
    assert code == 1 and out["error"]["type"] == "NotInvertible"


def test_member(capsys):
    m = '[["1","i1*i2"],["0","1"]]'
    code, out = call(capsys, "member", "--kind", "gl", "--ctx", "gamma:3", m)
    assert code == 0 and out["member"] is False
    code, out = call(capsys, "member", "--kind", "slplus", "--integral", "--ctx", "gamma:3", '[["i1","0"],["0","-i1"]]')
    assert out["member"] is True
    code, out = call(capsys, "member", "--kind", "gamma", "--ctx", "gamma:4", "1 + i1*i2*i3")
    assert out["member"] is False


def test_decompose(capsys):
    code, out = call(capsys, "decompose", "--ctx", "Imax:-3", '[["1","w"],["0","1"]]')
    assert code == 0 and out["verified"] is True
    code, out = call(capsys, "decompose", "--ctx", "gamma:5", '[["1","0"],["0","1"]]')
    assert code == 1 and out["error"]["type"] == "UnsupportedContext"


def test_relations_seeded(capsys):
    a = call(capsys, "--seed", "4", "relations", "--ctx", "gamma:3", "--family", "R1", "--radius", "2", "--budget", "50")
    b = call(capsys, "--seed", "4", "relations", "--ctx", "gamma:3", "--family", "R1", "--radius", "2", "--budget", "50")
    assert a == b and a[1]["families"]["R1"]["checked"] == 50


def test_split(capsys):
    code, out = call(capsys, "split", "--n", "2")
    assert code == 0 and out["factor_AC"] and out["C_matches_previous"]
    code, out = call(capsys, "split", "--n", "3", "--partition",
                     '{"A": ["b_i1"], "B": ["d_i2"], "C": ["j", "a", "b_i2", "c", "d_i1"]}')
    assert code == 1 and out["error"]["type"] == "RelatorCrossesFactors"


def test_classify_and_units(capsys):
    code, out = call(capsys, "classify-order", "--ctx", "Imax:-19")
    assert out == {"ctx": "Imax:-19", "discretely_normed": True, "classification": "NotGE2Ring"}
    code, out = call(capsys, "units", "--n", "3")
    assert out["order"] == 8 and out["exponent"] == 4 and out["center_order"] == 2


def test_check_hom(capsys):
    code, out = call(capsys, "check-hom", "--spec", '{"map": "phi"}')
    assert code == 0 and out["pass"] is False
    spec = {"presentation": "sl2z-classic", "ctx": "Z",
            "images": {"a": [["0", "1"], ["-1", "0"]], "c": [["1", "-1"], ["1", "0"]]}}
    code, out = call(capsys, "check-hom", "--spec", json.dumps(spec))
    assert out["pass"] is True


def test_file_input(tmp_path, capsys):
    f = tmp_path / "m.json"
    f.write_text('[["1","i"],["0","1"]]')
    code, out = call(capsys, "matinv", "--ctx", "lipschitz", "--file", str(f))
    assert out["inverse"] == [["1", "-i"], ["0", "1"]]


def test_usage_errors(capsys):
    code, out = call(capsys, "nonsense")
    assert code == 2 and out["error"]["type"] == "UsageError"
    code, out = call(capsys, "eval", "--ctx", "nowhere", "1")
    assert code == 2
    code, _, _ = run([])
    assert code == 2


def test_text_output(capsys):
    assert main(["units", "--n", "2"]) == 0
    assert "order: 4" in capsys.readouterr().out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "hmodular", "--json", "abelianize", "--presentation", "lemma53",
                          "--n", "2"], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout) == {"torsion": [2, 2], "rank": 0}
