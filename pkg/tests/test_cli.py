import json
import subprocess
import sys
from pathlib import Path

import pytest

from delpair import suites
from delpair.cli import ProblemSpec, SchemaError, main

EXAMPLES = Path(__file__).resolve().parent.parent / "docs" / "examples"


def run(capsys, argv):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


def write(tmp_path, data, name="p.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def intersect(degrees, N=2, ideal=()):
    return {
        "schema_version": "1",
        "command": "intersect",
        "field": "QQ",
        "task": "intersection_number",
        "ambient": {"N": str(N), "ideal": list(ideal)},
        "degrees": [str(d) for d in degrees],
    }


def deligne(task, bundles, **extra):
    return {"schema_version": "1", "command": "deligne", "task": task, "m": "1", "bundles": [[str(a), str(b)] for a, b in bundles], **extra}


def arith(task, **extra):
    return {"schema_version": "1", "command": "arith", "base": "ZZ", "task": task, **extra}


def hz(*forms):
    return {"horizontal": [{"form": f, "mult": "1"} for f in forms]}


def test_example_files(capsys):
    code, rep = run(capsys, ["intersect", "--input", str(EXAMPLES / "intersect_bezout.json")])
    assert code == 0 and rep["result"]["value"] == "6"
    code, rep = run(capsys, ["deligne", "--input", str(EXAMPLES / "deligne_p1xp1.json")])
    assert code == 0 and rep["result"] == {"degree": "1", "grade": "0"}
    code, rep = run(capsys, ["arith", "--input", str(EXAMPLES / "arith_pairing.json")])
    assert code == 0 and rep["result"]["divisor"] == {"5": "1"}


def test_intersect_examples(capsys, tmp_path):
    code, rep = run(capsys, ["intersect", "--input", write(tmp_path, intersect([0], N=1))])
    assert code == 0 and rep["result"]["value"] == "0"
    code, rep = run(capsys, ["intersect", "--input", write(tmp_path, intersect([1, 1, 2]))])
    assert rep["result"]["route"] == "vanishing_check" and rep["result"]["value"] == "0"


def test_intersect_other_tasks(capsys, tmp_path):
    spec = {"schema_version": "1", "command": "intersect", "field": "QQ", "task": "total_multiplicity", "curves": ["x0^2 + x1^2 - x2^2", "x0 - x1"]}
    assert run(capsys, ["intersect", "--input", write(tmp_path, spec)])[1]["result"]["value"] == "2"
    spec = {"schema_version": "1", "command": "intersect", "field": "QQ", "task": "local_multiplicity", "curves": ["x1", "x1 - x0^2"], "point": ["0", "0"]}
    assert run(capsys, ["intersect", "--input", write(tmp_path, spec)])[1]["result"]["value"] == "2"


def test_deligne_examples(capsys, tmp_path):
    assert run(capsys, ["deligne", "--input", write(tmp_path, deligne("pairing", [(0, 0), (0, 0)]))])[1]["result"]["degree"] == "0"
    code, rep = run(capsys, ["deligne", "--input", write(tmp_path, deligne("pullback", [(3, 5)], beta="2"))])
    assert rep["result"]["pairing"]["degree"] == "6" and rep["result"]["holds"] is True
    spec = deligne("restriction", [(2, 0)], A="y", B="-x")
    assert run(capsys, ["deligne", "--input", write(tmp_path, spec)])[1]["result"]["restricted_degree"] == "2"


def test_arith_examples(capsys, tmp_path):
    code, rep = run(capsys, ["arith", "--input", write(tmp_path, arith("pairing", D={}, E=hz("x - 7*y")))])
    assert code == 0 and rep["result"]["divisor"] == {}
    spec = arith("verify", suite="intwithrat", seed="42", n="10")
    code, rep = run(capsys, ["arith", "--input", write(tmp_path, spec)])
    assert code == 0 and rep["result"]["status"] == "pass" and rep["suite"]["passed"] == "10"
    spec = arith("norm", D=hz("x - 2*y", "x^2 - 2*y^2"), f={"num": "x - 3*y", "den": "x - y"})
    assert run(capsys, ["arith", "--input", write(tmp_path, spec)])[1]["result"]["value"] == "7"
    spec = arith("local_decomposition", D=hz("x^2 - 2*y^2"), E=hz("x^2 - 7*y^2"), prime="5")
    res = run(capsys, ["arith", "--input", write(tmp_path, spec)])[1]["result"]
    assert res["total"] == res["pairing_coefficient"] == "2"


def test_verify_command(capsys):
    code, rep = run(capsys, ["verify", "weil", "--seed", "7", "--n", "200"])
    assert code == 0 and rep["result"]["status"] == "pass" and rep["suite"]["passed"] == "200"
    code, rep = run(capsys, ["verify", "vanishing"])
    assert code == 0 and rep["suite"]["n"] == "100"


def test_exit_code_schema(capsys, tmp_path):
    code, rep = run(capsys, ["verify", "nonsense"])
    assert code == 2 and rep["error"]["kind"] == "schema"
    bad = intersect([1, 1])
    bad["colour"] = "blue"
    code, rep = run(capsys, ["intersect", "--input", write(tmp_path, bad)])
    assert code == 2 and "colour" in rep["error"]["message"]
    bad = intersect([1, 1])
    bad["degrees"] = [1.5]
    code, rep = run(capsys, ["intersect", "--input", write(tmp_path, bad)])
    assert code == 2 and rep["error"]["location"].startswith("$")
    (tmp_path / "broken.json").write_text("{ not json")
    assert main(["intersect", "--input", str(tmp_path / "broken.json")]) == 2
    capsys.readouterr()
    code, rep = run(capsys, ["deligne", "--input", write(tmp_path, intersect([1, 1]))])
    assert code == 2
    spec = arith("pairing", D=hz("x +* y"), E=hz("x"))
    code, rep = run(capsys, ["arith", "--input", write(tmp_path, spec)])
    assert code == 2 and rep["error"]["location"] == "$['D']['horizontal'][0]['form']"


def test_exit_code_computation(capsys, tmp_path):
    code, rep = run(capsys, ["intersect", "--input", write(tmp_path, intersect([1]))])
    assert code == 1 and "arity must equal dimension" in rep["error"]["message"]
    spec = arith("pairing", D=hz("x - 2*y"), E=hz("x - 2*y"))
    code, rep = run(capsys, ["arith", "--input", write(tmp_path, spec)])
    assert code == 1 and "common component" in rep["error"]["message"]


def test_exit_code_suite_failure(capsys, monkeypatch):
    monkeypatch.setitem(suites.SUITES, "vanishing", (lambda rng, budget, **kw: (False, {"x": "1"}), 3))
    code, rep = run(capsys, ["verify", "vanishing"])
    assert code == 3
    assert rep["status"] == "fail" and rep["suite"]["failed"] == "3"
    assert rep["suite"]["failures"][0]["instance"] == {"x": "1"}


def test_budget_flag(capsys, tmp_path):
    spec = intersect([1], N=3, ideal=["x0^2*x1 - x2^3", "x0*x1^2 - x2*x3^2", "x0*x1*x2 - x3^3"])
    code, rep = run(capsys, ["intersect", "--input", write(tmp_path, spec), "--budget", "1"])
    assert code == 1 and "BudgetExceeded" in rep["error"]["message"]


def test_numbers_are_strings(capsys, tmp_path):
    def walk(v):
        if isinstance(v, dict):
            for x in v.values():
                walk(x)
        elif isinstance(v, list):
            for x in v:
                walk(x)
        else:
            assert isinstance(v, (str, bool)) or v is None

    spec = arith("weil", f={"num": "x", "den": "y"}, g={"num": "x - y", "den": "x - 2*y"})
    spec["base"] = "QQ"
    code, rep = run(capsys, ["arith", "--input", write(tmp_path, spec)])
    assert rep["result"]["N_(g)(f)"] == "1/2"
    walk(rep)


def test_echo_round_trip(capsys):
    for path in sorted(EXAMPLES.glob("*.json")):
        data = json.loads(path.read_text())
        _, rep = run(capsys, [data["command"], "--input", str(path)])
        assert ProblemSpec.from_dict(rep["echo"]) == ProblemSpec.from_dict(data)
        assert ProblemSpec.from_dict(rep["echo"]).to_dict() == rep["echo"]


def test_deterministic(capsys, tmp_path):
    spec = {"schema_version": "1", "command": "intersect", "field": "GF(101)", "task": "total_multiplicity", "curves": ["x0^3 + x1*x2^2 + 5*x2^3", "x0^2 - 3*x1*x2"]}
    path = write(tmp_path, spec)
    first = run(capsys, ["intersect", "--input", path, "--seed", "3"])[1]
    second = run(capsys, ["intersect", "--input", path, "--seed", "3"])[1]
    assert json.dumps(first["result"]) == json.dumps(second["result"])
    assert first["result"]["value"] == "6"
    a = run(capsys, ["verify", "intwithrat", "--seed", "11", "--n", "5"])[1]
    b = run(capsys, ["verify", "intwithrat", "--seed", "11", "--n", "5"])[1]
    assert a["suite"] == b["suite"]


def test_text_format(capsys, tmp_path):
    assert main(["intersect", "--input", write(tmp_path, intersect([2, 3])), "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "value: 6" in out and "status: ok" in out


def test_problem_spec_rejects_bad_version():
    with pytest.raises(SchemaError):
        ProblemSpec.from_dict({**intersect([1, 1]), "schema_version": "2"})


def test_console_script_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "delpair.cli", "arith", "--input", str(EXAMPLES / "arith_pairing.json"), "--format", "json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert out.returncode == 0
    assert json.loads(out.stdout)["result"]["divisor"] == {"5": "1"}


def test_schema_doc_is_current():
    from delpair.schema import SCHEMA

    on_disk = json.loads((EXAMPLES.parent / "schema.json").read_text())
    assert on_disk == SCHEMA


def test_example_files_validate():
    for path in EXAMPLES.glob("*.json"):
        ProblemSpec.from_dict(json.loads(path.read_text()))
