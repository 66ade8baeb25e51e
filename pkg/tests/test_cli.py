import json

from zonolat.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def run_json(argv, capsys):
    code, out = run(["--format", "json"] + argv, capsys)
    return code, json.loads(out)


def test_count_all_methods(capsys):
    code, payload = run_json(
        ["count", "--complete", "4", "--omega", "1/4,1/4,1/4,1/4",
         "--method", "all"], capsys)
    assert code == 0
    assert payload["schema"] == 1
    assert payload["count"] == 16
    assert payload["methods"] == {"oracle": 16, "reciprocity": 16, "mobius": 16}


def test_count_k2(capsys):
    code, payload = run_json(["count", "--complete", "2"], capsys)
    assert code == 0
    assert payload["count"] == 0


def test_count_vector_spec(capsys):
    code, payload = run_json(
        ["count", "--graph", '{"vectors": [[2,4]], "omega": ["0","0"]}',
         "--points"], capsys)
    assert code == 0
    assert payload["count"] == 1
    assert payload["points"] == [[1, 2]]


def test_tables_table1_csv(capsys):
    code, out = run(["--format", "csv", "tables", "table1"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[1] == "b,1,4,3,6,1"
    assert lines[2] == "l(omega(0)),1,0,0,0,0"
    assert lines[3] == "l(omega(1)),1,1,1,2,6"
    assert lines[4] == "l(omega(2)),1,1,0,1,3"


def test_tables_tutte_csv(capsys):
    code, out = run(["--format", "csv", "tables", "tutte"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[2].startswith("2,x,q+1")
    assert lines[4] == "4,x^3+3x^2+4xy+2x+y^3+3y^2+2y,16q^3+15q^2+6q+1"


def test_tables_figure5(capsys):
    code, payload = run_json(["tables", "figure5"], capsys)
    assert code == 0
    assert payload["rows"] == [[0, 6], [1, 16], [2, 13]]


def test_tables_example_polynomials(capsys):
    code, payload = run_json(["tables", "example-polynomials"], capsys)
    assert code == 0
    assert payload["rows"] == [[0, "16e^3-15e^2+6e-1"], [1, "16e^3"],
                               [2, "16e^3-3e^2"]]


def test_ehrhart(capsys):
    code, payload = run_json(["ehrhart", "--complete", "4", "--at", "1,-1"],
                             capsys)
    assert code == 0
    assert payload["polynomial"] == "16q^3+15q^2+6q+1"
    assert payload["values"]["1"] == 38 or payload["values"][1] == 38


def test_character(capsys):
    code, payload = run_json(
        ["character", "--complete", "4", "--omega", "1/4,1/4,1/4,1/4"], capsys)
    assert code == 0
    assert payload["dimension"] == 16
    assert len(payload["rows"]) == 24


def test_verify_decomposition_command(capsys):
    code, payload = run_json(
        ["verify-decomposition", "--graph",
         '{"r":3,"edges":[[1,2,2],[1,3,4],[2,3,4]]}',
         "--omega", "1/2,1/2,0"], capsys)
    assert code == 0
    assert payload["ok"] is True
    assert payload["dimension_gap"] == 7
    dims = sorted(s["dimension"] for s in payload["summands"])
    assert dims == [1, 6]


def test_shelling_command(capsys):
    code, payload = run_json(
        ["shelling", "--complete", "4", "--omega", "1/2,1/2,1/2,1/2",
         "--axiom"], capsys)
    assert code == 0
    assert payload["spheres"] == 3
    assert payload["mediocre_chains"] == 3
    assert payload["axiom_violations"] == 0


def test_hitchin_commands(capsys):
    code, payload = run_json(["hitchin", "supports", "-n", "4", "-d", "2"],
                             capsys)
    assert code == 0
    assert ["2,2", "yes", 0, "no"] in payload["rows"]
    code, payload = run_json(
        ["hitchin", "stalk", "-m", "1,1,1,1", "-d", "1", "-g", "2"], capsys)
    assert code == 0
    assert payload["components"] == 128
    code, payload = run_json(["hitchin", "rank", "-m", "2,1,1", "-d", "2"],
                             capsys)
    assert code == 0
    assert payload["rank"] == 1


def test_verify_command(capsys):
    code, payload = run_json(
        ["verify", "shelling", "--r-max", "3"], capsys)
    assert code == 0
    assert payload["ok"] is True


def test_input_error_exit_code(capsys):
    assert main(["count", "--graph", '{"r": "x"}']) == 2
    assert main(["count"]) == 2
    assert main(["count", "--complete", "3", "--omega", "1/2"]) == 2


def test_budget_exit_code(capsys):
    assert main(["--budget-points", "3", "count", "--complete", "4",
                 "--omega", "1/4,1/4,1/4,1/4"]) == 3


def test_budget_env_var(capsys, monkeypatch):
    monkeypatch.setenv("ZONOLAT_BUDGET_POINTS", "3")
    assert main(["count", "--complete", "4", "--omega", "1/4,1/4,1/4,1/4"]) == 3
    monkeypatch.delenv("ZONOLAT_BUDGET_POINTS")


def test_deterministic_output(capsys):
    args = ["--format", "json", "count", "--complete", "3", "--omega",
            "1/3,1/3,1/3", "--breakdown"]
    code1, out1 = run(args, capsys)
    code2, out2 = run(args, capsys)
    assert code1 == code2 == 0
    assert out1 == out2


def test_edge_order_flag(capsys):
    code, payload = run_json(
        ["shelling", "--graph",
         '{"r":4,"edges":[[1,2,1],[2,3,1],[3,4,1],[1,4,1]]}',
         "--omega", "1/2,1/2,1/2,1/2", "--edge-order", "1-2,2-3,3-4,1-4",
         "--axiom"], capsys)
    assert code == 0
    assert payload["spheres"] == payload["mediocre_chains"] == 1
