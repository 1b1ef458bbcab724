import json

import pytest

from plactic.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_tableau_worked_example(capsys):
    code, out, _ = run(capsys, "tableau", "--rank", "6", "6345511235")
    assert code == 0
    assert out == "6\n3455\n11235\n6314152535\n"


def test_tableau_empty_word(capsys):
    code, out, _ = run(capsys, "tableau", "--rank", "2", "")
    assert code == 0
    assert out == ""


def test_tableau_rank_error(capsys):
    code, _, err = run(capsys, "tableau", "--rank", "2", "3")
    assert code == 2
    assert "outside" in err


def test_normalize_letters(capsys):
    code, out, _ = run(capsys, "normalize", "--rank", "2", "121")
    assert code == 0
    assert out == "c_21 c_1\n211\n"


def test_normalize_cword_fixed_point(capsys):
    code, out, _ = run(capsys, "normalize", "--rank", "2", "c:21,1")
    assert code == 0
    assert out == "c_21 c_1\n211\n"


def test_normalize_empty(capsys):
    code, out, _ = run(capsys, "normalize", "--rank", "1", "")
    assert code == 0
    assert out == "\n\n"


def test_multiply_right(capsys):
    code, out, _ = run(capsys, "multiply", "--rank", "2", "--side", "right", "--check", "211", "1")
    assert code == 0
    assert out == "2111\n"


def test_multiply_left(capsys):
    code, out, _ = run(capsys, "multiply", "--rank", "2", "--side", "left", "11", "2")
    assert code == 0
    assert out == "211\n"


def test_multiply_empty_word(capsys):
    code, out, _ = run(capsys, "multiply", "--rank", "2", "--side", "right", "", "2")
    assert code == 0
    assert out == "2\n"


def test_multiply_rejects_non_normal_input(capsys):
    code, _, err = run(capsys, "multiply", "--rank", "2", "--side", "right", "121", "1")
    assert code == 2
    assert "column reading" in err


def test_rules_json(capsys):
    code, out, _ = run(capsys, "rules", "--rank", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["rank"] == 2
    assert len(data["rules"]) == 3


def test_gsb_text_golden(capsys):
    code, out, _ = run(capsys, "gsb", "--rank", "2")
    assert code == 0
    assert out == (
        "order: deglex; symbol order: |subscript| desc, then lex\n"
        "c[1]*c[21] - c[21]*c[1]\n"
        "c[2]*c[21] - c[21]*c[2]\n"
        "c[2]*c[1] - c[21]\n"
    )


def test_gsb_rank1_empty(capsys):
    code, out, _ = run(capsys, "gsb", "--rank", "1")
    assert code == 0
    assert out == "order: deglex; symbol order: |subscript| desc, then lex\n"


def test_exports_byte_deterministic(capsys):
    _, first, _ = run(capsys, "rules", "--rank", "3", "--format", "json")
    _, second, _ = run(capsys, "rules", "--rank", "3", "--format", "json")
    assert first == second
    _, first, _ = run(capsys, "gsb", "--rank", "3", "--format", "json")
    _, second, _ = run(capsys, "gsb", "--rank", "3", "--format", "json")
    assert first == second


def test_machines_export(tmp_path, capsys):
    out_a = tmp_path / "a"
    out_b = tmp_path / "b"
    code, _, _ = run(capsys, "machines", "--rank", "2", "--gamma", "1", "--format", "dot", "--out", str(out_a))
    assert code == 0
    code, _, _ = run(capsys, "machines", "--rank", "2", "--gamma", "1", "--format", "dot", "--out", str(out_b))
    assert code == 0
    names = sorted(p.name for p in out_a.iterdir())
    assert [n for n in names if n.startswith("pair_")] == [
        "pair_left_L_1.dot",
        "pair_left_R_1.dot",
        "pair_right_L_1.dot",
        "pair_right_R_1.dot",
    ]
    for name in names:
        assert (out_a / name).read_text() == (out_b / name).read_text()


def test_machines_epsilon(tmp_path, capsys):
    code, _, _ = run(capsys, "machines", "--rank", "2", "--gamma", "eps", "--format", "json", "--out", str(tmp_path))
    assert code == 0
    payload = json.loads((tmp_path / "pair_right_R_eps.json").read_text())
    assert payload["direction"] == "R"


def test_verify_rank1(capsys):
    code, out, _ = run(capsys, "verify", "--rank", "1", "--max-len", "4", "all")
    assert code == 0
    assert out.strip().endswith("PASS")


def test_verify_core_rank2(capsys):
    code, out, _ = run(capsys, "verify", "--rank", "2", "--max-len", "5", "core")
    assert code == 0
    assert "columns=lnds" in out


def test_large_rank_comma_format(capsys):
    code, out, _ = run(capsys, "tableau", "--rank", "12", "10,2,1")
    assert code == 0
    assert out.splitlines()[-1] == "10,2,1"


def test_rule_table_budget_refusal(capsys):
    code, _, err = run(capsys, "normalize", "--rank", "12", "c:10.2,1")
    assert code == 1
    assert "rule-table entries" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["tableau"])  # missing --rank and word
    assert exc.value.code == 2
