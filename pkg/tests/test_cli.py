import json

import pytest

from nbase.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compose_level1(capsys):
    code, out, _ = run(capsys, "compose", "--level", "1", "4", "2", "3")
    assert code == 0 and out.strip() == "6"


def test_compose_json(capsys):
    code, out, _ = run(capsys, "compose", "--json", "[3,2,4,3|1,4,5]", "3",
                       "[3,2|2]")
    blob = json.loads(out)
    assert blob["shuffle"]["psi"] == {"1": 3, "2": 4}


def test_ord_eval(capsys):
    code, out, _ = run(capsys, "ord", "eval", "--level", "2", "[1,1|1]")
    assert code == 0 and out.strip() == "w"


def test_ord_encode_roundtrip(capsys):
    code, out, _ = run(capsys, "ord", "encode", "--level", "2", "w^(2)+1")
    literal = out.strip()
    code, out, _ = run(capsys, "ord", "eval", "--level", "2", literal)
    assert out.strip() == "w^(2)+1"


def test_ord_cmp_add(capsys):
    assert run(capsys, "ord", "cmp", "1+w", "w")[1].strip() == "EQ"
    assert run(capsys, "ord", "add", "w", "1")[1].strip() == "w+1"


def test_group_order(capsys):
    code, out, _ = run(capsys, "group", "order", "--sym", "4")
    assert code == 0 and out.strip() == "24"


def test_group_verify_tree(capsys):
    code, out, _ = run(capsys, "group", "verify", "--tree", "[2,2,2|1,1]")
    assert code == 0 and "iso True" in out


def test_group_present_gap(capsys):
    code, out, _ = run(capsys, "group", "present", "--sym", "3", "--gap")
    assert "a1*a2*a1*a2*a1*a2" in out


def test_enum(capsys):
    code, out, _ = run(capsys, "enum", "--level", "2", "--max-factors", "2",
                       "--max-arity", "2")
    lines = out.strip().splitlines()
    assert len(lines) == 8 and lines == sorted(lines)
    code, out, _ = run(capsys, "enum", "--level", "2", "--max-factors", "2",
                       "--max-arity", "2", "--count-only")
    assert out.strip() == "8"


def test_enum_binary(capsys):
    code, out, _ = run(capsys, "enum", "--level", "2", "--binary", "6")
    assert out.strip() == "132"


def test_normalize(capsys):
    code, out, _ = run(capsys, "normalize", "[2,2,2|2,1]")
    lines = out.strip().splitlines()
    assert lines[0] == "[2,2,2|1,3]"
    assert "1->1" in lines[1] and "2->3" in lines[1]


def test_fg(capsys):
    code, out, _ = run(capsys, "fg", "--level", "1", "3")
    assert "m 3" in out and "F * * *" in out and "G *" in out


def test_head(capsys):
    code, out, _ = run(capsys, "head", "[3,2,4,3|1,4,5]")
    assert "head 3" in out and "slot 3 [4,3|2]" in out


def test_mor_apply1(capsys):
    code, out, _ = run(capsys, "mor", "apply1", "[2,2|1]",
                       '{"node_perms": [[2,1],[1,2]]}')
    assert json.loads(out)["target"] == "[2,2|2]"


def test_mor_square(capsys):
    code, out, _ = run(capsys, "mor", "square", "[2,2|1]",
                       '{"node_perms": [[1,2],[2,1]]}', '{"sigma": [2,1]}')
    blob = json.loads(out)
    assert blob["opposite"] == "[2,2|2]" and blob["commutes"]


def test_render_dot_parses(capsys):
    code, out, _ = run(capsys, "render", "[2,2|1]", "--format", "dot")
    assert out.startswith("digraph") and out.count("->") >= 3


def test_render_level4_rejected(capsys):
    code, _out, err = run(capsys, "render", "[[[2|]|]|]", "--format", "ascii")
    assert code == 1 and "LevelMismatch" in err


def test_domain_error_exit_code(capsys):
    code, _out, err = run(capsys, "validate", "[2,2|3]")
    assert code == 1 and "RangeViolation" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["compose"])
    assert exc.value.code == 2


def test_selftest_counts(capsys):
    code, out, _ = run(capsys, "selftest", "counts")
    assert code == 0 and "fail   0" in out


def test_roundtrip_parse_print(capsys):
    from nbase.enumeration import enumerate_elements
    from nbase.grammar import format_element, parse_element
    for level in (2, 3):
        for e in enumerate_elements(level, 2, 2):
            assert parse_element(format_element(e)) == e
