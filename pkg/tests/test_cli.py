import json

import pytest

from qcharsl2.cli import main, parse_drinfeld, parse_vector
from qcharsl2.polyring import LaurentPoly, TPoly
from qcharsl2.qstrings import DrinfeldData, StringDecomposition, decompose


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_drinfeld():
    assert parse_drinfeld("0:1,1:3") == DrinfeldData({0: 1, 1: 3})
    assert parse_drinfeld("2") == DrinfeldData({2: 1})
    assert parse_drinfeld("-1:2, 3") == DrinfeldData({-1: 2, 3: 1})
    assert parse_drinfeld("") == DrinfeldData()


def test_parse_drinfeld_errors():
    with pytest.raises(ValueError, match="position 0"):
        parse_drinfeld("0:0")
    with pytest.raises(ValueError, match="position 1"):
        parse_drinfeld("1,x:2")


def test_parse_vector():
    assert parse_vector("1,2,1") == (1, 2, 1)
    assert parse_vector("") == ()
    with pytest.raises(ValueError):
        parse_vector("1,a")


def test_kr_char_text(capsys):
    code, out, _ = run(capsys, "kr-char", "--n", "1", "--k", "0")
    assert code == 0
    assert out.strip() == "Y[0] + Y[1]^-1"


def test_kr_char_json_round_trip(capsys):
    code, out, _ = run(capsys, "kr-char", "--n", "3", "--k", "-1", "--format", "json")
    assert code == 0
    from qcharsl2.characters import kr_character

    assert LaurentPoly.from_json(json.loads(out)) == kr_character(3, -1)


def test_mult_paper_example(capsys):
    code, out, _ = run(capsys, "mult", "--pi", "0:1,1:3", "--pitilde", "1:2")
    assert code == 0
    assert out.strip() == "closed=1 oracle=1 AGREE"


def test_mult_not_applicable(capsys):
    # r = (1,1) with h = (1,1,1): Omega has consecutive indices
    code, out, _ = run(capsys, "mult", "--pi", "0:2,1:3,2:2", "--pitilde", "0:1,1:1,2:1")
    assert code == 0
    assert "NOT-APPLICABLE" in out
    assert "closed=N/A" in out


def test_row_json(capsys):
    code, out, _ = run(capsys, "row", "--pi", "0:1,1:1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    rows = {
        DrinfeldData.from_json(e["simple"]): e["mult"] for e in payload
    }
    assert rows == {DrinfeldData({0: 1, 1: 1}): 1, DrinfeldData(): 1}


def test_strings_round_trip(capsys):
    code, out, _ = run(capsys, "strings", "--pi", "0:2,1:1", "--format", "json")
    assert code == 0
    dec = StringDecomposition.from_json(json.loads(out))
    assert dec == decompose(DrinfeldData({0: 2, 1: 1}))


def test_ic_stalk(capsys):
    code, out, _ = run(capsys, "ic-stalk", "--w", "1,2,1", "--r", "1,1", "--k", "1,1")
    assert code == 0
    assert out.strip() == "1 + t"
    code, out, _ = run(
        capsys, "ic-stalk", "--w", "1,2,1", "--r", "1,1", "--k", "1,1", "--format", "json"
    )
    assert TPoly.from_json(json.loads(out)) == TPoly([1, 1])


def test_ic_stalk_error_exit(capsys):
    code, _, err = run(capsys, "ic-stalk", "--w", "1,1", "--r", "0", "--k", "0")
    assert code == 1
    assert "not sparse" in err


def test_tsystem_verify(capsys):
    code, out, _ = run(capsys, "tsystem-verify", "--nmax", "3")
    assert code == 0
    assert "ok" in out


def test_rigid(capsys):
    code, out, _ = run(capsys, "rigid", "--d", "2,1")
    assert code == 0
    assert out.strip() == "U[1,1] + U[1,2]"


def test_ordering(capsys):
    code, out, _ = run(capsys, "ordering", "--pi", "0:1,1:1")
    assert code == 0
    assert out.strip() == "1 0"


def test_output_determinism(capsys):
    _, out1, _ = run(capsys, "row", "--pi", "0:2,1:2", "--format", "json")
    _, out2, _ = run(capsys, "row", "--pi", "0:2,1:2", "--format", "json")
    assert out1 == out2


def test_sweep_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("QCHAR_SWEEP_CAP", "3")
    code, _, err = run(capsys, "row", "--pi", "0:4")
    assert code == 1
    assert "cap" in err
    monkeypatch.setenv("QCHAR_SWEEP_CAP", "12")
    code, out, _ = run(capsys, "row", "--pi", "0:4")
    assert code == 0


def test_bad_drinfeld_spec_exits_nonzero(capsys):
    code, _, err = run(capsys, "std-char", "--pi", "0:0")
    assert code == 1
    assert "error" in err
