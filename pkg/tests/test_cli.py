import io
import json

import pytest

from gradedpi.cli import run
from gradedpi.config import ConfigError, config_from_dict, fixture_path

M3 = fixture_path("m3_z3.json")
UT11 = fixture_path("ut11_z2.json")
UT21 = fixture_path("ut21_z3.json")


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_check_identity_3_on_m3():
    code, out, _ = cli("check", "--config", M3, "-e", "x[0,1]x[0,2]-x[0,2]x[0,1]")
    assert code == 0
    assert out.splitlines()[0] == "identity: true"


def test_check_negative_verdict():
    code, out, _ = cli("check", "--config", M3, "-e", "x[1,1]x[2,2]")
    assert code == 1 and out.startswith("identity: false")


def test_monomials_on_m3():
    code, out, _ = cli("monomials", "--config", M3, "--max-deg", "5")
    assert code == 0
    assert out == "0 monomial identities up to degree 5; nondegenerate up to bound\n"


def test_classify_ut11():
    code, out, _ = cli("classify", "--config", UT11)
    assert code == 1
    assert out == "degenerate, witness x[1,1]x[1,2]; not strong\n"
    code, out, _ = cli("classify", "--config", M3)
    assert code == 0 and out == "nondegenerate; strong\n"


def test_json_records():
    code, out, _ = cli("monomials", "--config", UT11, "--json")
    records = [json.loads(line) for line in out.splitlines()]
    assert records[0] == {"record": "identity", "word": ["1", "1"], "monomial": "x[1,1]x[1,2]",
                          "certificate": [], "final": ["1", "1"]}
    assert records[-1] == {"record": "summary", "count": 5, "max_deg": 3}


def test_tensor_and_verify():
    code, out, _ = cli("tensor", "--config", UT11)
    assert code == 0 and out.splitlines()[-1] == "verified 13/13 on E_4"
    code, out, _ = cli("verify", "--config", UT21)
    assert code == 0 and out.splitlines()[-1].endswith("checks passed")


def test_expr_file(tmp_path):
    p = tmp_path / "exprs.txt"
    p.write_text("# comment\nx[0,1]x[0,2]-x[0,2]x[0,1]\nx[1,1]x[2,2]\n")
    code, out, _ = cli("check", "--config", M3, "-f", str(p))
    assert code == 1
    verdicts = [l for l in out.splitlines() if l.startswith("identity:")]
    assert verdicts == ["identity: true", "identity: false"]


def test_modular_literals():
    code, _, err = cli("check", "--config", M3, "-e", "x[4,1]x[2,2]")
    assert code == 2 and "error" in err
    code, out, _ = cli("check", "--config", M3, "-e", "x[4,1]x[2,2]", "--modular-literals")
    assert code == 1


def test_exit_codes_for_bad_input(tmp_path):
    assert cli("frobnicate", "--config", M3)[0] == 2
    assert cli("analyze")[0] == 2
    assert cli("analyze", "--config", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli("analyze", "--config", str(bad))[0] == 2
    assert cli("check", "--config", M3, "-e", "x[0,1")[0] == 2
    assert cli("check", "--config", M3)[0] == 2
    assert cli("analyze", "--config", M3, "--threads", "0")[0] == 2
    assert cli("tensor", "--config", UT21)[0] == 2
    assert cli("tensor", "--config", UT11, "--truncation", "2")[0] == 2


def test_mod_p_options(tmp_path):
    code, out, _ = cli("check", "--config", UT21, "--mod-p", "2", "-e", "x[0,1]x[0,2]+x[0,2]x[0,1]")
    assert code == 0
    code, out, _ = cli("check", "--config", UT21, "-e", "x[0,1]x[0,2]+x[0,2]x[0,1]")
    assert code == 1
    assert cli("check", "--config", UT21, "--mod-p", "4", "-e", "x[0,1]")[0] == 2
    code, _, err = cli("check", "--config", UT11, "--mod-p", "3", "-e", "x[0,1]")
    assert code == 2 and "tensor" in err


def test_config_errors():
    with pytest.raises(ConfigError):
        config_from_dict({"group": {"type": "cyclic", "order": 2}, "tuple": [0, 1]})
    with pytest.raises(ConfigError):
        config_from_dict({"group": {"type": "cyclic", "order": 2}, "tuple": [0, 1], "units": {"blocks": [1]}})
    with pytest.raises(ConfigError):
        config_from_dict({"group": {"type": "cyclic", "order": 2}, "tuple": [0, 1], "units": {"blocks": [1, 1]},
                          "tensor": {"bicharacter": {"m": 2, "beta": [[0, 0], [0, 1]]}}})
    cfg = config_from_dict({"group": {"type": "cyclic", "order": 2}, "tuple": [0, 1],
                            "units": {"pairs": [[1, 2]]}, "degree_universe": [0, 1]})
    assert sorted(cfg.algebra.units) == [(1, 2)]


def test_threads_byte_identical():
    for argv in (("monomials", "--config", UT21, "--max-deg", "5"), ("tensor", "--config", UT11, "--json")):
        assert cli(*argv, "--threads", "1") == cli(*argv, "--threads", "8")
