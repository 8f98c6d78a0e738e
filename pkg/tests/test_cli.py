import pytest

from cohenexp.cli import main
from cohenexp.targets import odd_sphere, save_model


@pytest.fixture()
def model_file(tmp_path):
    path = tmp_path / "s5.model"
    save_model(odd_sphere(5, 3, 2, truncation=6), path)
    return str(path)


def write_elem(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_mul(tmp_path, model_file, capsys):
    a = write_elem(tmp_path, "a.elem", "slot 1 : 2*g1\n")
    b = write_elem(tmp_path, "b.elem", "slot 1 : 1*g1\nslot 3 : -1*g3\n")
    assert main(["mul", model_file, a, b]) == 0
    out = capsys.readouterr().out
    assert "slot 1 : 3*g1" in out
    assert "slot 3 : 8*g3" in out  # coefficients print reduced mod the order 9


def test_pow_identity(tmp_path, model_file, capsys):
    a = write_elem(tmp_path, "a.elem", "slot 2 : 1*g2 + 1*[g1,g1]\n")
    with pytest.raises(SystemExit) as exc:
        main(["pow", model_file, a, "zero"])  # usage error
    assert exc.value.code == 2
    assert main(["pow", model_file, a, "0"]) == 0
    assert capsys.readouterr().out.strip() == "identity"


def test_pow_closed_form(tmp_path, model_file, capsys):
    a = write_elem(tmp_path, "a.elem", "slot 1 : 1*g1\nslot 3 : 2*g3\n")
    assert main(["pow", model_file, a, "9", "--closed-form"]) == 0
    out = capsys.readouterr().out
    assert "cross-checked" in out
    assert "identity" in out  # orders are 9, no surviving corrections
    bad = write_elem(tmp_path, "bad.elem", "slot 1 : 1*g1\n")
    assert main(["pow", model_file, bad, "3", "--closed-form"]) == 1


def test_order(tmp_path, model_file, capsys):
    a = write_elem(tmp_path, "a.elem", "slot 1 : 3*g1\n")
    assert main(["order", model_file, a]) == 0
    assert capsys.readouterr().out.strip() == "order 3"


def test_order_infinite(tmp_path, capsys):
    model = tmp_path / "m.model"
    model.write_text("model r=1 trunc=2 profile u2=0 u3=0\ngen 1 order=inf\ngen 2 order=4\n")
    a = write_elem(tmp_path, "a.elem", "slot 1 : 1*g1\n")
    assert main(["order", str(model), a]) == 0
    assert capsys.readouterr().out.strip() == "infinite (witness slot 1)"


def test_exp(capsys):
    assert main(["exp", "--space", "CP:2", "--r", "3", "--p", "3"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "exact 3^2"
    assert "Cohen-Moore-Neisendorfer" in out


def test_exp_bad_space(capsys):
    assert main(["exp", "--space", "T:3", "--p", "3"]) == 1


def test_verify(capsys):
    assert main(["verify", "--suite", "hp-infty"]) == 0
    out = capsys.readouterr().out
    assert "4/4 checks passed" in out
    assert main(["verify", "--suite", "remark", "--cases", "5", "--tsv"]) == 0
    out = capsys.readouterr().out
    assert "\tPASS\t" in out


def test_phi_binom(capsys):
    assert main(["phi", "2", "2"]) == 0
    assert capsys.readouterr().out.strip() == "-1"
    assert main(["binom", "84", "3", "--mod", "3"]) == 0
    assert capsys.readouterr().out.strip() == "1"


def test_experiment(tmp_path, capsys):
    model = tmp_path / "m.model"
    model.write_text("model r=2 trunc=4 profile u2=0 u3=0\ngen 1 order=8\ngen 2 order=8\n")
    assert main(["experiment", "bracket-order", "--model", str(model)]) == 0
    out = capsys.readouterr().out
    assert "[g1,g1] slot 2 order 2" in out  # odd dimension self-pair
    assert "[[g1,g1],g1] slot 3 order 2" in out


def test_missing_file(tmp_path):
    assert main(["order", str(tmp_path / "nope.model"), "x"]) == 1


def test_bad_element(tmp_path, model_file):
    a = write_elem(tmp_path, "a.elem", "slot 1 : banana\n")
    assert main(["mul", model_file, a, a]) == 1
    b = write_elem(tmp_path, "b.elem", "slot 99 : 1*g1\n")
    assert main(["mul", model_file, b, b]) == 1


def test_deterministic_verify_output(capsys):
    main(["verify", "--suite", "remark", "--cases", "8"])
    first = capsys.readouterr().out
    main(["verify", "--suite", "remark", "--cases", "8"])
    assert capsys.readouterr().out == first
