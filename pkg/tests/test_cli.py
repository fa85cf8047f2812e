import json

import pytest

from weylbox.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, json.loads(captured.out)


class TestLR:
    def test_coeff(self, capsys):
        code, out = invoke(capsys, "lr", "coeff", "2,1", "2,1", "3,2,1")
        assert code == 0
        assert out["payload"] == {"agree": True, "hive": 2, "tableau": 2}

    def test_coeff_size_mismatch(self, capsys):
        code, out = invoke(capsys, "lr", "coeff", "1", "1", "3")
        assert code == 0
        assert out["payload"] == {"agree": True, "hive": 0, "tableau": 0}

    def test_positive(self, capsys):
        code, out = invoke(capsys, "lr", "positive", "2", "2", "2,1,1")
        assert code == 0 and out["payload"] == {"positive": False}

    def test_stretch(self, capsys):
        code, out = invoke(capsys, "lr", "stretch", "2,1", "2,1", "3,2,1",
                           "--k", "5")
        assert code == 0
        assert out["payload"]["hive_values"] == [2, 3, 4, 5, 6]
        assert out["payload"]["tableau_values"] == [2, 3, 4, 5, 6]
        assert out["payload"]["agree"] is True
        assert out["payload"]["fit"]["period"] == 1


class TestSymfunc:
    def test_product(self, capsys):
        code, out = invoke(capsys, "symfunc", "product", "1", "1")
        assert code == 0
        assert out["payload"]["coefficients"] == {"2": 1, "1,1": 1}

    def test_plethysm(self, capsys):
        code, out = invoke(capsys, "symfunc", "plethysm", "2", "2")
        assert code == 0
        assert out["payload"]["coefficients"] == {"4": 1, "2,2": 1}


class TestEhrhart:
    def test_cube_count(self, capsys, tmp_path):
        path = tmp_path / "cube2.json"
        path.write_text(json.dumps(
            {"A": [["1", "0"], ["-1", "0"], ["0", "1"], ["0", "-1"]],
             "b": ["1", "0", "1", "0"]}))
        code, out = invoke(capsys, "ehrhart", "--polytope", str(path),
                           "--k", "3")
        assert code == 0 and out["payload"]["count"] == 16

    def test_series_with_fit(self, capsys, tmp_path):
        path = tmp_path / "half.json"
        path.write_text(json.dumps({"A": [["1"], ["-1"]], "b": ["1/2", "0"]}))
        code, out = invoke(capsys, "ehrhart", "--polytope", str(path),
                           "--series", "6", "--fit")
        assert code == 0
        assert out["payload"]["values"] == [1, 2, 2, 3, 3, 4]
        assert out["payload"]["fit"]["period"] == 2


class TestKron:
    def test_plain_form(self, capsys):
        code, out = invoke(capsys, "kron", "2,1", "2,1", "2,1")
        assert code == 0 and out["payload"]["kronecker"] == 1

    def test_det_invariant(self, capsys):
        code, out = invoke(capsys, "kron", "det-invariant", "2", "--m", "2")
        assert code == 0 and out["payload"]["multiplicity"] == 1

    def test_g_stretch(self, capsys):
        code, out = invoke(capsys, "kron", "g-stretch", "2", "--m", "2",
                           "--k", "4")
        assert code == 0 and out["payload"]["values"] == [1, 1, 1, 1]

    def test_domain_error_exit_1(self, capsys):
        code, out = invoke(capsys, "kron", "2,1", "2", "2")
        assert code == 1
        assert out["payload"]["error"]["type"] == "ValueError"


class TestWeyl:
    def test_dim(self, capsys):
        code, out = invoke(capsys, "weyl", "dim", "2,1", "3")
        assert code == 0 and out["payload"]["dimension"] == 8

    def test_dim_with_basis(self, capsys):
        code, out = invoke(capsys, "weyl", "dim", "1,1", "2", "--basis")
        assert code == 0
        assert out["payload"]["basis"][0]["polynomial"] == "z11*z22 - z12*z21"

    def test_invariants(self, capsys):
        code, out = invoke(capsys, "weyl", "invariants", "--gamma", "4",
                           "--n", "2")
        assert code == 0 and out["payload"]["invariant_dim"] == 1

    def test_kempf(self, capsys):
        code, out = invoke(capsys, "weyl", "kempf", "--n", "3")
        assert code == 0 and out["payload"]["stable"] is True

    def test_symcheck_nested(self, capsys):
        code, out = invoke(capsys, "weyl", "symcheck", "perm", "--size", "2")
        assert code == 0 and out["payload"]["dimension"] == 1


class TestTopLevel:
    def test_symcheck(self, capsys):
        code, out = invoke(capsys, "symcheck", "det", "--size", "2")
        assert code == 0
        assert out["payload"]["dimension"] == 1
        assert "y11*y22" in out["payload"]["fixed_line"][0]

    def test_magic(self, capsys):
        code, out = invoke(capsys, "magic", "3", "1", "--polys")
        assert code == 0
        assert out["payload"]["count"] == 6 and out["payload"]["orbits"] == 1
        assert len(out["payload"]["basic_invariants"]) == 1

    def test_obstruct_emit(self, capsys):
        code, out = invoke(capsys, "obstruct", "emit", "--max", "4")
        assert code == 0
        gammas = [c["gamma"] for c in out["payload"]["certificates"]]
        assert gammas == ["4", "6", "8"]

    def test_obstruct_verify_roundtrip(self, capsys, tmp_path):
        path = tmp_path / "certs.json"
        code, out = invoke(capsys, "obstruct", "emit", "--max", "3",
                           "--out", str(path))
        assert code == 0
        code, out = invoke(capsys, "obstruct", "verify", str(path), "--full")
        assert code == 0
        assert out["payload"]["verified"] == 2
        assert all(c["checks"]["invariant_dim"] >= 1
                   for c in out["payload"]["certificates"])

    def test_unknown_subcommand_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(["frobnicate"])
        assert exc.value.code == 2

    def test_determinism(self, capsys):
        _, first = invoke(capsys, "symfunc", "product", "2,1", "2,1")
        _, second = invoke(capsys, "symfunc", "product", "2,1", "2,1")
        assert json.dumps(first["payload"], sort_keys=True) == \
            json.dumps(second["payload"], sort_keys=True)

    def test_config_override(self, capsys, tmp_path):
        path = tmp_path / "budgets.json"
        path.write_text(json.dumps({"plethysm_degree_cap": 2}))
        code, out = invoke(capsys, "--config", str(path),
                           "symfunc", "plethysm", "2", "2")
        assert code == 1
        assert "cap" in out["payload"]["error"]["message"]
