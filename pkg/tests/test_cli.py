import json

import pytest

from logcentre.casestudies import francia_input_document
from logcentre.cli import main
from logcentre.iodoc import serialize_document


@pytest.fixture
def francia_doc(tmp_path):
    path = tmp_path / "francia.json"
    path.write_text(serialize_document(francia_input_document()))
    return str(path)


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# order group


def test_omega_center(capsys):
    code, out, _ = _run(capsys, "order", "omega-center", "--e", "3", "--i", "1")
    assert (code, out) == (0, "0\n")
    code, out, _ = _run(capsys, "order", "omega-center", "--e", "3", "--i", "2")
    assert (code, out) == (0, "-1\n")


def test_cover_center(capsys):
    code, out, _ = _run(capsys, "order", "cover-center", "--e", "3", "--m", "3")
    assert (code, out) == (0, "0 0 -1\n")


def test_discriminant(capsys, francia_doc):
    code, out, _ = _run(capsys, "order", "discriminant", francia_doc)
    assert (code, out) == (0, "1/2*D_rho\n")


# toric group


def test_klt_text(capsys, francia_doc):
    code, out, _ = _run(capsys, "toric", "klt", francia_doc + "#base")
    assert (code, out) == (0, "klt=true u=(0,0,1/2) index=2\n")


def test_qcartier_canonical_fails(capsys, francia_doc):
    code, out, _ = _run(capsys, "toric", "qcartier", francia_doc + "#base", "--divisor", "K")
    assert (code, out) == (3, "none\n")


def test_qcartier_pair(capsys, francia_doc):
    code, out, _ = _run(capsys, "toric", "qcartier", francia_doc + "#base")
    assert (code, out) == (0, "u=(0,0,1/2)\n")


def test_qcartier_explicit_coefficients(capsys, francia_doc):
    code, out, _ = _run(
        capsys, "toric", "qcartier", francia_doc + "#base", "--divisor=-1/2,-1,-1,-1"
    )
    assert (code, out) == (0, "u=(0,0,1/2)\n")


def test_index(capsys, francia_doc):
    code, out, _ = _run(capsys, "toric", "index", francia_doc + "#base")
    assert (code, out) == (0, "2\n")


def test_canonical_on_cover(capsys, francia_doc):
    code, out, _ = _run(capsys, "toric", "canonical", francia_doc + "#cover")
    assert (code, out) == (0, "canonical=true u=(0,0,1) index=1\n")


def test_canonical_not_applicable(capsys, francia_doc):
    code, out, err = _run(capsys, "toric", "canonical", francia_doc + "#base")
    assert code == 3
    assert out == ""
    assert "not applicable" in err


def test_cover_text(capsys, francia_doc):
    code, out, _ = _run(capsys, "toric", "cover", francia_doc + "#base")
    assert code == 0
    assert out == (
        "degree=2\n"
        "lattice=(1,0,0);(0,1,0);(0,0,1)\n"
        "rays=(0,0,1);(0,1,1);(1,0,1);(1,1,1)\n"
    )


def test_dual_gens(capsys, francia_doc):
    code, out, _ = _run(capsys, "toric", "dual-gens", francia_doc + "#base")
    assert code == 0
    assert out.splitlines()[0] == "5 generators"
    assert "-1 -1 1" in out.splitlines()


def test_json_format(capsys, francia_doc):
    code, out, _ = _run(capsys, "toric", "klt", francia_doc + "#base", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data == {"klt": True, "functional": [0, 0, "1/2"], "index": 2}


def test_out_file(capsys, tmp_path, francia_doc):
    target = tmp_path / "result.json"
    code, out, _ = _run(capsys, "toric", "index", francia_doc + "#base", "--out", str(target))
    assert code == 0
    assert out == "2\n"
    assert json.loads(target.read_text()) == {"divisor": "K+D", "index": 2}
    assert target.read_text().endswith("\n")


# ncpoly group


def test_nf(capsys):
    code, out, _ = _run(capsys, "ncpoly", "nf", "b*a")
    assert (code, out) == (0, "a*b - 2*c^3\n")


def test_central(capsys):
    code, out, _ = _run(capsys, "ncpoly", "central", "a^2 + c^2")
    assert (code, out) == (0, "central=true\n")
    code, out, _ = _run(capsys, "ncpoly", "central", "c")
    assert (code, out) == (3, "central=false\n")


def test_identity(capsys):
    code, out, _ = _run(capsys, "ncpoly", "identity", "(a*b - b*a)^2", "4*c^6")
    assert (code, out) == (0, "identity=true\n")


def test_quotient_check(capsys):
    code, out, _ = _run(capsys, "ncpoly", "quotient-check", "francia-algebra")
    assert (code, out) == (0, "consistent=true\n")


def test_system_from_document(capsys, tmp_path):
    from logcentre.casestudies import clifford_input_document

    path = tmp_path / "systems.json"
    path.write_text(serialize_document(clifford_input_document()))
    code, out, _ = _run(
        capsys, "ncpoly", "nf", "b*a", "--system", f"{path}#clifford-algebra"
    )
    assert (code, out) == (0, "a*b - 2*c^3\n")


# examples group


def test_examples_run_text(capsys):
    code, out, _ = _run(capsys, "examples", "run", "francia")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "case study: francia"
    assert lines[-1] == "overall: pass"
    assert all(line.startswith("  [ok]") for line in lines[1:-1])


def test_examples_run_json(capsys):
    code, out, _ = _run(capsys, "examples", "run", "clifford", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["name"] == "clifford"
    assert data["overall"] is True
    assert all(check["passed"] for check in data["checks"])


def test_examples_input_round_trips(capsys, tmp_path):
    code, out, _ = _run(capsys, "examples", "input", "francia")
    assert code == 0
    path = tmp_path / "doc.json"
    path.write_text(out)
    code, out2, _ = _run(capsys, "toric", "klt", f"{path}#base")
    assert (code, out2) == (0, "klt=true u=(0,0,1/2) index=2\n")


def test_examples_unknown_name(capsys):
    code, _, err = _run(capsys, "examples", "run", "mystery")
    assert code == 2
    assert "error" in err


# failure routing


def test_missing_file(capsys):
    code, _, err = _run(capsys, "toric", "klt", "/no/such/file.json")
    assert code == 2
    assert "error" in err


def test_wrong_object_type(capsys, francia_doc):
    code, _, err = _run(capsys, "order", "discriminant", francia_doc + "#base")
    assert code == 2
    assert "error" in err


def test_unknown_generator(capsys):
    code, _, err = _run(capsys, "ncpoly", "nf", "x*y")
    assert code == 2
    assert "error" in err


def test_no_arguments(capsys):
    assert _run(capsys)[0] == 2


def test_resource_limit_exit_code(capsys, tmp_path):
    rays = [[int(i == j) for j in range(5)] for i in range(5)]
    doc = {
        "version": "1",
        "objects": {"big": {"type": "cone_pair", "rays": rays, "boundary": [0] * 5}},
    }
    path = tmp_path / "big.json"
    path.write_text(json.dumps(doc))
    code, _, err = _run(capsys, "toric", "klt", str(path))
    assert code == 4
    assert "error" in err


def test_step_cap_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("LOGCENTRE_STEP_CAP", "1")
    code, _, err = _run(capsys, "ncpoly", "nf", "c*b*a")
    assert code == 4
    assert "error" in err


def test_module_entry_point():
    import logcentre.__main__  # noqa: F401  (import must not execute main)
