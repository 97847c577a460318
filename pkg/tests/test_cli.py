import json
import subprocess
import sys

import pytest

from vknots import __version__, catalog
from vknots.cli import main, run
from vknots.correspondence import group_of_diagram, longitude_of_diagram
from vknots.gauss import parse_gauss_code
from vknots.invariants.bracket import normalized_polynomial
from vknots.invariants.groups import symmetric
from vknots.invariants.homs import count_homs
from vknots.words import format_word

TREFOIL = "O1- U2- O3- U1- O2- U3-"


def json_out(capsys, argv):
    code = main(["--json", *argv])
    return code, json.loads(capsys.readouterr().out)


def test_bracket_of_empty_code():
    res = run(["bracket", ""])
    assert res.status == "ok" and res.text == "1"


def test_lambda_s3():
    res = run(["lambda", "--group", "S3", "--mu", "(12)"])
    assert res.text == "{e}"


def test_lambda_q8_reports_weight():
    res = run(["lambda", "--group", "Q8", "--mu", "i"])
    assert res.text == "{1, -1}"
    assert any("weight one" in n for n in res.diagnostics)


def test_homology_of_gordon_fixture():
    res = run(["homology", "gordon_k2.pres"])
    assert res.payload["H1"] == "Z" and res.payload["H2_complex"] == "Z"
    assert "kernel_generator" not in res.payload  # not in cyclic form
    assert run(["homology", "trefoil_group_4"]).payload["kernel_generator"] == [1, 1, 1, 1]


def test_info_and_group():
    res = run(["info", TREFOIL])
    assert res.payload == {"code": TREFOIL, "n": 3, "writhe": -3, "arcs": ["t1", "t2", "t3"]}
    assert run(["group", TREFOIL]).text == str(group_of_diagram(parse_gauss_code(TREFOIL)))


def test_library_parity():
    d = parse_gauss_code(TREFOIL)
    assert run(["bracket", "--normalized", TREFOIL]).text == str(normalized_polynomial(d))
    pd = longitude_of_diagram(d, "t2")
    res = run(["peripheral", TREFOIL, "--arc", "t2"])
    assert res.payload["longitude"] == format_word(pd.longitude)
    assert res.payload["framing_p"] == d.writhe
    res = run(["homs", "trefoil_2gen", "--group", "S3"])
    assert res.payload["count"] == count_homs(catalog.presentation("trefoil_2gen"), symmetric(3)) == 12
    assert run(["homs", "trefoil_2gen", "--group", "S3", "--surjective"]).payload["count"] == 6


def test_files_as_inputs(tmp_path):
    codes = tmp_path / "codes.txt"
    codes.write_text(f"{TREFOIL}\nO1+ U1+\n")
    res = run(["bracket", str(codes)])
    assert res.text == "A^7 - A^3 - A^-5"
    assert any("using the first" in n for n in res.diagnostics)
    pres = tmp_path / "t.pres"
    pres.write_text(catalog.PRESENTATIONS["trefoil_group_4"])
    assert run(["homology", str(pres)]).payload["H2_complex"] == "Z"
    table = tmp_path / "z2.tbl"
    table.write_text("2\n0 1\n1 0\n")
    assert run(["homs", "trefoil_group_4", "--group", str(table)]).payload["count"] == 2


def test_realize_and_friends():
    res = run(["realize", "trefoil_group_4", "--enumerate", "10"])
    assert len(res.payload["realizations"]) == 4
    res = run(["realize", "trefoil_chain", "--longitude", "1"])
    assert res.status == "ok" and res.diagnostics
    assert run(["cyclic", "gordon_k2"]).status == "ok"
    assert run(["realizable", "fox"]).status == "ok"


def test_sum_simplify_moves():
    assert run(["sum", "kink", "0", "kink", "0"]).text == "O1+ U1+ O2+ U2+"
    res = run(["simplify", "O1+ U1+", "--budget", "3"])
    assert res.payload == {"code": "", "n": 0, "moves": ["R1_remove 0 0"]}
    assert "R1_add 0 0" in run(["moves", ""]).payload["moves"]


def test_json_document(capsys):
    code, doc = json_out(capsys, ["--seed", "3", "info", "trefoil"])
    assert code == 0
    assert doc["schema_version"] == 1 and doc["tool"] == "vknots" and doc["version"] == __version__
    assert doc["command"] == "info" and doc["status"] == "ok"
    assert len(doc["input_hash"]) == 16
    _, again = json_out(capsys, ["--seed", "3", "info", "trefoil"])
    assert again == doc


def test_input_hash_tracks_file_contents(tmp_path, capsys):
    f = tmp_path / "c.txt"
    f.write_text("O1+ U1+\n")
    _, a = json_out(capsys, ["info", str(f)])
    f.write_text("O1- U1-\n")
    _, b = json_out(capsys, ["info", str(f)])
    assert a["input_hash"] != b["input_hash"]


@pytest.mark.parametrize(
    "argv, status, code",
    [
        (["nonsense"], 1, "usage"),
        (["simplify", "O1+ U1+"], 1, "usage"),
        (["homology", "no_such_fixture"], 1, "usage"),
        (["bracket", "O1+ U1-"], 2, "sign_mismatch"),
        (["lambda", "--group", "M24", "--mu", "e"], 2, "unknown_group"),
        (["homs", "trefoil_group_4", "--group", "S4", "--budget", "1"], 3, "budget_exceeded"),
    ],
)
def test_exit_codes(argv, status, code, capsys):
    assert main(argv) == status
    capsys.readouterr()
    got, doc = json_out(capsys, argv)
    assert got == status
    assert doc["status"] == "error" and doc["payload"]["code"] == code


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "vknots", "bracket", "kink"], capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "-A^3"
