import json
import pathlib

import pytest

from hsw import cli

GOLDEN = pathlib.Path(__file__).parent / "golden"

GOLDEN_REQUESTS = [
    ("criteria_dihedral4.json", ["criteria", "--group", "dihedral:4", "--primes", "2,3"]),
    ("symmetric_gl3flags2.json", ["symmetric", "--group", "gl3flags:2", "--primes", "2,3,7"]),
    ("presentation_b2_f3.json", ["presentation", "--type", "B2", "--char", "3"]),
    ("orbitals_sympairs5.json", ["orbitals", "--group", "sympairs:5", "--tensor"]),
    ("schur_build_dihedral4.json", ["schur", "build", "--group", "dihedral:4", "--char", "2"]),
]


def run_to_bytes(tmp_path, argv, name="out.json"):
    out = tmp_path / name
    code = cli.run(["--out", str(out)] + argv)
    assert code == 0
    return out.read_bytes()


@pytest.mark.parametrize("golden,argv", GOLDEN_REQUESTS)
def test_golden_outputs(tmp_path, golden, argv):
    data = run_to_bytes(tmp_path, argv)
    assert data == (GOLDEN / golden).read_bytes()


@pytest.mark.parametrize("golden,argv", GOLDEN_REQUESTS)
def test_rerun_is_byte_identical(tmp_path, golden, argv):
    first = run_to_bytes(tmp_path, argv, "a.json")
    second = run_to_bytes(tmp_path, argv, "b.json")
    assert first == second


def test_load_group_from_json_file(tmp_path):
    path = tmp_path / "group.json"
    path.write_text(json.dumps({"degree": 4, "generators": [[2, 3, 4, 1], [1, 4, 3, 2]]}))
    out = run_to_bytes(tmp_path, ["orbitals", "--file", str(path)])
    result = json.loads(out)["result"]
    assert result["rank"] == 3 and result["subdegrees"] == [1, 1, 2]


def test_load_group_from_cycles(tmp_path):
    out = run_to_bytes(
        tmp_path,
        ["orbitals", "--gens", "(1 2 3 4); (2 4)", "--degree", "4"],
    )
    assert json.loads(out)["result"]["rank"] == 3


def test_symmetric_single_char(tmp_path, capsys):
    code = cli.run(["symmetric", "--group", "dihedral:4", "--char", "2"])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    entry = report["result"]["per_characteristic"][0]
    assert entry["p"] == 2 and entry["verdict"]["exists"] is False
    assert report["schema"] == "hsw/1"


def test_frobenius_command(capsys):
    assert cli.run(["frobenius", "--group", "gl3flags:2", "--char", "2"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["result"]["per_characteristic"][0]["verdict"]["exists"] is True


def test_algebra_export(capsys):
    assert cli.run(["algebra", "--group", "dihedral:4", "--char", "2"]) == 0
    data = json.loads(capsys.readouterr().out)["result"]["algebra"]
    assert data["dim"] == 3 and data["p"] == 2


def test_domain_error_exit_2(capsys):
    code = cli.run(["rank3", "--group", "dihedral:5"])
    assert code == 2
    err = json.loads(capsys.readouterr().err)
    assert err["error"]["type"] == "EqualSubdegrees"
    assert err["schema"] == "hsw/1"


def test_infeasible_mode_exit_3(capsys):
    code = cli.run(["symmetric", "--group", "cyclic:12", "--char", "2", "--mode", "det"])
    assert code == 3
    err = json.loads(capsys.readouterr().err)
    assert err["error"]["type"] == "ModeInfeasible"


def test_rand_mode_requires_seed(capsys):
    code = cli.run(["symmetric", "--group", "cyclic:12", "--char", "2", "--mode", "rand"])
    assert code == 2
    err = json.loads(capsys.readouterr().err)
    assert err["error"]["type"] == "BadParameter"


def test_rand_mode_with_seed(capsys):
    code = cli.run(["symmetric", "--group", "cyclic:12", "--char", "2",
                    "--mode", "rand", "--seed", "11"])
    assert code == 0
    entry = json.loads(capsys.readouterr().out)["result"]["per_characteristic"][0]
    assert entry["verdict"]["exists"] is True
    assert entry["verdict"]["mode"] == "randomized"


def test_two_group_sources_rejected(capsys):
    code = cli.run(["orbitals", "--group", "cyclic:4", "--gens", "(1 2)", "--degree", "2"])
    assert code == 2


def test_bad_generator_images_rejected(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"degree": 4, "generators": [[2, 2, 3, 4]]}))
    code = cli.run(["orbitals", "--file", str(path)])
    assert code == 2
    err = json.loads(capsys.readouterr().err)
    assert err["error"]["type"] == "ParseError"


def test_text_format(capsys):
    assert cli.run(["--format", "text", "rank3", "--group", "dihedral:4"]) == 0
    out = capsys.readouterr().out
    assert "gcd: 2" in out and "s_permutation: False" in out


def test_schur_validate_roundtrip(tmp_path, capsys):
    part = {"group": {"order": 6, "cyclic": True}, "basic_sets": [[0], [3], [1, 2, 4, 5]]}
    path = tmp_path / "part.json"
    path.write_text(json.dumps(part))
    assert cli.run(["schur", "validate", "--partition", str(path)]) == 0
    result = json.loads(capsys.readouterr().out)["result"]
    assert result["valid"] is True and result["classification"] == "wedge"
    bad = {"group": {"order": 5, "cyclic": True}, "basic_sets": [[0], [1], [2, 3, 4]]}
    path.write_text(json.dumps(bad))
    assert cli.run(["schur", "validate", "--partition", str(path)]) == 0
    result = json.loads(capsys.readouterr().out)["result"]
    assert result["valid"] is False


def test_schur_enumerate(capsys):
    assert cli.run(["schur", "enumerate", "--order", "6", "--primes", "2"]) == 0
    result = json.loads(capsys.readouterr().out)["result"]
    assert result["count"] == 7
    flags = [v["2"] for v in result["symmetric"]]
    assert flags.count(False) == 2  # the two wreath-type rings fail at 2
