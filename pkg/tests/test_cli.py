import subprocess
import sys

import pytest

from apollonius.cli import main

RUN = [sys.executable, "-m", "apollonius"]


def test_locus_one_shot(capsys):
    code = main(["locus", "--c1", "0,0,1", "--c2", "3,0,1", "--k", "2"])
    assert code == 0
    assert capsys.readouterr().out == \
        "circle center=(6.000000000, 0.000000000) r=4.358898944\n"


def test_locus_empty(capsys):
    code = main(["locus", "--c1", "0,0,1", "--c2", "4,0,1", "--k", "-1"])
    assert code == 0
    assert capsys.readouterr().out == "empty\n"


def test_locus_ratio_forms(capsys):
    assert main(["locus", "--c1", "0,0,1", "--c2", "3,0,1", "--k", "7/4"]) == 0
    assert main(["locus", "--c1", "0,0,1", "--c2", "3,0,1", "--k", "inf"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "circle center=(7.000000000, 0.000000000) r=5.385164807"
    assert out[1] == "circle center=(3.000000000, 0.000000000) r=1.000000000"


def test_thresholds_one_shot(capsys):
    code = main(["thresholds", "--c1", "0,0,1", "--c2", "2,0,1"])
    assert code == 0
    assert capsys.readouterr().out == "double root k=-1.000000000\n"


def test_classic_one_shot(capsys):
    code = main(["classic", "--a", "0,3", "--b", "0,0", "--c", "4,0"])
    assert code == 0
    assert capsys.readouterr().out == \
        "circle center=(-2.250000000, 0.000000000) r=3.750000000\n"


def test_usage_error_exit_1(capsys):
    assert main(["locus", "--c1", "0,0", "--c2", "3,0,1", "--k", "2"]) == 1
    assert main(["locus", "--c1", "0,0,1", "--c2", "3,0,1", "--k", "0/0"]) == 1
    assert main(["nonsense"]) == 1
    assert capsys.readouterr().err != ""


def test_math_error_exit_2(capsys):
    # coincident points make the classical construction undefined
    code = main(["classic", "--a", "0,3", "--b", "1,1", "--c", "1,1"])
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_run_missing_file(capsys):
    assert main(["run", "no-such-file.txt"]) == 1
    assert capsys.readouterr().err != ""


def test_run_scene_and_svg(tmp_path, capsys):
    scene = tmp_path / "scene.txt"
    scene.write_text("circle G1 0 0 1\ncircle G2 3 0 1\nquery locus G1 G2 2\n")
    svg_path = tmp_path / "out.svg"
    code = main(["run", str(scene), "--svg", str(svg_path)])
    assert code == 0
    out = capsys.readouterr().out
    assert out == "locus: circle center=(6.000000000, 0.000000000) r=4.358898944\n"
    assert svg_path.read_text().startswith("<?xml")


def test_run_parse_error_exit_1(tmp_path, capsys):
    scene = tmp_path / "bad.txt"
    scene.write_text("circle G1 0 0 -1\n")
    assert main(["run", str(scene)]) == 1
    assert "line 1" in capsys.readouterr().err


def test_run_tol_override(tmp_path, capsys):
    scene = tmp_path / "scene.txt"
    scene.write_text("circle G1 0 0 1\ncircle G2 3 0 1\nquery locus G1 G2 1.0000001\n")
    assert main(["run", str(scene)]) == 0
    strict = capsys.readouterr().out
    assert strict.startswith("locus: circle")
    assert main(["run", str(scene), "--tol", "1e-3"]) == 0
    loose = capsys.readouterr().out
    assert loose.startswith("locus: line")


def test_selftest_reproducible_subprocess():
    runs = [subprocess.run(RUN + ["selftest", "--seed", "7"],
                           capture_output=True, timeout=300) for _ in range(2)]
    assert runs[0].returncode == 0
    assert runs[0].stdout == runs[1].stdout
    assert b"selftest: PASS" in runs[0].stdout


def test_verify_subcommand(capsys):
    code = main(["verify", "--c1", "0,0,1", "--c2", "3,0,1", "--k", "2",
                 "--window", "-12,12,-12,12", "--step", "0.1"])
    assert code == 0
    out = capsys.readouterr().out
    assert "agreement: yes" in out
    assert "scan hits" in out
