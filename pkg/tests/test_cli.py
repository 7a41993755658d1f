import json
import subprocess
import sys

import pytest

from equiangular.cli import main, parse_angle
from equiangular.families import generate_pn


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_angle():
    import math
    assert parse_angle("pi/3") == pytest.approx(math.pi / 3)
    assert parse_angle("2*pi/3") == pytest.approx(2 * math.pi / 3)
    assert parse_angle("2pi/3") == pytest.approx(2 * math.pi / 3)
    assert parse_angle("0.5") == 0.5


def test_vol_p2(capsys):
    code, out, _ = run(capsys, "vol", "--family", "pn", "--n", "2")
    assert code == 0
    assert abs(float(out) - 5.074705) <= 1e-5
    assert len(out.strip().split(".")[1]) == 6


def test_vol_tetra(capsys):
    code, out, _ = run(capsys, "vol", "--tetra", "pi/3", "pi/3", "pi/3")
    assert code == 0 and out.strip() == "1.014941606"


def test_vol_named(capsys):
    code, out, _ = run(capsys, "vol", "--named", "pentagonal-prism")
    assert code == 0 and abs(float(out) - 7.198378) <= 1e-5


def test_vol_bad_tetra(capsys):
    code, _, err = run(capsys, "vol", "--tetra", "pi/3", "pi/3", "pi/4")
    assert code == 1 and err.startswith("error:")


def test_census_summary(capsys):
    code, out, _ = run(capsys, "census", "--v", "10", "--method", "both")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "v=10 count=1"
    data = json.loads("\n".join(lines[:-1]))
    assert len(data) == 1 and data[0]["face_census"] == {"4": 5, "5": 2}


def test_census_bad_v(capsys):
    code, _, err = run(capsys, "census", "--v", "7")
    assert code == 1 and "v must be even" in err


def test_check_triprism(capsys, tmp_path):
    f = tmp_path / "triprism.json"
    assert run(capsys, "gen", "--family", "prism", "--m", "3", "--out", str(f))[0] == 0
    code, out, err = run(capsys, "check", "--in", str(f), "--k", "3")
    assert code == 1
    assert "no pi/3-equiangular triangular prism exists" in err
    assert out.strip().splitlines()[-1] == "infeasible"


def test_check_json(capsys, tmp_path):
    f = tmp_path / "cube.json"
    run(capsys, "gen", "--named", "cube", "--out", str(f))
    code, out, _ = run(capsys, "check", "--in", str(f), "--json")
    assert code == 0 and json.loads(out)["feasible"] is True


@pytest.mark.parametrize("n", range(1, 11))
def test_gen_check_round_trip(capsys, tmp_path, n):
    f = tmp_path / f"p{n}.json"
    assert run(capsys, "gen", "--family", "pn", "--n", str(n), "--out", str(f))[0] == 0
    code, out, _ = run(capsys, "check", "--in", str(f))
    assert code == 0 and out.strip().splitlines()[-1] == "feasible"


@pytest.mark.parametrize("m", [4, 5, 6, 7])
def test_gen_prism_round_trip(capsys, tmp_path, m):
    f = tmp_path / f"prism{m}.json"
    run(capsys, "gen", "--family", "prism", "--m", str(m), "--out", str(f))
    code, out, _ = run(capsys, "check", "--in", str(f))
    assert code == 0 and out.strip().splitlines()[-1] == "feasible"


def test_gen_stdout_matches_library(capsys):
    code, out, _ = run(capsys, "gen", "--family", "pn", "--n", "3")
    assert code == 0 and json.loads(out) == json.loads(generate_pn(3).to_json())


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--max-n", "5")
    assert code == 0
    rows = [r.split("\t") for r in out.strip().splitlines()]
    assert rows[0] == ["n", "tetra_count", "volume"]
    expected = [(1, 1, 1.014941), (2, 5, 5.074705), (5, 35, 35.522955)]
    for n, c, vol in expected:
        row = rows[n]
        assert (int(row[0]), int(row[1])) == (n, c)
        assert abs(float(row[2]) - vol) <= 1e-5
        assert len(row[2].split(".")[1]) == 6


def test_render_schematic(capsys, tmp_path):
    f = tmp_path / "fig.svg"
    code, _, _ = run(capsys, "render", "--family", "pn", "--n", "5", "--schematic",
                     "--out", str(f))
    assert code == 0 and f.read_text().count("<circle") == 15


def test_render_from_file(capsys, tmp_path):
    src, fig = tmp_path / "p3.json", tmp_path / "p3.svg"
    run(capsys, "gen", "--family", "pn", "--n", "3", "--out", str(src))
    code, _, _ = run(capsys, "render", "--in", str(src), "--outer", "0", "--out", str(fig))
    assert code == 0 and fig.read_text().count("<line") == 21


def test_bad_json(capsys, tmp_path):
    f = tmp_path / "bad.json"
    f.write_text("{not json")
    assert run(capsys, "check", "--in", str(f))[0] == 1


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "check", "--in", str(tmp_path / "nope.json"))[0] == 1


@pytest.mark.parametrize("argv", [["vol"], ["census"], ["frobnicate"], ["table", "--max-n", "x"],
                                  ["vol", "--family", "pn", "--n", "2", "--bogus"]])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def _subprocess(*argv):
    return subprocess.run([sys.executable, "-m", "equiangular", *argv],
                          capture_output=True, check=False)


def test_byte_identical_runs():
    a = _subprocess("census", "--v", "12", "--method", "both")
    b = _subprocess("census", "--v", "12", "--method", "both")
    assert a.returncode == 0 and a.stdout == b.stdout
    assert a.stdout.strip().endswith(b"v=12 count=2")


def test_console_entry_usage_error():
    r = _subprocess("vol", "--nope")
    assert r.returncode == 2 and b"usage" in r.stderr
