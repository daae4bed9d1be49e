import json
import subprocess
import sys

import pytest

from qmelon.cli import main

MELON_JSON = json.dumps({
    "N": 2, "M": 1, "k": 0, "lambda": [1, 0],
    "c_steps": [0, 1], "b_steps": [0, 1], "volume": 2,
})

MELON_ASCII = """\
watermelon N=2 M=1 k=0 volume=2
1-1
|
1   2
    |
  2-2
"""

PP_ASCII = """\
plane partition N=2 L=2 M=2 volume=4
2 1
1 0
"""


def run_main(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_schur_all_agrees(capsys):
    code, out, _ = run_main(capsys, "schur", "--shape", "[2,1]", "--vars", "3",
                            "--alg", "all")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "verdict: OK"
    assert lines[0] == "bialternant: q + 2*q^2 + 2*q^3 + 2*q^4 + q^5"
    assert len(lines) == 6


def test_schur_single_default(capsys):
    code, out, _ = run_main(capsys, "schur", "--shape", "[]", "--vars", "1")
    assert code == 0
    assert out.strip() == "1"


def test_schur_json(capsys):
    code, out, _ = run_main(capsys, "schur", "--shape", "[1]", "--vars", "2",
                            "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["agree"] is True
    assert data["values"]["bialternant"] == [[0, "1"], [1, "1"]]


def test_schur_parse_error(capsys):
    code, _, err = run_main(capsys, "schur", "--shape", "[1,2]")
    assert code == 2
    assert "error" in err


def test_schur_not_enough_vars(capsys):
    code, _, err = run_main(capsys, "schur", "--shape", "[2,1,1]", "--vars", "2")
    assert code == 2


def test_count_number(capsys):
    code, out, _ = run_main(capsys, "count", "--n", "2", "--l", "2", "--m", "2")
    assert code == 0
    assert out.strip() == "20"


def test_count_zero_box(capsys):
    code, out, _ = run_main(capsys, "count", "--n", "0", "--l", "3", "--m", "2")
    assert code == 0
    assert out.strip() == "1"


def test_count_genfunc_text(capsys):
    code, out, _ = run_main(capsys, "count", "--n", "1", "--l", "1", "--m", "4",
                            "--what", "genfunc")
    assert code == 0
    assert out.strip() == "1 + q + q^2 + q^3 + q^4"


def test_count_csv(capsys):
    code, out, _ = run_main(capsys, "count", "--n", "2", "--l", "2", "--m", "2",
                            "--what", "zq", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,l,m,what,value"
    assert lines[1].startswith("2,2,2,zq,")


def test_count_json(capsys):
    code, out, _ = run_main(capsys, "count", "--n", "2", "--l", "2", "--m", "2",
                            "--what", "genfunc", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["value"][0] == [0, "1"]
    assert data["what"] == "genfunc"


def test_count_negative(capsys):
    code, _, err = run_main(capsys, "count", "--n", "-1", "--l", "1", "--m", "1")
    assert code == 2


def test_verify_small_suite(capsys):
    code, out, _ = run_main(capsys, "verify", "--suite", "qbinet",
                            "--max-n", "2", "--max-m", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "# passed 4/4"
    for line in lines[:-1]:
        data = json.loads(line)
        assert data["equal"] is True
        assert data["identity"] == "q-binet-cauchy"


def test_verify_gv_box(capsys):
    code, out, _ = run_main(capsys, "verify", "--suite", "gv",
                            "--shapes-in-box", "2,2")
    assert code == 0
    assert out.splitlines()[-1] == "# passed 6/6"


def test_verify_empty_grid(capsys):
    code, out, _ = run_main(capsys, "verify", "--suite", "qbinet", "--max-n", "0")
    assert code == 0
    assert out.strip() == "# passed 0/0"


def test_verify_deterministic_modulo_timing(capsys):
    argv = ("verify", "--suite", "melon", "--max-n", "2", "--max-m", "1")
    _, out1, _ = run_main(capsys, *argv)
    _, out2, _ = run_main(capsys, *argv)

    def stable(text):
        rows = []
        for line in text.splitlines():
            if line.startswith("#"):
                rows.append(line)
            else:
                d = json.loads(line)
                d.pop("elapsed_ms")
                rows.append(json.dumps(d, sort_keys=True))
        return rows

    assert stable(out1) == stable(out2)


def test_verify_workers_match_serial(capsys):
    argv = ("verify", "--suite", "zq", "--max-n", "2", "--max-m", "2")
    _, serial, _ = run_main(capsys, *argv)
    _, para, _ = run_main(capsys, *argv, "--workers", "2")
    strip_ms = lambda t: [
        {k: v for k, v in json.loads(x).items() if k != "elapsed_ms"}
        for x in t.splitlines() if not x.startswith("#")]
    assert strip_ms(serial) == strip_ms(para)
    assert serial.splitlines()[-1] == para.splitlines()[-1]


def test_verify_out_file(tmp_path, capsys):
    target = tmp_path / "reports.jsonl"
    code, out, _ = run_main(capsys, "verify", "--suite", "kuperberg",
                            "--max-n", "1", "--max-m", "1", "--out", str(target))
    assert code == 0
    assert out.strip() == "# passed 1/1"
    lines = target.read_text().splitlines()
    assert len(lines) == 1
    assert json.loads(lines[0])["identity"] == "kuperberg"


def test_verify_env_workers(capsys, monkeypatch):
    monkeypatch.setenv("QMELON_WORKERS", "2")
    code, out, _ = run_main(capsys, "verify", "--suite", "gv",
                            "--shapes-in-box", "1,1")
    assert code == 0
    assert out.splitlines()[-1] == "# passed 2/2"


def test_verify_bad_box(capsys):
    code, _, err = run_main(capsys, "verify", "--suite", "gv",
                            "--shapes-in-box", "2x2")
    assert code == 2


def test_render_watermelon_ascii(tmp_path, capsys):
    src = tmp_path / "melon.json"
    src.write_text(MELON_JSON)
    code, out, _ = run_main(capsys, "render", "--input", str(src))
    assert code == 0
    assert out == MELON_ASCII


def test_render_pp_ascii(tmp_path, capsys):
    src = tmp_path / "pp.json"
    src.write_text(json.dumps({"N": 2, "L": 2, "M": 2, "parts": [[2, 1], [1, 0]]}))
    code, out, _ = run_main(capsys, "render", "--input", str(src))
    assert code == 0
    assert out == PP_ASCII


def test_render_empty_pp(tmp_path, capsys):
    src = tmp_path / "pp.json"
    src.write_text(json.dumps({"N": 2, "L": 2, "M": 2, "parts": []}))
    code, out, _ = run_main(capsys, "render", "--input", str(src))
    assert code == 0
    assert out.splitlines()[0] == "plane partition N=2 L=2 M=2 volume=0"
    assert out.splitlines()[1:] == ["0 0", "0 0"]


def test_render_svg_deterministic(tmp_path, capsys):
    src = tmp_path / "melon.json"
    src.write_text(MELON_JSON)
    code, out1, _ = run_main(capsys, "render", "--input", str(src), "--style", "svg")
    code2, out2, _ = run_main(capsys, "render", "--input", str(src), "--style", "svg")
    assert code == code2 == 0
    assert out1 == out2
    assert out1.startswith('<svg xmlns="http://www.w3.org/2000/svg"')
    assert out1.count("<polyline") == 2


def test_render_pp_svg(tmp_path, capsys):
    src = tmp_path / "pp.json"
    src.write_text(json.dumps({"N": 1, "L": 1, "M": 2, "parts": [[2]]}))
    code, out, _ = run_main(capsys, "render", "--input", str(src), "--style", "svg")
    assert code == 0
    # one floor tile plus three faces per cube
    assert out.count("<polygon") == 1 + 3 * 2


def test_render_to_file(tmp_path, capsys):
    src = tmp_path / "melon.json"
    src.write_text(MELON_JSON)
    target = tmp_path / "fig.txt"
    code, out, _ = run_main(capsys, "render", "--input", str(src),
                            "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text() == MELON_ASCII


def test_render_malformed(tmp_path, capsys):
    src = tmp_path / "bad.json"
    src.write_text("not json")
    code, _, err = run_main(capsys, "render", "--input", str(src))
    assert code == 2
    src.write_text(json.dumps({"stuff": 1}))
    code, _, err = run_main(capsys, "render", "--input", str(src))
    assert code == 2
    code, _, err = run_main(capsys, "render", "--input", str(tmp_path / "nope.json"))
    assert code == 2


def test_render_volume_mismatch(tmp_path, capsys):
    src = tmp_path / "bad.json"
    data = json.loads(MELON_JSON)
    data["volume"] = 7
    src.write_text(json.dumps(data))
    code, _, err = run_main(capsys, "render", "--input", str(src))
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qmelon", "count", "--n", "2", "--l", "2", "--m", "2"],
        capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "20"


def test_module_usage_error():
    proc = subprocess.run(
        [sys.executable, "-m", "qmelon", "bogus"],
        capture_output=True, text=True, timeout=120)
    assert proc.returncode == 2
