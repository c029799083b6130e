import json
import subprocess
import sys

import pytest

from topofilter.adapters import read_pgm, write_pgm
from topofilter.cli import RunConfig, main
from topofilter.core import ValidationError, diagram_threshold
from topofilter.instances import pit_in_ring_image, ring_image
from topofilter.serialize import diagram_from_json


@pytest.fixture
def ring(tmp_path):
    p = tmp_path / "ring.pgm"
    write_pgm(ring_image(), p)
    return p


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def test_pd_on_ring(capsys, ring):
    code, out = run(capsys, "pd", ring, "--dim", "both", "--oracle")
    assert code == 0
    assert {"dim": 1, "birth": 1.0, "death": 3.0} in json.loads(out)
    assert {"dim": 0, "birth": 1.0, "death": "inf"} in json.loads(out)


def test_filter_star_on_ring(capsys, ring, tmp_path):
    out_path = tmp_path / "out.pgm"
    assert run(capsys, "filter", ring, "--dim", "star", "--eps", 3, "-o", out_path)[0] == 0
    assert set(read_pgm(out_path).values) == {1.0}


def test_filter_then_pd_thresholds(capsys, tmp_path):
    src = tmp_path / "pit.pgm"
    write_pgm(pit_in_ring_image(), src)
    full = diagram_from_json(json.loads(run(capsys, "pd", src)[1]))
    mid = tmp_path / "mid.json"
    assert run(capsys, "filter", src, "--dim", "1", "--eps", 3, "--json", "-o", mid)[0] == 0
    after = diagram_from_json(json.loads(run(capsys, "pd", mid, "--dim", "1")[1]))
    assert after == diagram_threshold(full.dimension(1), 3)


def test_outputs_are_deterministic(capsys, tmp_path):
    g = tmp_path / "g.json"
    assert run(capsys, "generate", "--seed", 3, "-o", g)[0] == 0
    first = [run(capsys, *cmd)[1] for cmd in (("pd", g), ("bht", g), ("filter", g, "--eps", 2))]
    again = [run(capsys, *cmd)[1] for cmd in (("pd", g), ("bht", g), ("filter", g, "--eps", 2))]
    assert first == again
    g2 = tmp_path / "g2.json"
    run(capsys, "generate", "--seed", 3, "-o", g2)
    assert g.read_bytes() == g2.read_bytes()


def test_bht_dump(capsys, tmp_path):
    p = tmp_path / "p.csv"
    p.write_text("3\n1\n4\n2\n")
    rows = json.loads(run(capsys, "bht", p)[1])
    assert [r["parent"] for r in rows] == [1, 1, 1, 1]
    assert rows[3] == {"vertex": 3, "parent": 1, "linking": 2, "pers": 2.0}


def test_csv_filter_writes_csv(capsys, tmp_path):
    p = tmp_path / "p.csv"
    p.write_text("3\n1\n4\n2\n")
    assert run(capsys, "filter", p, "--eps", 3)[1] == "3.0\n1.0\n4.0\n4.0\n"
    assert run(capsys, "filter", p, "--eps", 3, "--dim", "0", "--shift")[1] == "2.0\n0.0\n3.0\n3.0\n"


def test_svg_outputs(capsys, ring, tmp_path):
    svg = tmp_path / "d.svg"
    assert run(capsys, "pd", ring, "--svg", svg)[0] == 0
    text = svg.read_text()
    assert text.startswith("<svg") and "<rect x=" in text and "<circle" in text
    code, out = run(capsys, "plot", ring)
    assert code == 0 and "stroke-dasharray" in out


@pytest.mark.parametrize(
    "name, body, extra, code",
    [
        ("bad.json", "{not json", (), 1),
        ("bad.pgm", "P2\n2 2\n", (), 1),
        ("disc.json", '{"vertices": [0, 1, 2], "edges": [[0, 1]]}', (), 2),
        ("euler.json", '{"vertices": [0, 1, 2], "edges": [[0, 1], [1, 2], [2, 0]], "faces": [[0, 1, 2]]}', (), 2),
        ("cyc.json", '{"vertices": [0, 1], "edges": [[0, 1]], "faces": [[0]]}', (), 2),
        ("m.off", "OFF\n1 1 0\n0 0 0\n", (), 1),
        ("x.dat", "1", (), 1),
    ],
)
def test_exit_codes(capsys, tmp_path, name, body, extra, code):
    p = tmp_path / name
    p.write_text(body)
    assert main(["pd", str(p), *extra]) == code


def test_missing_file_and_bad_eps(capsys, tmp_path):
    assert main(["pd", str(tmp_path / "nope.json")]) == 1
    p = tmp_path / "p.csv"
    p.write_text("1\n2\n")
    assert main(["filter", str(p), "--eps", "0"]) == 2
    assert main(["filter", str(p), "--eps", "1", "--dim", "star"]) == 2
    assert main(["filter", str(p), "--eps", "1", "--dim", "1", "--shift"]) == 2


def test_oracle_mismatch_exit(capsys, ring, monkeypatch):
    import topofilter.cli as cli
    from topofilter.core import Diagram

    monkeypatch.setattr(cli, "oracle_pd", lambda s, faces: (Diagram([(0, 1)]), Diagram()))
    assert main(["pd", str(ring), "--oracle"]) == 3


def test_run_config_validation():
    with pytest.raises(ValidationError):
        RunConfig("filter", eps=-1)
    RunConfig("pd")


def test_console_entry_point(ring):
    r = subprocess.run([sys.executable, "-m", "topofilter.cli", "pd", str(ring), "--dim", "1"], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout) == [{"birth": 1.0, "death": 3.0, "dim": 1}]
