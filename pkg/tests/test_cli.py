import json

from piercing import jsonio
from piercing.cli import main


def run(*argv):
    return main(list(argv))


def test_gen_pierce_verify_roundtrip(tmp_path):
    inst = tmp_path / "five.json"
    cert = tmp_path / "cert.json"
    assert run("gen", "five-cycle", "--out", str(inst)) == 0
    assert run("pierce", str(inst), "--out", str(cert)) == 0
    assert run("verify", str(cert)) == 0
    doc = json.loads(cert.read_text())
    assert doc["factor"] == 2
    assert len(doc["points"]) <= 3


def test_pierce_methods(tmp_path):
    inst = tmp_path / "hex.json"
    assert run("gen", "random", "--base", "hexagon", "--n", "15", "--box-size", "14",
               "--seed", "3", "--out", str(inst)) == 0
    for method in ("auto", "greedy", "hexagon", "grid", "lattice"):
        out = tmp_path / ("c_%s.json" % method)
        assert run("pierce", str(inst), "--method", method, "--out", str(out)) == 0
        assert run("verify", str(out)) == 0


def test_exact_command(tmp_path, capsys):
    inst = tmp_path / "nine.json"
    assert run("gen", "nine-triangles", "--out", str(inst)) == 0
    assert run("exact", str(inst)) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["tau"] == 3
    assert doc["nu"] == 1


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{broken")
    assert run("pierce", str(bad)) == 2
    notjsonable = tmp_path / "float.json"
    notjsonable.write_text(json.dumps({
        "base": {"type": "disk", "center": [0.5, 0], "radius": 1},
        "kind": "translates", "members": [{"t": [0, 0], "s": 1}],
    }))
    assert run("pierce", str(notjsonable)) == 2


def test_too_large_exit_code(tmp_path):
    inst = tmp_path / "big.json"
    assert run("gen", "random", "--base", "disk", "--n", "30", "--out", str(inst)) == 0
    assert run("exact", str(inst)) == 3


def test_tampered_certificate_fails_verification(tmp_path):
    inst = tmp_path / "d.json"
    cert = tmp_path / "c.json"
    assert run("gen", "random", "--base", "square", "--n", "8", "--seed", "4",
               "--out", str(inst)) == 0
    assert run("pierce", str(inst), "--out", str(cert)) == 0
    doc = json.loads(cert.read_text())
    doc["points"] = doc["points"][:1]
    cert.write_text(json.dumps(doc))
    assert run("verify", str(cert)) == 1


def test_svg_output(tmp_path):
    inst = tmp_path / "i.json"
    cert = tmp_path / "c.json"
    svg = tmp_path / "o.svg"
    assert run("gen", "five-cycle", "--out", str(inst)) == 0
    assert run("pierce", str(inst), "--out", str(cert), "--svg", str(svg)) == 0
    text = svg.read_text()
    assert text.startswith("<?xml")
    assert "<polygon" in text and "<path" in text


def test_experiment_csv(tmp_path):
    csv_path = tmp_path / "rows.csv"
    assert run("experiment", "--base", "square", "--trials", "3", "--n-range", "6:9",
               "--csv", str(csv_path)) == 0
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0].startswith("instance,method,n,points,witness,factor,ratio")
    assert len(lines) == 4


def test_conjecture_log(tmp_path):
    log = tmp_path / "rec.jsonl"
    assert run("conjecture", "--base", "hexagon", "--n", "5", "--trials", "2",
               "--box-size", "7", "--log", str(log)) == 0
    rows = [json.loads(line) for line in log.read_text().splitlines()]
    assert len(rows) == 2
    assert all(r["tau_le_ratio"] and r["nu_ge_quarter_ratio"] for r in rows)


def test_bench_smoke(capsys):
    assert run("bench", "--n", "500", "--base", "disk") == 0
    out = capsys.readouterr().out
    assert "n=500" in out and "points/s" in out


def test_pattern_emit_and_verify(tmp_path):
    pat = tmp_path / "pat.json"
    for base, variant in (("disk", "half"), ("hexagon", "diff"), ("triangle", "half"),
                          ("square", "diff")):
        assert run("pattern", "--base", base, "--variant", variant, "--out", str(pat)) == 0
        assert run("verify", str(pat)) == 0
    doc = json.loads(pat.read_text())
    doc["offsets"] = doc["offsets"][:1]
    pat.write_text(json.dumps(doc))
    assert run("verify", str(pat)) == 1


def test_instance_roundtrip_lossless(tmp_path):
    from piercing.generators import random_family, unit_disk

    f = random_family(unit_disk(), 9, kind="homothets", seed=11)
    doc = jsonio.family_to_json(f)
    g = jsonio.family_from_json(json.loads(json.dumps(doc)))
    assert jsonio.family_to_json(g) == doc


def test_radical_points_roundtrip(tmp_path):
    inst = tmp_path / "disks.json"
    cert = tmp_path / "cert.json"
    assert run("gen", "random", "--base", "disk", "--n", "12", "--seed", "5",
               "--out", str(inst)) == 0
    assert run("pierce", str(inst), "--no-refine", "--out", str(cert)) == 0
    doc = json.loads(cert.read_text())
    assert any(p["kind"] == "radical" for p in doc["points"])
    assert run("verify", str(cert)) == 0
