import json

import pytest

from baseloci.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_zariski_table(capsys):
    code, out, _ = run(capsys, "zariski", "blowup", "--class", "2,1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "class,P,N,P_coordinates,P^2,support"
    assert lines[1] == '2H + E,2H,E,"(2,0)",4,{E}'


def test_model_flag_and_json(capsys, tmp_path):
    code, out, _ = run(capsys, "zariski", "--model", "blowup", "--class", "2,1", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["rows"][0]["N"] == "E" and doc["rows"][0]["P_coordinates"] == ["2", "0"]


def test_chambers_two_point(capsys):
    code, out, _ = run(capsys, "chambers", "blowup2")
    rows = [l for l in out.splitlines()[1:] if not l.startswith("#")]
    assert code == 0 and len(rows) == 5
    loci = sorted(l.split(",")[0] for l in rows)
    assert loci == ["1", "2", "3", "4", "5"]
    for locus in ("{l}", "{E1,E2}", "{E1}", "{E2}", ",{},"):
        assert locus in out


def test_chambers_surface(capsys):
    code, out, _ = run(capsys, "chambers", "blowup2-surface")
    assert code == 0 and len([l for l in out.splitlines()[1:] if not l.startswith("#")]) == 5


def test_baseloci_and_asym(capsys):
    code, out, _ = run(capsys, "baseloci", "blowup2", "--class", "3,-2,-2")
    assert code == 0 and out.splitlines()[1].endswith("{l},{l},{l},yes")
    code, out, _ = run(capsys, "asym-order", "blowup2", "--class", "3,-2,-2")
    assert code == 0
    code, out, _ = run(capsys, "asym-order", "blowup2", "--class", "3,-2,-2", "--valuation", "0,1")
    assert out.splitlines()[1].endswith(",1,1")


def test_volume(capsys):
    code, out, _ = run(capsys, "volume", "blowup2", "--class", "3,-1,-1", "--bound", "10")
    assert code == 0 and out.splitlines()[1].split(",")[-3] == "7"


def test_fan_refine(capsys):
    code, out, _ = run(capsys, "fan-refine", "half-cone")
    assert code == 0 and "# d: 2" in out and "# verified_to_degree: 8" in out


def test_verify_cutkosky(capsys):
    code, out, _ = run(capsys, "verify", "cutkosky", "--k", "380", "--bound", "5")
    assert code == 0 and "# summary: PASS" in out
    line = next(l for l in out.splitlines() if l.startswith("certified interval"))
    lo, hi = [float(t) for t in line.split("[")[1].split("]")[0].split(",")]
    assert lo < 0.887058 < hi
    assert "(27+3√5)/38 ~ 0.8870580" in out


def test_verify_graded_and_toric(capsys):
    assert run(capsys, "verify", "maxpower")[0] == 0
    assert run(capsys, "verify", "blowup1-toric", "--bound", "2")[0] == 0


def test_surds_get_decimal_column(capsys):
    from baseloci.cli import Table
    from baseloci.surds import QuadraticSurd
    t = Table("x", ["v"], places=4)
    t.add(v=(27 + 3 * QuadraticSurd.sqrt(5)) / 38)
    assert t.render("csv") == "v,v_decimal\n(27+3√5)/38,0.8871\n"


def test_slice_plot(capsys):
    code, out, _ = run(capsys, "slice-plot", "blowup", "--class", "1,0", "--dirs", "1,0;0,1", "--grid", "2")
    assert code == 0 and len(out.splitlines()) == 10
    assert "0,1,\"(1,1/2)\",yes,1/2,0" in out


def test_out_dir(capsys, tmp_path):
    code, out, _ = run(capsys, "zariski", "blowup", "--class", "2,1", "--out", str(tmp_path))
    assert code == 0 and out == ""
    assert (tmp_path / "zariski.csv").read_text().startswith("class,")


def test_deterministic(capsys):
    a = run(capsys, "chambers", "blowup2", "--format", "json")[1]
    b = run(capsys, "chambers", "blowup2", "--format", "json")[1]
    assert a == b


@pytest.mark.parametrize("argv, msg", [
    (["zariski", "nope", "--class", "1"], "unknown fixture"),
    (["zariski", "blowup"], "--class is required"),
    (["zariski", "blowup", "--class", "a,b"], "cannot parse"),
    (["zariski", "blowup", "--class=-1,0"], "d.h <= 0"),
    (["fan-refine", "blowup"], "graded model"),
    (["chambers", "cutkosky"], "catalog is empty"),
    (["zariski"], "no model"),
])
def test_input_errors(capsys, argv, msg):
    code, _, err = run(capsys, *argv)
    assert code == 2 and msg in err


def test_bad_flags(capsys):
    assert main(["zariski", "blowup", "--bound", "0"]) == 2
    assert main(["frobnicate"]) == 2
    capsys.readouterr()


def test_incomplete_catalog_verbatim(capsys, tmp_path):
    model = {"name": "bad", "kind": "surface", "basis": ["H", "E1", "E2"],
             "intersection_matrix": [[1, 0, 0], [0, -1, 0], [0, 0, -1]],
             "curves": [{"name": "A", "class": [0, 1, 0]}, {"name": "B", "class": [0, 1, 1]}],
             "ample": [3, -1, -1]}
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(model))
    code, _, err = run(capsys, "zariski", "--model", str(p), "--class", "1,1,2")
    assert code == 2 and "incomplete curve catalog: negative coefficients A=-1" in err


def test_parse_error_location(capsys, tmp_path):
    p = tmp_path / "broken.json"
    p.write_text('{\n "kind": "surface",\n]')
    code, _, err = run(capsys, "zariski", "--model", str(p), "--class", "1,0")
    assert code == 2 and "broken.json:3:1" in err


def test_verify_failure_exit_code(capsys, tmp_path, monkeypatch):
    import baseloci.suites as suites
    monkeypatch.setattr(suites, "graded_suite", lambda s, bound=8: iter([("forced", False, "x")]))
    code, out, _ = run(capsys, "verify", "maxpower")
    assert code == 1 and "FAIL" in out


def test_list(capsys):
    assert main(["--list"]) == 0
    assert "blowup2" in capsys.readouterr().out
