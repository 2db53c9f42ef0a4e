import csv
import io
import json
import math

import pytest

from fivemove.algebra.cyclotomic import Cyclo40
from fivemove.cli import density, main, table41_rows
from fivemove.report import compare_reports, compute_report, point_from_powers


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert code == 0, err
    return json.loads(out)


def test_compute_figure_eight(capsys):
    code, out, _ = run(capsys, "compute", "named:4_1")
    assert code == 0
    rep = json.loads(out)
    assert rep["F"]["value"] == "-sqrt5"
    assert rep["col5"] == 25
    assert rep["V"]["abs"] == 0
    assert rep["components"] == 1


def test_compute_trivial_three_component(capsys):
    rep = run_json(capsys, "compute", "braid:3:[]")
    assert rep["V"]["abs"] == pytest.approx(3.618034, abs=1e-6)
    assert rep["F"]["value"] == "5"
    assert rep["col5"] == 125


def test_compute_pretzel(capsys):
    rep = run_json(capsys, "compute", "pretzel:[2,2,2,1]")
    assert rep["F"]["value"] == "-sqrt5"
    assert rep["V"]["abs"] == pytest.approx(1.902113, abs=1e-6)


def test_compute_with_point_and_kauffman(capsys):
    rep = run_json(capsys, "compute", "named:4_1", "--point", "0,8", "--kauffman")
    assert "kauffman_F" in rep
    assert rep["F_set"]["point"] == {"a0_power": 0, "p0_power": 8}
    assert rep["F_set"]["exact"]


def test_exit_codes(capsys):
    code, _, err = run(capsys, "compute", "braid:3:[1,")
    assert code == 2 and err.startswith("fivemove:")
    code, _, _ = run(capsys, "compute", "braid:3:[1,2,1,2,1,2]", "--limit", "3")
    assert code == 3
    code, _, _ = run(capsys, "compute", "named:nope")
    assert code == 2
    code, _, _ = run(capsys, "compute", "named:9_49")
    assert code == 2
    code, _, _ = run(capsys, "reduce-montesinos", "braid:2:[1]")
    assert code == 2


def test_bad_point_is_rejected(capsys):
    with pytest.raises(SystemExit):
        main(["compute", "named:4_1", "--point", "x"])
    capsys.readouterr()


@pytest.mark.parametrize("a,b,expect", [
    ("named:8^3_10", "mirror(named:8^3_10)", "not-distinguished"),
    ("named:6^3_1", "mirror(named:6^3_1)", "distinguished"),
    ("named:3_1", "named:3_1", "not-distinguished"),
])
def test_compare(capsys, a, b, expect):
    out = run_json(capsys, "compare", a, b)
    assert out["verdict"] == expect
    back = run_json(capsys, "compare", b, a)
    assert back["verdict"] == expect
    assert back["by"] == out["by"]


def test_compare_plain_output(capsys):
    code, out, _ = run(capsys, "compare", "pretzel:[2,2,2]", "mirror(pretzel:[2,2,2])")
    assert code == 0
    assert out.strip() == "distinguished by JonesClass5"


def test_compare_reports_two_component_links():
    # T2 and the Hopf link differ in |V| but both have two components
    v = compare_reports(compute_report("named:T2"), compute_report("named:H"))
    assert v.distinguished
    assert "col5" in v.by


def test_table_only(capsys):
    code, out, _ = run(capsys, "table", "4.1", "--only", "39")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 1
    assert rows[0]["link"].startswith("8_18")
    assert {rows[0][k] for k in ("F_check", "V_check", "class5_check")} == {"PASS"}


def test_table_row_fields():
    (row,) = table41_rows(only=17)
    assert row["F"] == "-sqrt5"
    assert row["V_check"] == "PASS"


def test_density_values(capsys):
    rows = run_json(capsys, "density", "6")
    assert len(rows) == 49
    by_key = {(r["k1"], r["k2"]): r["V"] for r in rows}
    assert by_key[1, 0] == pytest.approx(1.90211, abs=1e-5)
    assert by_key[0, 1] == pytest.approx(0.618034, abs=1e-6)
    assert by_key[0, 0] == 1
    vals = [r["V"] for r in rows]
    assert vals == sorted(vals)


def test_density_csv(capsys):
    code, out, _ = run(capsys, "density", "2")
    assert code == 0
    assert out.splitlines()[0] == "k1,k2,V"
    assert len(out.splitlines()) == 10


def test_density_rejects_zero():
    with pytest.raises(ValueError):
        density(0)


def test_reduce_rational(capsys):
    out = run_json(capsys, "reduce-rational", "2/5")
    assert out == {"class12": "2/5", "link_class": "H", "denominator_link_class": "4_1"}
    out = run_json(capsys, "reduce-rational", "9/4")
    assert out["class12"] == "1/1"


def test_reduce_montesinos(capsys):
    out = run_json(capsys, "reduce-montesinos", "montesinos:[3/5,1/2,1/2]")
    assert out["class"] == {"type": "two-five", "k": 1, "m": 2}
    assert out["representative"] == "montesinos:[2/5,1/2,1/2]"
    assert out["report"]["col5"] > 0


def test_point_from_powers():
    a0, x0 = point_from_powers(0, 8)
    assert a0 == Cyclo40.one()
    assert x0.to_complex().real == pytest.approx(2 * math.cos(2 * math.pi / 5))
    with pytest.raises(ValueError):
        point_from_powers(0, 0)


def test_report_json_is_exact():
    rep = compute_report("named:H")
    data = rep.to_json()
    assert data["F"]["exact"] == rep.f_special.to_json()
    assert 5 * rep.f_float ** 2 == pytest.approx(rep.col5)
    assert data["class5"]["members"] == rep.class5.to_json()
