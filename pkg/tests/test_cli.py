import csv
import io
import json
import random

import pytest

from ictgrowth.cli import main, render_json


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def shuffle_rows(path, seed=0):
    lines = path.read_text().splitlines(keepends=True)
    body = lines[1:]
    random.Random(seed).shuffle(body)
    path.write_text(lines[0] + "".join(body))


def rows_of(text):
    return list(csv.DictReader(io.StringIO(text)))


# -- validate -----------------------------------------------------------------


def test_validate_demo(capsys, demo_path):
    code, out, _ = run(capsys, "validate", "--input", demo_path)
    assert code == 0
    assert out.strip().endswith("0 errors, 0 warnings")


def test_validate_broken_share_sum(capsys, demo_copy):
    path = demo_copy / "shares.csv"
    path.write_text(path.read_text().replace("XB,1998,v_l,,,0.637", "XB,1998,v_l,,,0.537"))
    code, out, _ = run(capsys, "validate", "--input", demo_copy)
    assert code == 1
    errors = [ln for ln in out.splitlines() if ln.startswith("error:")]
    assert len(errors) == 1 and "XB/shares/1998" in errors[0] and "share sum" in errors[0]


def test_validate_missing_input(capsys, tmp_path):
    code, _, err = run(capsys, "validate", "--input", tmp_path / "nope")
    assert code == 2
    assert "input not found" in err


def test_validate_malformed_row(capsys, demo_copy):
    with open(demo_copy / "tfp.csv", "a") as fh:
        fh.write("XA,REST,2001,oops\n")
    code, _, err = run(capsys, "validate", "--input", demo_copy)
    assert code == 1
    assert "tfp.csv:" in err and "malformed tfp_growth" in err


# -- decompose ----------------------------------------------------------------


def test_decompose_adding_up(capsys, demo_path):
    code, out, _ = run(capsys, "decompose", "--input", demo_path)
    assert code == 0
    report = json.loads(out)
    basic = report["records"]["basic"]
    assert len(basic) == 10
    for rec in basic:
        parts = rec["capital_contribution"] + rec["labor_contribution"] + rec["tfp_residual"]
        assert parts == pytest.approx(rec["output_growth"], abs=1e-12)
    for rec in report["records"]["detailed"]:
        parts = (sum(rec["ict_asset_contributions"].values())
                 + sum(rec["non_ict_asset_contributions"].values())
                 + rec["labor_contribution"] + rec["tfp_residual"])
        assert parts == pytest.approx(rec["output_growth"], abs=1e-12)
    for rec in report["records"]["ict"]:
        assert rec["asset_term"] + rec["producer_tfp_term"] == pytest.approx(rec["total"], abs=1e-15)


def test_decompose_deterministic(capsys, demo_path, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "decompose", "--input", demo_path, "--output", a)[0] == 0
    assert run(capsys, "decompose", "--input", demo_path, "--output", b)[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_decompose_single_year(capsys, demo_path):
    code, out, _ = run(capsys, "decompose", "--input", demo_path, "--years", "1998:1998")
    assert code == 0
    records = json.loads(out)["records"]
    for kind in ("basic", "detailed", "ict"):
        assert sorted(r["country"] for r in records[kind]) == ["XA", "XB"]
        assert {r["year"] for r in records[kind]} == {1998}


def test_decompose_country_filter_and_mode(capsys, demo_path):
    code, out, _ = run(capsys, "decompose", "--input", demo_path, "--countries", "XB",
                       "--mode", "per-worker")
    assert code == 0
    report = json.loads(out)
    assert {r["country"] for r in report["records"]["basic"]} == {"XB"}
    assert all(r["mode"] == "per_worker" and r["labor_contribution"] == 0.0
               for r in report["records"]["basic"])


def test_decompose_percent(capsys, demo_path):
    _, plain, _ = run(capsys, "decompose", "--input", demo_path, "--years", "1999:1999")
    _, pct, _ = run(capsys, "decompose", "--input", demo_path, "--years", "1999:1999", "--percent")
    plain, pct = json.loads(plain), json.loads(pct)
    assert pct["units"] == "percent"
    for a, b in zip(plain["records"]["basic"], pct["records"]["basic"]):
        assert b["tfp_residual"] == pytest.approx(100 * a["tfp_residual"], rel=1e-15)


def test_decompose_csv(capsys, demo_path):
    code, out, _ = run(capsys, "decompose", "--input", demo_path, "--format", "csv",
                       "--countries", "XA", "--years", "2000:2000")
    assert code == 0
    rows = rows_of(out)
    assert {r["record"] for r in rows} == {"basic", "detailed", "ict"}
    detailed = {r["component"]: float(r["value"]) for r in rows if r["record"] == "detailed"}
    assert {"capital[OC]", "capital[NRS]", "tfp_residual"} <= set(detailed)


def test_decompose_aborts_on_invalid_bundle(capsys, demo_copy, tmp_path):
    path = demo_copy / "shares.csv"
    path.write_text(path.read_text().replace("XA,1996,v_k,,,0.342", "XA,1996,v_k,,,0.442"))
    target = tmp_path / "out.json"
    target.write_text("previous")
    code, out, err = run(capsys, "decompose", "--input", demo_copy, "--output", target)
    assert code == 1
    assert out == ""
    assert "XA/shares/1996" in err
    assert target.read_text() == "previous"
    assert list(tmp_path.glob(".out.json*")) == []


def test_decompose_unknown_country(capsys, demo_path):
    code, _, err = run(capsys, "decompose", "--input", demo_path, "--countries", "ZZ")
    assert code == 1 and "ZZ" in err


def test_bad_year_range_is_usage_error(capsys, demo_path):
    with pytest.raises(SystemExit) as info:
        main(["decompose", "--input", str(demo_path), "--years", "2000:1990"])
    assert info.value.code == 2


def test_order_independence(capsys, demo_path, demo_copy):
    for name in ("series.csv", "shares.csv", "tfp.csv", "flows.csv", "io_ratios.csv", "gfcf.csv"):
        shuffle_rows(demo_copy / name, seed=len(name))
    for command in ("decompose", "domar", "invest", "report"):
        _, original, _ = run(capsys, command, "--input", demo_path)
        _, shuffled, _ = run(capsys, command, "--input", demo_copy)
        assert original == shuffled, command


# -- invest -------------------------------------------------------------------


def test_invest_matches_rowwise_oracle(capsys, demo_path):
    code, out, _ = run(capsys, "invest", "--input", demo_path)
    assert code == 0
    with open(demo_path / "io_ratios.csv", newline="") as fh:
        ratios = {(r["country"], r["asset"]): r for r in csv.DictReader(fh)}
    with open(demo_path / "flows.csv", newline="") as fh:
        flows = {(r["country"], r["asset"], r["year"]): r for r in csv.DictReader(fh)}
    rows = rows_of(out)
    assert len(rows) == len(flows)
    for row in rows:
        f = flows[(row["country"], row["asset"], row["year"])]
        r = ratios[(row["country"], row["asset"])]
        expected = ((float(f["Q"]) - float(f["E_d"])) * float(r["domestic_ratio"])
                    + (float(f["M"]) - float(f["E_r"])) * float(r["import_ratio"]))
        assert float(row["total"]) == pytest.approx(expected, rel=1e-15)


def test_invest_empty_flows(capsys, demo_copy):
    (demo_copy / "flows.csv").write_text("country,asset,year,Q,E_d,M,E_r\n")
    code, out, _ = run(capsys, "invest", "--input", demo_copy)
    assert code == 0
    assert rows_of(out) == []


def test_invest_software_rows_warned(capsys, demo_copy):
    with open(demo_copy / "flows.csv", "a") as fh:
        fh.write("XA,SW,1996,5,1,5,1\nXA,SW,1997,5,1,5,1\nXB,SW,1996,5,1,5,1\n")
    code, out, err = run(capsys, "invest", "--input", demo_copy)
    assert code == 0
    warnings = [ln for ln in err.splitlines() if ln.startswith("warning:")]
    assert len(warnings) == 3
    assert all("not applicable to software" in w for w in warnings)
    assert not any(r["asset"] == "SW" for r in rows_of(out))


def test_invest_json(capsys, demo_path):
    code, out, _ = run(capsys, "invest", "--input", demo_path, "--format", "json", "--years", "1995:1995")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["rows"]) == 8 and doc["warnings"] == []


def test_invest_without_flows(capsys, demo_copy):
    (demo_copy / "flows.csv").unlink()
    code, _, err = run(capsys, "invest", "--input", demo_copy)
    assert code == 2 and "input not found" in err


# -- domar --------------------------------------------------------------------


def test_domar_partition(capsys, demo_path):
    code, out, _ = run(capsys, "domar", "--input", demo_path, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["rows"]) == 10
    for row in doc["rows"]:
        assert row["ict_producer_contribution"] + row["non_ict_contribution"] == pytest.approx(
            row["aggregate_tfp"], abs=1e-12)
    assert {w["industry"] for w in doc["weights"]} == {"C30T33", "REST"}


def _single_industry_bundle(root):
    root.mkdir()
    series = ["country,variable,asset,industry,year,value"]
    shares = ["country,year,share_kind,asset,industry,value"]
    tfp = ["country,industry,year,tfp_growth"]
    for i, year in enumerate(range(2001, 2005)):
        gdp = 100.0 * 1.02 ** i
        series += [f"ZZ,output,,,{year},{gdp!r}", f"ZZ,labor,,,{year},10",
                   f"ZZ,capital_total,,,{year},{300 + i}", f"ZZ,gross_output,,ALL,{year},{gdp!r}"]
        shares += [f"ZZ,{year},v_k,,,0.3", f"ZZ,{year},v_l,,,0.7"]
        if i:
            tfp.append(f"ZZ,ALL,{year},{0.01 * i}")
    for name, lines in (("series.csv", series), ("shares.csv", shares), ("tfp.csv", tfp)):
        (root / name).write_text("\n".join(lines) + "\n")
    return root


def test_domar_single_industry(capsys, tmp_path):
    bundle = _single_industry_bundle(tmp_path / "one")
    code, out, _ = run(capsys, "domar", "--input", bundle)
    assert code == 0
    rows = rows_of(out.split("\n\n")[0])
    assert [float(r["aggregate_tfp"]) for r in rows] == pytest.approx([0.01, 0.02, 0.03], abs=1e-15)


def test_domar_writes_weights_table(capsys, demo_path, tmp_path):
    target = tmp_path / "tfp.csv"
    assert run(capsys, "domar", "--input", demo_path, "--output", target)[0] == 0
    weights = rows_of((tmp_path / "tfp.weights.csv").read_text())
    assert len(rows_of(target.read_text())) == 10 and len(weights) == 20


def test_domar_missing_gdp(capsys, demo_copy):
    path = demo_copy / "series.csv"
    path.write_text("".join(ln for ln in path.read_text().splitlines(keepends=True)
                            if ",output," not in ln))
    code, _, err = run(capsys, "domar", "--input", demo_copy)
    assert code == 1 and "missing series output" in err


# -- report and JSON rendering ------------------------------------------------


def test_report(capsys, demo_path):
    code, out, _ = run(capsys, "report", "--input", demo_path)
    assert code == 0
    doc = json.loads(out)
    xa = next(g for g in doc["gfcf_shares"] if g["country"] == "XA")
    assert xa["total_non_residential"]["ICT"] == pytest.approx(0.171, abs=1e-12)
    assert "NRS" not in xa["total_equipment"]
    for row in doc["labor_productivity"]:
        parts = row["ict_capital"] + row["non_ict_capital"] + row["tfp"]
        assert parts == pytest.approx(row["labor_productivity_growth"], abs=1e-12)
    for row in doc["tfp_by_producer"]:
        assert row["ict_producers"] + row["non_ict_producers"] == pytest.approx(row["aggregate_tfp"], abs=1e-12)


def test_render_json_round_trips():
    doc = {"b": [1, 2.5, None, True], "a": {"y": 0.1, "x": "é"}, "c": []}
    text = render_json(doc)
    assert json.loads(text) == doc
    assert text.index('"a"') < text.index('"b"')
    assert "0.10000000000000001" in text


def test_render_json_rejects_nan():
    with pytest.raises(ValueError):
        render_json({"x": float("nan")})
