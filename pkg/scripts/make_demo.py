"""Regenerate the demo bundle under src/ictgrowth/data/demo.

The numbers are made up. Shares are written as short decimals that close
exactly; capital_total is the Tornqvist aggregate of the asset series so
the basic and detailed decompositions agree on the demo.
"""

import csv
import math
from decimal import Decimal
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "ictgrowth" / "data" / "demo"
YEARS = range(1995, 2001)
ASSETS = ("OC", "CM", "SW", "OE", "TR", "NRS")
ICT = ("OC", "CM", "SW")

COUNTRIES = {
    "XA": dict(
        y0=400000.0, gy=(0.031, 0.028, 0.034, 0.037, 0.041),
        l0=100.0, gl=(0.008, 0.010, 0.012, 0.011, 0.009),
        k0={"OC": 6000.0, "CM": 4000.0, "SW": 5000.0, "OE": 60000.0, "TR": 20000.0, "NRS": 150000.0},
        gk={"OC": 0.24, "CM": 0.12, "SW": 0.15, "OE": 0.030, "TR": 0.025, "NRS": 0.018},
        v_k0="0.340", dv_k="0.002",
        asset0={"OC": "0.030", "CM": "0.015", "SW": "0.020", "OE": "0.110", "TR": "0.045"},
        dasset={"OC": "0.001", "CM": "0.0005", "SW": "0.0005"},
        ict_go=(0.050, 0.053, 0.057, 0.061, 0.066, 0.070), rest_go=0.96,
        tfp_ict=(0.095, 0.104, 0.112, 0.120, 0.117), tfp_rest=(0.004, 0.005, 0.007, 0.008, 0.006),
        u_c=("0.020", "0.021", "0.022", "0.024", "0.025", "0.026"),
        gfcf={"OC": "5", "CM": "5", "SW": "7.1", "OE": "40", "TR": "15", "NRS": "27.9"},
    ),
    "XB": dict(
        y0=250000.0, gy=(0.022, 0.025, 0.021, 0.027, 0.030),
        l0=80.0, gl=(0.004, 0.006, 0.007, 0.005, 0.006),
        k0={"OC": 3000.0, "CM": 2500.0, "SW": 4000.0, "OE": 45000.0, "TR": 15000.0, "NRS": 110000.0},
        gk={"OC": 0.19, "CM": 0.10, "SW": 0.13, "OE": 0.025, "TR": 0.020, "NRS": 0.015},
        v_k0="0.360", dv_k="0.001",
        asset0={"OC": "0.020", "CM": "0.012", "SW": "0.025", "OE": "0.120", "TR": "0.050"},
        dasset={"OC": "0.0005", "SW": "0.0005"},
        ict_go=(0.030, 0.032, 0.033, 0.035, 0.036, 0.038), rest_go=0.97,
        tfp_ict=(0.070, 0.075, 0.082, 0.088, 0.090), tfp_rest=(0.003, 0.002, 0.004, 0.005, 0.004),
        u_c=None,
        gfcf={"OC": "3.5", "CM": "4", "SW": "8.5", "OE": "38", "TR": "16", "NRS": "30"},
    ),
}

# Per-row flows: Q, E_d, M, E_r in the first year, and a common growth factor.
FLOWS = {
    "XA": {"OC": (9000, 6500, 14000, 3000), "CM": (7000, 4000, 6000, 1500),
           "OE": (52000, 30000, 28000, 4000), "TR": (30000, 18000, 12000, 2500)},
    "XB": {"OC": (2000, 1200, 7000, 1000), "CM": (5000, 3500, 3000, 400),
           "OE": (40000, 22000, 20000, 3000), "TR": (21000, 12000, 9000, 1500)},
}
RATIOS = {
    "XA": {"OC": ("0.62", "0.55"), "CM": ("0.48", "0.41"), "OE": ("0.35", "0.30"), "TR": ("0.28", "0.33")},
    "XB": {"OC": ("0.58", "0.60"), "CM": ("0.45", "0.44"), "OE": ("0.33", "0.31"), "TR": ("0.30", "0.29")},
}


def fmt(x):
    return f"{x:.6f}"


def shares_for(spec, i):
    v_k = Decimal(spec["v_k0"]) + i * Decimal(spec["dv_k"])
    assets = {a: Decimal(v) + i * Decimal(spec["dasset"].get(a, "0")) for a, v in spec["asset0"].items()}
    assets["NRS"] = v_k - sum(assets.values())
    return v_k, 1 - v_k, assets


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    series, shares, tfp, flows, ratios, gfcf = [], [], [], [], [], []
    for country, spec in COUNTRIES.items():
        y, l = spec["y0"], spec["l0"]
        k = dict(spec["k0"])
        k_total = sum(k.values())
        prev_shares = None
        for i, year in enumerate(YEARS):
            v_k, v_l, assets = shares_for(spec, i)
            if i:
                y *= math.exp(spec["gy"][i - 1])
                l *= math.exp(spec["gl"][i - 1])
                growth = {}
                for a in ASSETS:
                    new = k[a] * math.exp(spec["gk"][a] * (1 + 0.05 * (i - 2)))
                    growth[a] = math.log(new / k[a])
                    k[a] = new
                pv_k, _, passets = prev_shares
                bar_k = float(v_k + pv_k) / 2
                d_k = sum(float(assets[a] + passets[a]) / 2 * growth[a] for a in ASSETS) / bar_k
                k_total *= math.exp(d_k)
            prev_shares = (v_k, v_l, assets)
            series.append((country, "output", "", "", year, fmt(y)))
            series.append((country, "labor", "", "", year, fmt(l)))
            series.append((country, "capital_total", "", "", year, fmt(k_total)))
            for a in ASSETS:
                series.append((country, "capital_asset", a, "", year, fmt(k[a])))
            series.append((country, "gross_output", "", "C30T33", year, fmt(y * spec["ict_go"][i])))
            series.append((country, "gross_output", "", "REST", year, fmt(y * spec["rest_go"])))
            shares.append((country, year, "v_k", "", "", str(v_k)))
            shares.append((country, year, "v_l", "", "", str(v_l)))
            for a in ASSETS:
                kind = "v_c" if a in ICT else "v_n"
                shares.append((country, year, kind, a, "", str(assets[a])))
            if spec["u_c"]:
                shares.append((country, year, "u_c", "", "C30T33", spec["u_c"][i]))
            if i:
                tfp.append((country, "C30T33", year, str(spec["tfp_ict"][i - 1])))
                tfp.append((country, "REST", year, str(spec["tfp_rest"][i - 1])))
            for a, base in FLOWS[country].items():
                scale = (1.06 if a in ICT else 1.02) ** i
                flows.append((country, a, year, *(fmt(v * scale) for v in base)))
        for a, (dom, imp) in RATIOS[country].items():
            ratios.append((country, a, dom, imp, 1995))
        for a in ASSETS:
            gfcf.append((country, 2000, a, spec["gfcf"][a]))

    def write(name, header, rows):
        with open(OUT / name, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(header)
            w.writerows(rows)

    write("series.csv", ("country", "variable", "asset", "industry", "year", "value"), series)
    write("shares.csv", ("country", "year", "share_kind", "asset", "industry", "value"), shares)
    write("tfp.csv", ("country", "industry", "year", "tfp_growth"), tfp)
    write("flows.csv", ("country", "asset", "year", "Q", "E_d", "M", "E_r"), flows)
    write("io_ratios.csv", ("country", "asset", "domestic_ratio", "import_ratio", "io_reference_year"), ratios)
    write("gfcf.csv", ("country", "year", "asset", "value"), gfcf)
    (OUT / "classification.ini").write_text(
        "[labor]\nunit = hours worked\n\n"
        "[industries]\n"
        "# office machinery, communication equipment, semiconductors\n"
        "C30T33 = true\n"
        "REST = false\n",
        encoding="utf-8",
    )


if __name__ == "__main__":
    main()
