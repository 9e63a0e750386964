"""Command-line front end.

Subcommands ``validate``, ``decompose``, ``invest``, ``domar`` and
``report`` read a bundle directory and write CSV or JSON. Exit status is 0
on success, 1 on data or validation errors and 2 on usage or I/O errors.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import math
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .commodity_flow import (
    FLOWS_FILE,
    GFCF_FILE,
    IO_RATIOS_FILE,
    SOFTWARE_MESSAGE,
    estimate_investment,
    gfcf_shares,
    ict_share,
    load_flows,
    load_gfcf,
    load_io_ratios,
)
from .dataset import (
    CLASSIFICATION_FILE,
    SERIES_FILE,
    SHARES_FILE,
    TFP_FILE,
    AssetCategory,
    DataError,
    ValidationReport,
    load_bundle,
    validate,
)
from .domar import aggregate_series
from .growth_accounting import decompose_basic, decompose_detailed, ict_contribution

BUNDLE_FILES = (SERIES_FILE, SHARES_FILE, TFP_FILE, CLASSIFICATION_FILE,
                FLOWS_FILE, IO_RATIOS_FILE, GFCF_FILE)
DEFAULT_FORMAT = {"decompose": "json", "report": "json", "invest": "csv", "domar": "csv"}


class ValidationFailed(DataError):
    def __init__(self, reports: dict[str, ValidationReport]):
        self.reports = reports
        n = sum(len(r.errors) for r in reports.values())
        super().__init__(f"validation failed with {n} error(s)")


@dataclass(frozen=True)
class RunConfig:
    input_path: Path
    countries: tuple[str, ...] | None = None
    year_range: tuple[int, int] | None = None
    mode: str = "levels"
    output_path: Path | None = None
    format: str = "json"
    percent: bool = False
    classification: Path | None = None

    def __post_init__(self):
        if self.year_range is not None and self.year_range[0] > self.year_range[1]:
            raise ValueError(f"year range start {self.year_range[0]} > end {self.year_range[1]}")

    def years(self, available) -> list[int]:
        if self.year_range is None:
            return list(available)
        lo, hi = self.year_range
        return [y for y in available if lo <= y <= hi]

    def wants(self, country: str) -> bool:
        return self.countries is None or country in self.countries


# -- formatting ---------------------------------------------------------------


def format_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"cannot serialise non-finite value {x!r}")
    return format(x, ".17g")


def render_json(obj, indent: int = 2) -> str:
    """JSON with sorted keys and floats at 17 significant digits."""
    out = []

    def emit(value, depth):
        pad = " " * (indent * (depth + 1))
        end = " " * (indent * depth)
        if isinstance(value, bool) or value is None:
            out.append(json.dumps(value))
        elif isinstance(value, float):
            out.append(format_float(value))
        elif isinstance(value, (int, str)):
            out.append(json.dumps(value, ensure_ascii=False))
        elif isinstance(value, dict):
            if not value:
                out.append("{}")
                return
            out.append("{\n")
            for i, key in enumerate(sorted(value)):
                out.append(f"{pad}{json.dumps(str(key), ensure_ascii=False)}: ")
                emit(value[key], depth + 1)
                out.append(",\n" if i < len(value) - 1 else "\n")
            out.append(end + "}")
        elif isinstance(value, (list, tuple)):
            if not value:
                out.append("[]")
                return
            out.append("[\n")
            for i, item in enumerate(value):
                out.append(pad)
                emit(item, depth + 1)
                out.append(",\n" if i < len(value) - 1 else "\n")
            out.append(end + "]")
        else:
            raise TypeError(f"cannot serialise {type(value).__name__}")

    emit(obj, 0)
    return "".join(out) + "\n"


def render_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(
            [format_float(v) if isinstance(v, float) else
             ("true" if v is True else "false" if v is False else v) for v in row]
        )
    return buf.getvalue()


def write_output(text: str, path: Path | None) -> None:
    """Write ``text`` to ``path`` atomically, or to stdout without a path."""
    if path is None:
        sys.stdout.write(text)
        return
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent if str(path.parent) else ".",
                               prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def input_digests(bundle: Path) -> dict[str, str]:
    """SHA-256 of each bundle file.

    CSV files are hashed as header plus sorted data lines so that reordering
    rows, which never changes a result, does not change the digest either.
    """
    digests = {}
    for name in BUNDLE_FILES:
        path = bundle / name
        if not path.is_file():
            continue
        data = path.read_bytes()
        if name.endswith(".csv"):
            lines = [ln.strip() for ln in data.decode("utf-8-sig").splitlines()]
            lines = [ln for ln in lines if ln]
            data = "\n".join(lines[:1] + sorted(lines[1:])).encode("utf-8")
        digests[name] = hashlib.sha256(data).hexdigest()
    return digests


def _issues(report: ValidationReport) -> dict:
    return {"errors": [str(i) for i in report.errors],
            "warnings": [str(i) for i in report.warnings]}


def _header(command: str, config: RunConfig) -> dict:
    return {
        "command": command,
        "tool": "ictgrowth",
        "version": __version__,
        "inputs": input_digests(Path(config.input_path)),
        "units": "percent" if config.percent else "log-points",
    }


# -- shared loading -----------------------------------------------------------


def _datasets(config: RunConfig):
    datasets = load_bundle(config.input_path, config.classification)
    if config.countries is not None:
        missing = [c for c in config.countries if c not in datasets]
        if missing:
            raise DataError(f"country not in bundle: {', '.join(missing)}")
    return {c: d for c, d in datasets.items() if config.wants(c)}


def _valid_datasets(config: RunConfig):
    datasets = _datasets(config)
    reports = {c: d.validation for c, d in datasets.items()}
    if any(r.errors for r in reports.values()):
        raise ValidationFailed(reports)
    return datasets, reports


# -- commands -----------------------------------------------------------------


def cmd_validate(config: RunConfig, out=None) -> int:
    out = out or sys.stdout
    datasets = _datasets(config)
    bundle = Path(config.input_path)
    reports = {c: validate(d) for c, d in datasets.items()}
    # Optional files are parsed so format errors surface here too.
    if (bundle / FLOWS_FILE).is_file():
        load_flows(bundle / FLOWS_FILE)
    if (bundle / IO_RATIOS_FILE).is_file():
        load_io_ratios(bundle / IO_RATIOS_FILE)
    if (bundle / GFCF_FILE).is_file():
        load_gfcf(bundle / GFCF_FILE)

    n_err = n_warn = 0
    for country, report in reports.items():
        for issue in report.errors:
            print(f"error: {issue}", file=out)
        for issue in report.warnings:
            print(f"warning: {issue}", file=out)
        n_err += len(report.errors)
        n_warn += len(report.warnings)
    print(f"{n_err} errors, {n_warn} warnings", file=out)
    return 1 if n_err else 0


def decompose_report(config: RunConfig) -> dict:
    datasets, reports = _valid_datasets(config)
    scale = 100.0 if config.percent else 1.0
    basic, detailed, ict = [], [], []
    for country, ds in datasets.items():
        for t in config.years(ds.growth_years):
            b = decompose_basic(ds, t, config.mode)
            d = decompose_detailed(ds, t, config.mode)
            c = ict_contribution(ds, t)
            basic.append({
                "country": country, "year": t, "mode": b.mode,
                "output_growth": b.output_growth * scale,
                "capital_contribution": b.capital_contribution * scale,
                "labor_contribution": b.labor_contribution * scale,
                "tfp_residual": b.tfp_residual * scale,
            })
            detailed.append({
                "country": country, "year": t, "mode": d.mode,
                "output_growth": d.output_growth * scale,
                "ict_asset_contributions": {a.code: v * scale for a, v in d.ict_asset_contributions.items()},
                "non_ict_asset_contributions": {a.code: v * scale for a, v in d.non_ict_asset_contributions.items()},
                "labor_contribution": d.labor_contribution * scale,
                "tfp_residual": d.tfp_residual * scale,
            })
            ict.append({
                "country": country, "year": t,
                "asset_term": c.asset_term * scale,
                "producer_tfp_term": c.producer_tfp_term * scale,
                "total": c.total * scale,
            })
    report = _header("decompose", config)
    report.update(
        mode=config.mode,
        validation={c: _issues(r) for c, r in reports.items()},
        records={"basic": basic, "detailed": detailed, "ict": ict},
    )
    return report


def _decompose_csv(report: dict) -> str:
    rows = []
    for rec in report["records"]["basic"]:
        for key in ("output_growth", "capital_contribution", "labor_contribution", "tfp_residual"):
            rows.append((rec["country"], rec["year"], "basic", rec["mode"], key, rec[key]))
    for rec in report["records"]["detailed"]:
        rows.append((rec["country"], rec["year"], "detailed", rec["mode"], "output_growth", rec["output_growth"]))
        for table in ("ict_asset_contributions", "non_ict_asset_contributions"):
            for code, value in rec[table].items():
                rows.append((rec["country"], rec["year"], "detailed", rec["mode"], f"capital[{code}]", value))
        for key in ("labor_contribution", "tfp_residual"):
            rows.append((rec["country"], rec["year"], "detailed", rec["mode"], key, rec[key]))
    for rec in report["records"]["ict"]:
        for key in ("asset_term", "producer_tfp_term", "total"):
            rows.append((rec["country"], rec["year"], "ict", "levels", key, rec[key]))
    return render_csv(("country", "year", "record", "mode", "component", "value"), rows)


def cmd_decompose(config: RunConfig) -> dict:
    report = decompose_report(config)
    text = render_json(report) if config.format == "json" else _decompose_csv(report)
    write_output(text, config.output_path)
    return report


INVEST_COLUMNS = ("country", "asset", "year", "domestic_component", "import_component", "total")


def invest_rows(config: RunConfig, err=None):
    """InvestmentEstimate rows plus the list of software warnings."""
    err = err or sys.stderr
    bundle = Path(config.input_path)
    for name in (FLOWS_FILE, IO_RATIOS_FILE):
        if not (bundle / name).is_file():
            raise FileNotFoundError(f"input not found: {bundle / name}")
    table = load_flows(bundle / FLOWS_FILE)
    ratios = load_io_ratios(bundle / IO_RATIOS_FILE)

    warnings = []
    for country, year, line in table.software_rows:
        if config.wants(country):
            message = f"{FLOWS_FILE}:{line}: skipped SW row for {country} {year}: {SOFTWARE_MESSAGE}"
            warnings.append(message)
            print(f"warning: {message}", file=err)

    rows = []
    for (country, asset), flows in table.inputs.items():
        if not config.wants(country):
            continue
        try:
            ratio = ratios[(country, asset)]
        except KeyError:
            raise DataError(f"no I/O ratios for {country}/{asset.code}") from None
        for t in config.years(flows.by_year):
            est = estimate_investment(flows, ratio, t)
            rows.append((country, asset.code, t, est.domestic_component,
                         est.import_component, est.total))
    return rows, warnings


def cmd_invest(config: RunConfig, err=None) -> list:
    rows, warnings = invest_rows(config, err)
    if config.format == "json":
        doc = _header("invest", config)
        doc["units"] = "currency"
        doc.update(rows=[dict(zip(INVEST_COLUMNS, r)) for r in rows], warnings=warnings)
        text = render_json(doc)
    else:
        text = render_csv(INVEST_COLUMNS, rows)
    write_output(text, config.output_path)
    return rows


DOMAR_COLUMNS = ("country", "year", "aggregate_tfp", "ict_producer_contribution", "non_ict_contribution")
WEIGHT_COLUMNS = ("country", "year", "industry", "ict_producer", "weight", "tfp_growth", "contribution")


def domar_tables(config: RunConfig, err=None):
    err = err or sys.stderr
    bundle = Path(config.input_path)
    if not (bundle / TFP_FILE).is_file():
        raise FileNotFoundError(f"input not found: {bundle / TFP_FILE}")
    datasets, _ = _valid_datasets(config)
    scale = 100.0 if config.percent else 1.0
    rows, weights, warnings = [], [], []
    for country, ds in datasets.items():
        if not ds.industries:
            raise DataError(f"{country}: no industry gross output series")
        for res in aggregate_series(ds, config.years(ds.growth_years)):
            rows.append((country, res.year, res.aggregate * scale,
                         res.ict_producer_contribution * scale, res.non_ict_contribution * scale))
            for ind, w in res.weights.items():
                weights.append((country, res.year, ind, ind in ds.ict_producer_ids, w,
                                res.tfp[ind] * scale, res.contribution(ind) * scale))
            for message in res.warnings:
                warnings.append(f"{country}: {message}")
                print(f"warning: {country}: {message}", file=err)
    return rows, weights, warnings


def cmd_domar(config: RunConfig, err=None):
    rows, weights, warnings = domar_tables(config, err)
    if config.format == "json":
        doc = _header("domar", config)
        doc.update(rows=[dict(zip(DOMAR_COLUMNS, r)) for r in rows],
                   weights=[dict(zip(WEIGHT_COLUMNS, r)) for r in weights],
                   warnings=warnings)
        write_output(render_json(doc), config.output_path)
    else:
        main_text = render_csv(DOMAR_COLUMNS, rows)
        weight_text = render_csv(WEIGHT_COLUMNS, weights)
        if config.output_path is None:
            write_output(main_text + "\n" + weight_text, None)
        else:
            path = Path(config.output_path)
            write_output(weight_text, path.with_name(f"{path.stem}.weights{path.suffix or '.csv'}"))
            write_output(main_text, path)
    return rows, weights


def _mean(values):
    values = list(values)
    return math.fsum(values) / len(values) if values else None


def summary_report(config: RunConfig) -> dict:
    """Period-average tables in the spirit of the three published figures.

    Labor productivity is always decomposed per worker here, whatever
    ``config.mode`` says.
    """
    datasets, reports = _valid_datasets(config)
    bundle = Path(config.input_path)
    scale = 100.0 if config.percent else 1.0
    doc = _header("report", config)
    doc["validation"] = {c: _issues(r) for c, r in reports.items()}

    gfcf_rows = []
    if (bundle / GFCF_FILE).is_file():
        for (country, year), values in load_gfcf(bundle / GFCF_FILE).items():
            if not config.wants(country) or (config.year_range and not config.years([year])):
                continue
            entry = {"country": country, "year": year}
            for scope in ("total_non_residential", "total_equipment"):
                shares = gfcf_shares(values, scope)
                entry[scope] = {a.code: v * scale for a, v in shares.items()}
                entry[scope]["ICT"] = ict_share(shares) * scale
            gfcf_rows.append(entry)
    doc["gfcf_shares"] = gfcf_rows

    lp_rows, tfp_rows = [], []
    for country, ds in datasets.items():
        years = config.years(ds.growth_years)
        if not years:
            continue
        period = f"{years[0] - 1}-{years[-1]}"
        dets = [decompose_detailed(ds, t, "per_worker") for t in years]
        by_asset = {
            a.code: _mean(d.ict_asset_contributions.get(a, 0.0) for d in dets) * scale
            for a in AssetCategory if a.is_ict and any(a in d.ict_asset_contributions for d in dets)
        }
        lp_rows.append({
            "country": country, "period": period,
            "labor_productivity_growth": _mean(d.output_growth for d in dets) * scale,
            "ict_capital": _mean(d.ict_capital_contribution for d in dets) * scale,
            "ict_capital_by_asset": by_asset,
            "non_ict_capital": _mean(d.non_ict_capital_contribution for d in dets) * scale,
            "tfp": _mean(d.tfp_residual for d in dets) * scale,
        })
        if ds.industries and all(t in a.tfp_growth for a in ds.industries.values() for t in years):
            res = aggregate_series(ds, years)
            agg = _mean(r.aggregate for r in res)
            ict = _mean(r.ict_producer_contribution for r in res)
            tfp_rows.append({
                "country": country, "period": period,
                "aggregate_tfp": agg * scale,
                "ict_producers": ict * scale,
                "non_ict_producers": _mean(r.non_ict_contribution for r in res) * scale,
                "ict_producer_fraction": ict / agg if agg != 0 else None,
            })
    doc["labor_productivity"] = lp_rows
    doc["tfp_by_producer"] = tfp_rows
    return doc


def _summary_csv(doc: dict) -> str:
    rows = []
    for entry in doc["gfcf_shares"]:
        for scope in ("total_non_residential", "total_equipment"):
            for code, value in entry[scope].items():
                rows.append((f"gfcf_{scope}", entry["country"], str(entry["year"]), code, value))
    for entry in doc["labor_productivity"]:
        for key in ("labor_productivity_growth", "ict_capital", "non_ict_capital", "tfp"):
            rows.append(("labor_productivity", entry["country"], entry["period"], key, entry[key]))
        for code, value in entry["ict_capital_by_asset"].items():
            rows.append(("labor_productivity", entry["country"], entry["period"], f"ict_capital[{code}]", value))
    for entry in doc["tfp_by_producer"]:
        for key in ("aggregate_tfp", "ict_producers", "non_ict_producers", "ict_producer_fraction"):
            value = entry[key]
            rows.append(("tfp_by_producer", entry["country"], entry["period"], key,
                         "" if value is None else value))
    return render_csv(("table", "country", "period", "item", "value"), rows)


def cmd_report(config: RunConfig) -> dict:
    doc = summary_report(config)
    write_output(render_json(doc) if config.format == "json" else _summary_csv(doc), config.output_path)
    return doc


# -- argument parsing ---------------------------------------------------------


def _year_range(text: str) -> tuple[int, int]:
    try:
        if ":" in text:
            lo, hi = text.split(":", 1)
            bounds = (int(lo), int(hi))
        else:
            bounds = (int(text), int(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A:B, got {text!r}") from None
    if bounds[0] > bounds[1]:
        raise argparse.ArgumentTypeError(f"start {bounds[0]} is after end {bounds[1]}")
    return bounds


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, type=Path, metavar="DIR", help="bundle directory")
    common.add_argument("--output", type=Path, metavar="PATH", help="output file (default: stdout)")
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--countries", help="comma-separated country codes")
    common.add_argument("--years", type=_year_range, metavar="A:B", help="inclusive range of growth years")
    common.add_argument("--mode", choices=("levels", "per-worker"), default="levels")
    common.add_argument("--percent", action="store_true", help="render growth values ×100")
    common.add_argument("--classification", type=Path, metavar="FILE",
                        help=f"ICT-producer classification (default: {CLASSIFICATION_FILE} in the bundle)")

    parser = argparse.ArgumentParser(prog="ictgrowth", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common], help="check a bundle")
    sub.add_parser("decompose", parents=[common], help="growth decompositions per country and year")
    sub.add_parser("invest", parents=[common], help="commodity-flow investment estimates")
    sub.add_parser("domar", parents=[common], help="Domar-weighted aggregate TFP")
    sub.add_parser("report", parents=[common], help="period-average summary tables")
    return parser


def config_from_args(args) -> RunConfig:
    countries = None
    if args.countries:
        countries = tuple(c.strip() for c in args.countries.split(",") if c.strip())
    return RunConfig(
        input_path=args.input,
        countries=countries,
        year_range=args.years,
        mode=args.mode.replace("-", "_"),
        output_path=args.output,
        format=args.format or DEFAULT_FORMAT.get(args.command, "json"),
        percent=args.percent,
        classification=args.classification,
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = config_from_args(args)
    commands = {"validate": cmd_validate, "decompose": cmd_decompose, "invest": cmd_invest,
                "domar": cmd_domar, "report": cmd_report}
    try:
        result = commands[args.command](config)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValidationFailed as exc:
        for country, report in exc.reports.items():
            for issue in report.errors:
                print(f"error: {issue}", file=sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    raise SystemExit(main())
