"""Data model, bundle loader, validation and the shared growth primitives.

A bundle is a directory of CSV files (``series.csv``, ``shares.csv``,
optionally ``tfp.csv``) plus an optional ``classification.ini`` that marks
industries as ICT producers. Everything loaded here is immutable; the
arithmetic modules only read from it.

Growth rates are log differences and every barred share is the arithmetic
mean of the share in the current and the previous year.
"""

from __future__ import annotations

import configparser
import csv
import enum
import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from types import MappingProxyType

SHARE_TOLERANCE = 1e-6

SERIES_FILE = "series.csv"
SHARES_FILE = "shares.csv"
TFP_FILE = "tfp.csv"
CLASSIFICATION_FILE = "classification.ini"

SERIES_COLUMNS = ("country", "variable", "asset", "industry", "year", "value")
SHARES_COLUMNS = ("country", "year", "share_kind", "asset", "industry", "value")
TFP_COLUMNS = ("country", "industry", "year", "tfp_growth")

SERIES_VARIABLES = ("output", "labor", "capital_total", "capital_asset", "gross_output")
SHARE_KINDS = ("v_k", "v_l", "v_c", "v_n", "u_c")


class DataError(ValueError):
    """Input data that cannot be used as given."""


class BundleFormatError(DataError):
    """A bundle file is structurally malformed."""

    def __init__(self, path, line, message):
        self.path = Path(path)
        self.line = line
        where = f"{self.path.name}:{line}" if line else self.path.name
        super().__init__(f"{where}: {message}")


class SeriesGapError(DataError):
    pass


class InvalidDatasetError(DataError):
    """Raised by the arithmetic modules when a dataset fails validation."""

    def __init__(self, report: ValidationReport):
        self.report = report
        first = report.errors[0]
        more = f" (+{len(report.errors) - 1} more)" if len(report.errors) > 1 else ""
        super().__init__(f"dataset is invalid: {first}{more}")


class AssetCategory(enum.Enum):
    OFFICE_COMPUTER = "OC"
    COMMUNICATION = "CM"
    SOFTWARE = "SW"
    OTHER_EQUIPMENT = "OE"
    TRANSPORT = "TR"
    NON_RESIDENTIAL_STRUCTURES = "NRS"

    @property
    def code(self) -> str:
        return self.value

    @property
    def is_ict(self) -> bool:
        return self in _ICT_ASSETS

    @property
    def commodity_flow_eligible(self) -> bool:
        # Software has no physical commodity flow to trace.
        return self is not AssetCategory.SOFTWARE

    @property
    def label(self) -> str:
        return _LABELS[self]

    @classmethod
    def from_code(cls, code: str) -> AssetCategory:
        try:
            return cls(code.strip().upper())
        except ValueError:
            raise DataError(f"unknown asset code {code!r}") from None


_ICT_ASSETS = frozenset(
    {AssetCategory.OFFICE_COMPUTER, AssetCategory.COMMUNICATION, AssetCategory.SOFTWARE}
)
_LABELS = {
    AssetCategory.OFFICE_COMPUTER: "Office and computer equipment",
    AssetCategory.COMMUNICATION: "Communication equipment",
    AssetCategory.SOFTWARE: "Software",
    AssetCategory.OTHER_EQUIPMENT: "Other non-ICT equipment",
    AssetCategory.TRANSPORT: "Transport equipment",
    AssetCategory.NON_RESIDENTIAL_STRUCTURES: "Non-residential structures",
}

ICT_ASSETS = tuple(a for a in AssetCategory if a.is_ict)
NON_ICT_ASSETS = tuple(a for a in AssetCategory if not a.is_ict)


@dataclass(frozen=True)
class AnnualSeries:
    """Values indexed by a contiguous run of years."""

    values: Mapping[int, float]
    name: str = "series"

    def __post_init__(self):
        values = {int(y): float(v) for y, v in sorted(self.values.items())}
        if values:
            first, last = min(values), max(values)
            for year in range(first, last + 1):
                if year not in values:
                    raise SeriesGapError(f"gap in series {self.name} at {year}")
        object.__setattr__(self, "values", MappingProxyType(values))

    def __getitem__(self, year: int) -> float:
        return self.values[year]

    def __contains__(self, year) -> bool:
        return year in self.values

    def __len__(self) -> int:
        return len(self.values)

    @property
    def years(self) -> range:
        if not self.values:
            return range(0)
        return range(min(self.values), max(self.values) + 1)

    def scaled(self, factor: float) -> AnnualSeries:
        return AnnualSeries({y: v * factor for y, v in self.values.items()}, self.name)


@dataclass(frozen=True)
class YearShares:
    """Input shares observed for one year."""

    v_k: float
    v_l: float
    v_c: Mapping[AssetCategory, float] = field(default_factory=dict)
    v_n: Mapping[AssetCategory, float] = field(default_factory=dict)
    u_c: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        for name in ("v_c", "v_n", "u_c"):
            object.__setattr__(self, name, MappingProxyType(dict(getattr(self, name))))

    def asset_share(self, asset: AssetCategory) -> float | None:
        table = self.v_c if asset.is_ict else self.v_n
        return table.get(asset)

    @property
    def asset_total(self) -> float:
        return math.fsum(self.v_c.values()) + math.fsum(self.v_n.values())


@dataclass(frozen=True)
class InputShares:
    by_year: Mapping[int, YearShares]

    def __post_init__(self):
        object.__setattr__(self, "by_year", MappingProxyType(dict(sorted(self.by_year.items()))))

    def __getitem__(self, year: int) -> YearShares:
        return self.by_year[year]

    def __contains__(self, year) -> bool:
        return year in self.by_year

    @property
    def years(self) -> tuple[int, ...]:
        return tuple(self.by_year)


@dataclass(frozen=True)
class IndustryAccount:
    industry_id: str
    gross_output: AnnualSeries
    tfp_growth: Mapping[int, float] = field(default_factory=dict)

    def __post_init__(self):
        tfp = {int(y): float(v) for y, v in sorted(self.tfp_growth.items())}
        object.__setattr__(self, "tfp_growth", MappingProxyType(tfp))


@dataclass(frozen=True)
class EconomyDataset:
    """All series for one country.

    ``output`` is gross value added at constant prices and doubles as the GDP
    denominator of the Domar weights.
    """

    country: str
    output: AnnualSeries
    labor: AnnualSeries
    capital_total: AnnualSeries
    capital_by_asset: Mapping[AssetCategory, AnnualSeries]
    shares: InputShares
    industries: Mapping[str, IndustryAccount] = field(default_factory=dict)
    ict_producer_ids: frozenset[str] = frozenset()
    labor_unit: str = ""

    def __post_init__(self):
        object.__setattr__(
            self, "capital_by_asset", MappingProxyType(dict(self.capital_by_asset))
        )
        object.__setattr__(
            self, "industries", MappingProxyType(dict(sorted(self.industries.items())))
        )
        object.__setattr__(self, "ict_producer_ids", frozenset(self.ict_producer_ids))

    @property
    def years(self) -> range:
        return self.output.years

    @property
    def growth_years(self) -> range:
        """Years t for which t and t-1 are both observed."""
        years = self.years
        return range(years.start + 1, years.stop) if len(years) > 1 else range(0)

    @cached_property
    def validation(self) -> ValidationReport:
        return validate(self)

    def require_valid(self) -> None:
        if self.validation.errors:
            raise InvalidDatasetError(self.validation)


@dataclass(frozen=True)
class Issue:
    location: str
    rule: str
    observed: object = None

    def __str__(self):
        if self.observed is None:
            return f"{self.location}: {self.rule}"
        return f"{self.location}: {self.rule} (observed {self.observed!r})"


@dataclass
class ValidationReport:
    errors: list[Issue] = field(default_factory=list)
    warnings: list[Issue] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def error(self, location, rule, observed=None):
        self.errors.append(Issue(location, rule, observed))

    def warn(self, location, rule, observed=None):
        self.warnings.append(Issue(location, rule, observed))

    def summary(self) -> str:
        return f"{len(self.errors)} errors, {len(self.warnings)} warnings"


def growth_rate(series: AnnualSeries, t: int) -> float:
    """Log growth of ``series`` from ``t - 1`` to ``t``."""
    for year in (t - 1, t):
        if year not in series:
            raise DataError(f"year {year} absent from series {series.name}")
    now, before = series[t], series[t - 1]
    if now <= 0 or before <= 0:
        bad_year, bad = (t, now) if now <= 0 else (t - 1, before)
        raise DataError(f"non-positive value {bad!r} in series {series.name} at {bad_year}")
    return math.log(now / before)


def two_period_share(share_t: float, share_prev: float) -> float:
    if not (math.isfinite(share_t) and math.isfinite(share_prev)):
        raise DataError(f"non-finite share ({share_t!r}, {share_prev!r})")
    if share_t < 0 or share_prev < 0:
        raise DataError(f"negative share ({share_t!r}, {share_prev!r})")
    return 0.5 * (share_t + share_prev)


# -- validation ---------------------------------------------------------------


def validate(dataset: EconomyDataset) -> ValidationReport:
    """Check every data invariant; violations are collected, never raised."""
    report = ValidationReport()
    c = dataset.country

    named = [("output", dataset.output), ("labor", dataset.labor),
             ("capital_total", dataset.capital_total)]
    named += [(f"capital_asset[{a.code}]", s)
              for a, s in sorted(dataset.capital_by_asset.items(), key=lambda kv: kv[0].code)]
    named += [(f"gross_output[{i}]", acct.gross_output)
              for i, acct in dataset.industries.items()]

    reference = dataset.output.years
    if len(reference) == 0:
        report.error(f"{c}/output", "no observations")
    for name, series in named:
        for year, value in series.values.items():
            if not math.isfinite(value) or value <= 0:
                report.error(f"{c}/{name}/{year}", "value must be strictly positive", value)
        if series.years != reference:
            report.error(
                f"{c}/{name}",
                f"year range differs from output ({_span(reference)})",
                _span(series.years),
            )

    shares = dataset.shares
    for year in reference:
        if year not in shares:
            report.error(f"{c}/shares/{year}", "no shares for year")
    for year, ys in shares.by_year.items():
        _check_year_shares(report, dataset, year, ys)

    for asset in sorted({a for ys in shares.by_year.values() for a in (*ys.v_c, *ys.v_n)},
                        key=lambda a: a.code):
        if asset not in dataset.capital_by_asset:
            report.error(f"{c}/capital_asset[{asset.code}]",
                         "asset has a share but no capital service series")

    for ind in sorted(dataset.ict_producer_ids - set(dataset.industries)):
        report.error(f"{c}/industries/{ind}", "ICT producer id has no industry account")
    for ind in sorted({i for ys in shares.by_year.values() for i in ys.u_c}):
        if ind not in dataset.industries:
            report.error(f"{c}/shares/u_c[{ind}]", "output share for unknown industry")
        elif ind not in dataset.ict_producer_ids:
            report.warn(f"{c}/shares/u_c[{ind}]", "output share given for a non-ICT-producing industry")

    for ind, acct in dataset.industries.items():
        for year, value in acct.tfp_growth.items():
            if not math.isfinite(value):
                report.error(f"{c}/tfp[{ind}]/{year}", "non-finite TFP growth", value)
        for year in acct.gross_output.years:
            if year - 1 not in acct.gross_output or year not in dataset.output or year - 1 not in dataset.output:
                continue
            gdp, gdp_prev = dataset.output[year], dataset.output[year - 1]
            if gdp <= 0 or gdp_prev <= 0:
                continue
            weight = 0.5 * (acct.gross_output[year] / gdp + acct.gross_output[year - 1] / gdp_prev)
            if weight > 1.0:
                report.warn(f"{c}/gross_output[{ind}]/{year}",
                            "Domar weight above 1 (very high production share)", weight)
    return report


def _check_year_shares(report, dataset, year, ys):
    loc = f"{dataset.country}/shares/{year}"
    for name in ("v_k", "v_l"):
        value = getattr(ys, name)
        if not math.isfinite(value) or not 0.0 <= value <= 1.0:
            report.error(f"{loc}/{name}", "share outside [0, 1]", value)
    for table, name, want_ict in ((ys.v_c, "v_c", True), (ys.v_n, "v_n", False)):
        for asset, value in table.items():
            if asset.is_ict != want_ict:
                kind = "ICT" if asset.is_ict else "non-ICT"
                report.error(f"{loc}/{name}[{asset.code}]", f"{kind} asset filed under {name}")
            if not math.isfinite(value) or not 0.0 <= value <= 1.0:
                report.error(f"{loc}/{name}[{asset.code}]", "share outside [0, 1]", value)
    for ind, value in ys.u_c.items():
        if not math.isfinite(value) or value < 0:
            report.error(f"{loc}/u_c[{ind}]", "negative output share", value)

    total = ys.v_k + ys.v_l
    if abs(total - 1.0) > SHARE_TOLERANCE:
        report.error(loc, f"share sum {total:.6g} ≠ 1 (v_k + v_l)", total)
    if ys.v_c or ys.v_n:
        assets = ys.asset_total
        if abs(assets - ys.v_k) > SHARE_TOLERANCE:
            report.error(loc, f"asset share sum {assets:.6g} ≠ v_k {ys.v_k:.6g}", assets)
    else:
        report.warn(loc, "no asset shares; detailed decomposition unavailable")


def _span(years: range) -> str:
    if len(years) == 0:
        return "empty"
    return f"{years.start}-{years.stop - 1}"


# -- share renormalisation ----------------------------------------------------


def normalize_shares(ys: YearShares, tol: float = SHARE_TOLERANCE) -> YearShares:
    """Absorb rounding noise in published shares.

    v_k and v_l are rescaled to sum to one, then the asset shares to sum to
    v_k, but only when the miss is within ``tol``; larger misses are left for
    :func:`validate` to report.
    """
    v_k, v_l = ys.v_k, ys.v_l
    total = v_k + v_l
    if total > 0 and 0 < abs(total - 1.0) <= tol:
        v_k, v_l = v_k / total, v_l / total
    v_c, v_n = dict(ys.v_c), dict(ys.v_n)
    assets = math.fsum(v_c.values()) + math.fsum(v_n.values())
    if assets > 0 and 0 < abs(assets - v_k) <= tol:
        scale = v_k / assets
        v_c = {a: v * scale for a, v in v_c.items()}
        v_n = {a: v * scale for a, v in v_n.items()}
    return YearShares(v_k, v_l, v_c, v_n, ys.u_c)


# -- bundle loading -----------------------------------------------------------


def read_table(path: Path, columns: tuple[str, ...]):
    """Yield ``(line_number, row)`` from a CSV whose header must equal ``columns``."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise BundleFormatError(path, 0, "no observations") from None
        header = [h.strip() for h in header]
        if header and header[0].startswith("﻿"):
            header[0] = header[0][1:]
        unknown = [h for h in header if h not in columns]
        missing = [h for h in columns if h not in header]
        if unknown:
            raise BundleFormatError(path, 1, f"unknown column(s) {', '.join(unknown)}")
        if missing:
            raise BundleFormatError(path, 1, f"missing column(s) {', '.join(missing)}")
        if len(set(header)) != len(header):
            raise BundleFormatError(path, 1, "duplicate column names")
        for row in reader:
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(header):
                raise BundleFormatError(
                    path, reader.line_num, f"expected {len(header)} fields, got {len(row)}"
                )
            yield reader.line_num, {h: cell.strip() for h, cell in zip(header, row)}


def parse_year(path, line, text) -> int:
    try:
        return int(text)
    except ValueError:
        raise BundleFormatError(path, line, f"malformed year {text!r}") from None


def parse_number(path, line, text, what="value") -> float:
    try:
        value = float(text)
    except ValueError:
        raise BundleFormatError(path, line, f"malformed {what} {text!r}") from None
    if not math.isfinite(value):
        raise BundleFormatError(path, line, f"non-finite {what} {text!r}")
    return value


def parse_asset(path, line, text) -> AssetCategory:
    try:
        return AssetCategory.from_code(text)
    except DataError as exc:
        raise BundleFormatError(path, line, str(exc)) from None


@dataclass(frozen=True)
class Classification:
    ict_producers: frozenset[str] = frozenset()
    classified: frozenset[str] = frozenset()
    labor_unit: str = ""


def load_classification(path) -> Classification:
    """Read the ``[industries]`` and ``[labor]`` sections of an INI file.

    ``[industries]`` maps industry id to a boolean ICT-producer flag.
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"input not found: {path}")
    parser = configparser.ConfigParser(delimiters=("=",), interpolation=None)
    parser.optionxform = str
    try:
        parser.read(path, encoding="utf-8")
    except configparser.Error as exc:
        raise BundleFormatError(path, getattr(exc, "lineno", 0), str(exc).splitlines()[0]) from None
    unknown = set(parser.sections()) - {"industries", "labor"}
    if unknown:
        raise BundleFormatError(path, 0, f"unknown section(s) {', '.join(sorted(unknown))}")
    producers, classified = set(), set()
    if parser.has_section("industries"):
        for industry, flag in parser.items("industries"):
            try:
                is_producer = parser.getboolean("industries", industry)
            except ValueError:
                raise BundleFormatError(
                    path, 0, f"ict_producer flag for {industry} must be true or false, got {flag!r}"
                ) from None
            classified.add(industry)
            if is_producer:
                producers.add(industry)
    unit = parser.get("labor", "unit", fallback="")
    return Classification(frozenset(producers), frozenset(classified), unit)


def _coerce_classification(config, bundle: Path) -> Classification:
    if config is None:
        default = bundle / CLASSIFICATION_FILE
        return load_classification(default) if default.is_file() else Classification()
    if isinstance(config, Classification):
        return config
    if isinstance(config, Mapping):
        flags = {str(k): bool(v) for k, v in config.items()}
        return Classification(frozenset(k for k, v in flags.items() if v), frozenset(flags))
    return load_classification(config)


def load_bundle(path, config=None) -> dict[str, EconomyDataset]:
    """Load every country in a bundle directory.

    ``config`` is a classification file path, a mapping of industry id to
    ICT-producer flag, or ``None`` to use ``classification.ini`` in the
    bundle when present.
    """
    bundle = Path(path)
    if not bundle.is_dir():
        raise FileNotFoundError(f"input not found: {bundle}")
    series_path = bundle / SERIES_FILE
    shares_path = bundle / SHARES_FILE
    for required in (series_path, shares_path):
        if not required.is_file():
            raise FileNotFoundError(f"input not found: {required}")
    classification = _coerce_classification(config, bundle)

    raw_series = _read_series(series_path)
    raw_shares = _read_shares(shares_path)
    tfp_path = bundle / TFP_FILE
    raw_tfp = _read_tfp(tfp_path) if tfp_path.is_file() else {}

    datasets = {}
    for country in sorted(raw_series):
        datasets[country] = _assemble(
            country, raw_series[country], raw_shares.get(country, {}),
            raw_tfp.get(country, {}), classification, series_path,
        )
    extra = sorted((set(raw_shares) | set(raw_tfp)) - set(raw_series))
    if extra:
        raise DataError(f"countries {', '.join(extra)} have shares or TFP but no series")
    return datasets


def load_economy(path, config=None, country: str | None = None) -> EconomyDataset:
    datasets = load_bundle(path, config)
    if country is None:
        if len(datasets) != 1:
            raise DataError(
                f"bundle holds {len(datasets)} countries ({', '.join(datasets)}); pass country="
            )
        return next(iter(datasets.values()))
    try:
        return datasets[country]
    except KeyError:
        raise DataError(f"country {country!r} not in bundle") from None


def _read_series(path):
    cells: dict[str, dict[tuple, dict[int, float]]] = {}
    seen = {}
    for line, row in read_table(path, SERIES_COLUMNS):
        variable = row["variable"]
        if variable not in SERIES_VARIABLES:
            raise BundleFormatError(path, line, f"unknown variable {variable!r}")
        asset, industry = row["asset"], row["industry"]
        if variable == "capital_asset":
            if not asset:
                raise BundleFormatError(path, line, "capital_asset row without asset code")
            key_detail = parse_asset(path, line, asset)
        elif asset:
            raise BundleFormatError(path, line, f"asset given for variable {variable}")
        else:
            key_detail = None
        if variable == "gross_output":
            if not industry:
                raise BundleFormatError(path, line, "gross_output row without industry")
            key_detail = industry
        elif industry:
            raise BundleFormatError(path, line, f"industry given for variable {variable}")
        country = row["country"]
        if not country:
            raise BundleFormatError(path, line, "empty country")
        year = parse_year(path, line, row["year"])
        value = parse_number(path, line, row["value"])
        key = (variable, key_detail)
        cell = (country, key, year)
        if cell in seen:
            raise BundleFormatError(
                path, line, f"duplicate ({year}, {_series_name(*key)}) cell, first on line {seen[cell]}"
            )
        seen[cell] = line
        cells.setdefault(country, {}).setdefault(key, {})[year] = value
    if not seen:
        raise BundleFormatError(path, 0, "no observations")
    return cells


def _read_shares(path):
    cells: dict[str, dict[int, dict]] = {}
    seen = {}
    for line, row in read_table(path, SHARES_COLUMNS):
        kind = row["share_kind"]
        if kind not in SHARE_KINDS:
            raise BundleFormatError(path, line, f"unknown share_kind {kind!r}")
        asset, industry = row["asset"], row["industry"]
        if kind in ("v_c", "v_n"):
            if not asset or industry:
                raise BundleFormatError(path, line, f"{kind} needs an asset and no industry")
            detail = parse_asset(path, line, asset)
        elif kind == "u_c":
            if not industry or asset:
                raise BundleFormatError(path, line, "u_c needs an industry and no asset")
            detail = industry
        else:
            if asset or industry:
                raise BundleFormatError(path, line, f"{kind} takes neither asset nor industry")
            detail = None
        year = parse_year(path, line, row["year"])
        value = parse_number(path, line, row["value"])
        cell = (row["country"], year, kind, detail)
        if cell in seen:
            raise BundleFormatError(path, line, f"duplicate share cell, first on line {seen[cell]}")
        seen[cell] = line
        year_cells = cells.setdefault(row["country"], {}).setdefault(year, {})
        if detail is None:
            year_cells[kind] = value
        else:
            year_cells.setdefault(kind, {})[detail] = value
    return cells


def _read_tfp(path):
    cells: dict[str, dict[str, dict[int, float]]] = {}
    seen = {}
    for line, row in read_table(path, TFP_COLUMNS):
        if not row["industry"]:
            raise BundleFormatError(path, line, "empty industry")
        year = parse_year(path, line, row["year"])
        value = parse_number(path, line, row["tfp_growth"], "tfp_growth")
        cell = (row["country"], row["industry"], year)
        if cell in seen:
            raise BundleFormatError(path, line, f"duplicate TFP cell, first on line {seen[cell]}")
        seen[cell] = line
        cells.setdefault(row["country"], {}).setdefault(row["industry"], {})[year] = value
    return cells


def _series_name(variable, detail):
    if detail is None:
        return variable
    code = detail.code if isinstance(detail, AssetCategory) else detail
    return f"{variable}[{code}]"


def _assemble(country, series_cells, share_cells, tfp_cells, classification, series_path):
    def series(variable, detail=None):
        key = (variable, detail)
        if key not in series_cells:
            raise DataError(f"{country}: missing series {_series_name(variable, detail)}")
        return AnnualSeries(series_cells[key], _series_name(variable, detail))

    output = series("output")
    labor = series("labor")
    capital_total = series("capital_total")
    by_asset = {
        detail: series("capital_asset", detail)
        for (variable, detail) in series_cells
        if variable == "capital_asset"
    }
    gross = {
        detail: series("gross_output", detail)
        for (variable, detail) in series_cells
        if variable == "gross_output"
    }
    unknown_tfp = sorted(set(tfp_cells) - set(gross))
    if unknown_tfp:
        raise DataError(f"{country}: TFP given for industries without gross output: {', '.join(unknown_tfp)}")
    industries = {
        ind: IndustryAccount(ind, go, tfp_cells.get(ind, {})) for ind, go in gross.items()
    }

    by_year = {}
    for year, cells in share_cells.items():
        if "v_k" not in cells or "v_l" not in cells:
            raise DataError(f"{country}: shares for {year} lack v_k or v_l")
        ys = YearShares(cells["v_k"], cells["v_l"], cells.get("v_c", {}),
                        cells.get("v_n", {}), cells.get("u_c", {}))
        by_year[year] = normalize_shares(ys)

    return EconomyDataset(
        country=country,
        output=output,
        labor=labor,
        capital_total=capital_total,
        capital_by_asset=by_asset,
        shares=InputShares(by_year),
        industries=industries,
        ict_producer_ids=classification.ict_producers & set(industries),
        labor_unit=classification.labor_unit,
    )
