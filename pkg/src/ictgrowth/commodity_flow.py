"""Commodity-flow estimates of investment and GFCF category shares.

Investment in a good is domestic production net of exports plus imports net
of re-exports, each scaled by the fraction that input-output tables allocate
to investment. The fractions come from one benchmark table and are applied
unchanged to every year. Software is not traceable this way and must be
supplied as a direct investment series instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Literal, Mapping

from .dataset import (
    AssetCategory,
    BundleFormatError,
    DataError,
    parse_asset,
    parse_number,
    parse_year,
    read_table,
)

FLOWS_FILE = "flows.csv"
IO_RATIOS_FILE = "io_ratios.csv"
GFCF_FILE = "gfcf.csv"

FLOWS_COLUMNS = ("country", "asset", "year", "Q", "E_d", "M", "E_r")
IO_RATIOS_COLUMNS = ("country", "asset", "domestic_ratio", "import_ratio", "io_reference_year")
GFCF_COLUMNS = ("country", "year", "asset", "value")

SOFTWARE_MESSAGE = "commodity flow not applicable to software"

Scope = Literal["total_non_residential", "total_equipment"]
SCOPES = ("total_non_residential", "total_equipment")


class SoftwareNotEligibleError(DataError):
    def __init__(self):
        super().__init__(SOFTWARE_MESSAGE)


def _require_eligible(item: AssetCategory) -> None:
    if not item.commodity_flow_eligible:
        raise SoftwareNotEligibleError()


@dataclass(frozen=True)
class FlowObservation:
    Q: float
    E_d: float
    M: float
    E_r: float

    def check(self, where="") -> None:
        prefix = f"{where}: " if where else ""
        for name in ("Q", "E_d", "M", "E_r"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise DataError(f"{prefix}{name} must be non-negative, got {value!r}")
        if self.E_d > self.Q:
            raise DataError(f"{prefix}exports E_d={self.E_d!r} exceed domestic output Q={self.Q!r}")
        if self.E_r > self.M:
            raise DataError(f"{prefix}re-exports E_r={self.E_r!r} exceed imports M={self.M!r}")


@dataclass(frozen=True)
class CommodityFlowInputs:
    item: AssetCategory
    by_year: Mapping[int, FlowObservation]

    def __post_init__(self):
        _require_eligible(self.item)
        object.__setattr__(self, "by_year", MappingProxyType(dict(sorted(self.by_year.items()))))


@dataclass(frozen=True)
class IoAllocationRatios:
    item: AssetCategory
    domestic_ratio: float
    import_ratio: float
    io_reference_year: int

    def __post_init__(self):
        for name in ("domestic_ratio", "import_ratio"):
            value = getattr(self, name)
            if not (math.isfinite(value) and 0.0 <= value <= 1.0):
                raise DataError(f"{name} for {self.item.code} must lie in [0, 1], got {value!r}")

    @classmethod
    def from_io_table(
        cls,
        item: AssetCategory,
        investment_from_domestic: float,
        domestic_net_of_exports: float,
        investment_from_imports: float,
        imports_net_of_reexports: float,
        io_reference_year: int,
    ) -> IoAllocationRatios:
        """Build the ratios from benchmark I/O-table aggregates for one good."""
        if domestic_net_of_exports <= 0 or imports_net_of_reexports <= 0:
            raise DataError("I/O denominators must be positive")
        return cls(
            item,
            investment_from_domestic / domestic_net_of_exports,
            investment_from_imports / imports_net_of_reexports,
            io_reference_year,
        )


@dataclass(frozen=True)
class InvestmentEstimate:
    item: AssetCategory
    year: int
    domestic_component: float
    import_component: float
    total: float


def estimate_investment(
    flows: CommodityFlowInputs, ratios: IoAllocationRatios, t: int
) -> InvestmentEstimate:
    _require_eligible(flows.item)
    if ratios.item is not flows.item:
        raise DataError(f"ratios are for {ratios.item.code}, flows for {flows.item.code}")
    if t not in flows.by_year:
        raise DataError(f"no flows for {flows.item.code} in {t}")
    obs = flows.by_year[t]
    obs.check(f"{flows.item.code}/{t}")
    domestic = (obs.Q - obs.E_d) * ratios.domestic_ratio
    imported = (obs.M - obs.E_r) * ratios.import_ratio
    return InvestmentEstimate(flows.item, t, domestic, imported, domestic + imported)


def gfcf_shares(
    gfcf_by_category: Mapping[AssetCategory, float], scope: Scope = "total_non_residential"
) -> dict[AssetCategory, float]:
    """Each category's share of non-residential GFCF or of equipment GFCF.

    The equipment scope leaves structures out of both the denominator and
    the result.
    """
    if scope not in SCOPES:
        raise ValueError(f"scope must be one of {SCOPES}, got {scope!r}")
    for asset, value in gfcf_by_category.items():
        if not math.isfinite(value) or value < 0:
            raise DataError(f"GFCF for {asset.code} must be non-negative, got {value!r}")
    included = {
        a: v for a, v in gfcf_by_category.items()
        if scope == "total_non_residential" or a is not AssetCategory.NON_RESIDENTIAL_STRUCTURES
    }
    denominator = math.fsum(included.values())
    if denominator <= 0:
        raise DataError(f"GFCF denominator for scope {scope} is zero")
    return {a: included[a] / denominator for a in AssetCategory if a in included}


def ict_share(shares: Mapping[AssetCategory, float]) -> float:
    return math.fsum(v for a, v in shares.items() if a.is_ict)


# -- bundle files -------------------------------------------------------------


@dataclass
class FlowTable:
    """Contents of ``flows.csv`` grouped by country and asset.

    ``software_rows`` lists the line numbers of Software rows, which are
    set aside rather than loaded.
    """

    inputs: dict[tuple[str, AssetCategory], CommodityFlowInputs] = field(default_factory=dict)
    software_rows: list[tuple[str, int, int]] = field(default_factory=list)


def load_flows(path) -> FlowTable:
    path = Path(path)
    grouped: dict[tuple[str, AssetCategory], dict[int, FlowObservation]] = {}
    seen = {}
    table = FlowTable()
    for line, row in read_table(path, FLOWS_COLUMNS):
        asset = parse_asset(path, line, row["asset"])
        year = parse_year(path, line, row["year"])
        obs = FlowObservation(*(parse_number(path, line, row[c], c) for c in ("Q", "E_d", "M", "E_r")))
        country = row["country"]
        if not asset.commodity_flow_eligible:
            table.software_rows.append((country, year, line))
            continue
        try:
            obs.check()
        except DataError as exc:
            raise BundleFormatError(path, line, str(exc)) from None
        cell = (country, asset, year)
        if cell in seen:
            raise BundleFormatError(path, line, f"duplicate flow cell, first on line {seen[cell]}")
        seen[cell] = line
        grouped.setdefault((country, asset), {})[year] = obs
    table.inputs = {
        key: CommodityFlowInputs(key[1], years) for key, years in sorted(
            grouped.items(), key=lambda kv: (kv[0][0], kv[0][1].code)
        )
    }
    return table


def load_io_ratios(path) -> dict[tuple[str, AssetCategory], IoAllocationRatios]:
    path = Path(path)
    ratios = {}
    for line, row in read_table(path, IO_RATIOS_COLUMNS):
        asset = parse_asset(path, line, row["asset"])
        key = (row["country"], asset)
        if key in ratios:
            raise BundleFormatError(path, line, f"duplicate ratios for {key[0]}/{asset.code}")
        try:
            ratios[key] = IoAllocationRatios(
                asset,
                parse_number(path, line, row["domestic_ratio"], "domestic_ratio"),
                parse_number(path, line, row["import_ratio"], "import_ratio"),
                parse_year(path, line, row["io_reference_year"]),
            )
        except BundleFormatError:
            raise
        except DataError as exc:
            raise BundleFormatError(path, line, str(exc)) from None
    return ratios


def load_gfcf(path) -> dict[tuple[str, int], dict[AssetCategory, float]]:
    path = Path(path)
    out: dict[tuple[str, int], dict[AssetCategory, float]] = {}
    for line, row in read_table(path, GFCF_COLUMNS):
        asset = parse_asset(path, line, row["asset"])
        year = parse_year(path, line, row["year"])
        cell = out.setdefault((row["country"], year), {})
        if asset in cell:
            raise BundleFormatError(path, line, f"duplicate GFCF cell {row['country']}/{year}/{asset.code}")
        cell[asset] = parse_number(path, line, row["value"])
    return dict(sorted(out.items()))
