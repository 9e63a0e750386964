"""Decomposition of output growth into capital, labor and TFP contributions.

Every contribution is a two-period average share times a log growth rate.
TFP is whatever is left over, so the parts always add back up to output
growth. In ``per_worker`` mode output and capital are measured per unit of
labor and the labor term drops out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Mapping

from .dataset import (
    AssetCategory,
    DataError,
    EconomyDataset,
    growth_rate,
    two_period_share,
)
from .domar import domar_weight

Mode = Literal["levels", "per_worker"]
MODES = ("levels", "per_worker")


@dataclass(frozen=True)
class Decomposition:
    year: int
    mode: str
    output_growth: float
    capital_contribution: float
    labor_contribution: float
    tfp_residual: float


@dataclass(frozen=True)
class DetailedDecomposition:
    year: int
    mode: str
    output_growth: float
    ict_asset_contributions: Mapping[AssetCategory, float]
    non_ict_asset_contributions: Mapping[AssetCategory, float]
    labor_contribution: float
    tfp_residual: float

    @property
    def ict_capital_contribution(self) -> float:
        return sum(self.ict_asset_contributions.values())

    @property
    def non_ict_capital_contribution(self) -> float:
        return sum(self.non_ict_asset_contributions.values())


@dataclass(frozen=True)
class IctContribution:
    year: int
    asset_term: float
    producer_tfp_term: float
    total: float


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def _prepare(dataset: EconomyDataset, t: int):
    dataset.require_valid()
    if t not in dataset.shares or t - 1 not in dataset.shares:
        raise DataError(f"{dataset.country}: shares missing for {t - 1} or {t}")
    return dataset.shares[t], dataset.shares[t - 1]


def decompose_basic(dataset: EconomyDataset, t: int, mode: Mode = "levels") -> Decomposition:
    _check_mode(mode)
    now, prev = _prepare(dataset, t)
    v_k = two_period_share(now.v_k, prev.v_k)
    v_l = two_period_share(now.v_l, prev.v_l)

    d_y = growth_rate(dataset.output, t)
    d_k = growth_rate(dataset.capital_total, t)
    d_l = growth_rate(dataset.labor, t)
    if mode == "per_worker":
        d_y, d_k = d_y - d_l, d_k - d_l
        capital, labor = v_k * d_k, 0.0
    else:
        capital, labor = v_k * d_k, v_l * d_l
    return Decomposition(t, mode, d_y, capital, labor, d_y - capital - labor)


def _asset_contributions(dataset, t, now, prev, assets, d_l):
    out = {}
    for asset in assets:
        share_t, share_prev = now.asset_share(asset), prev.asset_share(asset)
        if share_t is None and share_prev is None:
            continue
        # An asset listed in only one of the two years carries zero share in the other.
        weight = two_period_share(share_t or 0.0, share_prev or 0.0)
        series = dataset.capital_by_asset.get(asset)
        if series is None:
            if weight != 0.0:
                raise DataError(
                    f"{dataset.country}: asset {asset.code} has share {weight} but no capital series"
                )
            out[asset] = 0.0
            continue
        out[asset] = weight * (growth_rate(series, t) - d_l)
    return out


def decompose_detailed(
    dataset: EconomyDataset, t: int, mode: Mode = "levels"
) -> DetailedDecomposition:
    _check_mode(mode)
    now, prev = _prepare(dataset, t)
    d_y = growth_rate(dataset.output, t)
    d_l = growth_rate(dataset.labor, t)

    ict_assets = [a for a in AssetCategory if a.is_ict]
    non_ict_assets = [a for a in AssetCategory if not a.is_ict]
    if mode == "per_worker":
        d_y -= d_l
        deflate, labor = d_l, 0.0
    else:
        deflate = 0.0
        labor = two_period_share(now.v_l, prev.v_l) * d_l
    ict = _asset_contributions(dataset, t, now, prev, ict_assets, deflate)
    non_ict = _asset_contributions(dataset, t, now, prev, non_ict_assets, deflate)

    residual = d_y - sum(ict.values()) - sum(non_ict.values()) - labor
    return DetailedDecomposition(t, mode, d_y, ict, non_ict, labor, residual)


def producer_weight(dataset: EconomyDataset, industry: str, t: int) -> float:
    """Output-share weight of an ICT-producing industry at ``t``.

    Uses the ``u_c`` share table when the industry has a share in both years
    and falls back to the industry's Domar weight otherwise.
    """
    now, prev = dataset.shares[t], dataset.shares[t - 1]
    if industry in now.u_c and industry in prev.u_c:
        return two_period_share(now.u_c[industry], prev.u_c[industry])
    gross = dataset.industries[industry].gross_output
    return domar_weight(gross[t], gross[t - 1], dataset.output[t], dataset.output[t - 1])


def ict_contribution(dataset: EconomyDataset, t: int) -> IctContribution:
    detailed = decompose_detailed(dataset, t, "levels")
    asset_term = sum(detailed.ict_asset_contributions.values())

    terms = []
    for industry in sorted(dataset.ict_producer_ids):
        tfp = dataset.industries[industry].tfp_growth
        if t not in tfp:
            raise DataError(f"{dataset.country}: ICT producer {industry} has no TFP growth for {t}")
        terms.append(producer_weight(dataset, industry, t) * tfp[t])
    producer_term = math.fsum(terms)
    return IctContribution(t, asset_term, producer_term, asset_term + producer_term)


def decompose_all(dataset: EconomyDataset, mode: Mode = "levels", years=None):
    """Run all three decompositions over ``years`` (default: every growth year).

    Returns a list of ``(Decomposition, DetailedDecomposition, IctContribution)``.
    """
    years = dataset.growth_years if years is None else years
    return [
        (decompose_basic(dataset, t, mode), decompose_detailed(dataset, t, mode),
         ict_contribution(dataset, t))
        for t in years
    ]
