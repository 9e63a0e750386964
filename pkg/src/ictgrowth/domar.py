"""Domar aggregation of industry TFP growth.

Industry TFP growth rates are weighted by the ratio of industry gross output
to GDP, averaged over the two years. Because gross output counts
intermediate deliveries, the weights normally sum to more than one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Mapping

from .dataset import AnnualSeries, DataError, IndustryAccount


@dataclass(frozen=True)
class DomarWeightedTfp:
    year: int
    weights: Mapping[str, float]
    tfp: Mapping[str, float]
    aggregate: float
    ict_producer_contribution: float = 0.0
    non_ict_contribution: float = 0.0
    warnings: tuple[str, ...] = field(default=())

    def contribution(self, industry: str) -> float:
        return self.weights[industry] * self.tfp[industry]


def domar_weight(gvo_t: float, gvo_prev: float, gdp_t: float, gdp_prev: float) -> float:
    if not (gdp_t > 0 and gdp_prev > 0):
        raise DataError(f"GDP must be positive, got {gdp_t!r} and {gdp_prev!r}")
    if gvo_t < 0 or gvo_prev < 0:
        raise DataError(f"negative gross output ({gvo_t!r}, {gvo_prev!r})")
    return 0.5 * (gvo_t / gdp_t + gvo_prev / gdp_prev)


def aggregate_tfp(
    industries: Mapping[str, IndustryAccount],
    gdp: AnnualSeries,
    t: int,
    ict_producer_ids=frozenset(),
) -> DomarWeightedTfp:
    """Domar-weighted sum of industry TFP growth at year ``t``.

    With ``ict_producer_ids`` the result is also split by producer type (see
    :func:`split_by_producer`); otherwise all of it counts as non-ICT.
    """
    for year in (t - 1, t):
        if year not in gdp:
            raise DataError(f"GDP missing for {year}")
    weights, tfp, warnings = {}, {}, []
    for industry in sorted(industries):
        account = industries[industry]
        gross = account.gross_output
        if t not in gross or t - 1 not in gross:
            raise DataError(f"industry {industry} lacks gross output for {t - 1} or {t}")
        if t not in account.tfp_growth:
            raise DataError(f"industry {industry} has no TFP growth for {t}")
        weight = domar_weight(gross[t], gross[t - 1], gdp[t], gdp[t - 1])
        if weight > 1.0:
            warnings.append(f"Domar weight of {industry} in {t} is {weight:.4f} (> 1)")
        weights[industry] = weight
        tfp[industry] = account.tfp_growth[t]
    aggregate = math.fsum(weights[i] * tfp[i] for i in weights)
    result = DomarWeightedTfp(t, weights, tfp, aggregate, 0.0, aggregate, tuple(warnings))
    return split_by_producer(result, ict_producer_ids)


def split_by_producer(result: DomarWeightedTfp, ict_producer_ids) -> DomarWeightedTfp:
    ids = set(ict_producer_ids)
    unknown = ids - set(result.weights)
    if unknown:
        raise DataError(f"unknown industry id(s): {', '.join(sorted(unknown))}")
    ict = math.fsum(result.contribution(i) for i in sorted(ids))
    return replace(
        result, ict_producer_contribution=ict, non_ict_contribution=result.aggregate - ict
    )


def aggregate_series(dataset, years=None) -> list[DomarWeightedTfp]:
    """Domar aggregation of ``dataset.industries`` for each year, split by producer.

    GDP is the dataset's output series.
    """
    years = dataset.growth_years if years is None else years
    return [
        aggregate_tfp(dataset.industries, dataset.output, t, dataset.ict_producer_ids)
        for t in years
    ]
