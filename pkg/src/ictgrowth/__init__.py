"""Growth accounting with ICT capital detail, commodity-flow investment
estimates and Domar aggregation of industry TFP."""

from importlib.resources import files
from pathlib import Path

from .commodity_flow import (
    CommodityFlowInputs,
    FlowObservation,
    InvestmentEstimate,
    IoAllocationRatios,
    SoftwareNotEligibleError,
    estimate_investment,
    gfcf_shares,
    ict_share,
)
from .dataset import (
    AnnualSeries,
    AssetCategory,
    DataError,
    EconomyDataset,
    IndustryAccount,
    InputShares,
    ValidationReport,
    YearShares,
    growth_rate,
    load_bundle,
    load_economy,
    two_period_share,
    validate,
)
from .domar import DomarWeightedTfp, aggregate_tfp, domar_weight, split_by_producer
from .growth_accounting import (
    Decomposition,
    DetailedDecomposition,
    IctContribution,
    decompose_basic,
    decompose_detailed,
    ict_contribution,
)

__version__ = "0.1.0"


def demo_bundle() -> Path:
    """Path of the demo bundle shipped with the package."""
    return Path(str(files(__package__) / "data" / "demo"))
