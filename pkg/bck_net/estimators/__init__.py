__all__: list[str] = [
    "Estimate",
    "KillingTime",
    "first_killing_time",
    "estimate_density",
    "estimate_kill_intensity",
    "estimate_theta",
    "estimate_renewal_gaps",
    "gap_law_ks",
    "renewal_times",
    "estimate_sparseness",
    "survival_curve",
    "scaling_overlay",
    "offspring_mean",
    "extinction_sweep",
    "bernoulli_stationarity",
    "stationary_intensity",
    "domination_check",
    "block_crossing",
    "min_crossing",
    "DensityEstimator",
    "KillIntensityEstimator",
    "ThetaEstimator",
    "RenewalEstimator",
    "SparsenessEstimator",
    "SurvivalEstimator",
    "OffspringEstimator",
    "StationarityEstimator",
    "DominationEstimator",
    "BlocksEstimator",
    "get_supported_estimators",
]

from bck_net.core import Estimator

from .blocks import BlocksEstimator, block_crossing, min_crossing
from .density import DensityEstimator, estimate_density
from .domination import DominationEstimator, domination_check
from .estimate import Estimate
from .kill_intensity import KillIntensityEstimator, estimate_kill_intensity
from .killing_times import KillingTime, first_killing_time
from .offspring import OffspringEstimator, extinction_sweep, offspring_mean
from .renewal import (
    RenewalEstimator,
    estimate_renewal_gaps,
    gap_law_ks,
    renewal_times,
)
from .sparseness import SparsenessEstimator, estimate_sparseness
from .stationarity import (
    StationarityEstimator,
    bernoulli_stationarity,
    stationary_intensity,
)
from .survival import SurvivalEstimator, scaling_overlay, survival_curve
from .theta import ThetaEstimator, estimate_theta


def get_supported_estimators() -> dict[str, type[Estimator]]:
    """Get all estimators exposed as CLI subcommands, keyed by name."""
    classes: list[type[Estimator]] = [
        DensityEstimator,
        KillIntensityEstimator,
        ThetaEstimator,
        RenewalEstimator,
        SparsenessEstimator,
        SurvivalEstimator,
        OffspringEstimator,
        StationarityEstimator,
        DominationEstimator,
        BlocksEstimator,
    ]
    return {cls.get_name(): cls for cls in classes}
