__all__: list[str] = [
    "PointSet",
    "step_point_set",
    "evolve",
    "evolve_in_cone",
    "bc_point_set",
    "PathTrace",
    "Termination",
    "trace_path",
    "web_paths",
    "rescale",
    "length_unit",
    "time_unit",
    "ScaledConfig",
    "ROUNDING_RULE",
]

from .paths import PathTrace, Termination, trace_path, web_paths
from .point_set import PointSet, bc_point_set, evolve, evolve_in_cone, step_point_set
from .scaling import ROUNDING_RULE, ScaledConfig, length_unit, rescale, time_unit
