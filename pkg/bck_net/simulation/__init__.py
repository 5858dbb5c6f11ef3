__all__: list[str] = [
    "RunConfig",
    "load_config_file",
    "ReplicateRunner",
    "OracleReport",
    "Discrepancy",
    "oracle_check",
    "format_results",
    "format_table",
    "RESULT_COLUMNS",
]

from bck_net.simulation.config import RunConfig, load_config_file
from bck_net.simulation.oracle import Discrepancy, OracleReport, oracle_check
from bck_net.simulation.output import RESULT_COLUMNS, format_results, format_table
from bck_net.simulation.runner import ReplicateRunner
