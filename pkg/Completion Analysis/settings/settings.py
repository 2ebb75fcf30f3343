import logging
import os

logger = logging.getLogger(__name__)

ENV_BUDGET = "EIGENCOMPLETE_BUDGET"
ENV_JOBS = "EIGENCOMPLETE_JOBS"
ENV_LOG_LEVEL = "EIGENCOMPLETE_LOG_LEVEL"

DEFAULT_FIELD = "Q"
DEFAULT_ADD_ROWS = 1
DEFAULT_THEOREM = "full"

TARGET_SETTINGS_LOCATION = "./settings/targets"
REPORT_DIRECTORY = "./reports"
ORACLE_CSV_FILE_NAME = "oracle.csv"
MAX_REPORTED_MISMATCHES = 20

LOG_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INPUT_ERROR = 2
EXIT_DOMAIN_ERROR = 3
EXIT_BUDGET = 4
EXIT_INTERNAL = 70


def _int_from_env(name, default):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("Ignoring %s=%r: not an integer, using %d", name, raw, default)
        return default
    if value < 1:
        logger.warning("Ignoring %s=%r: must be positive, using %d", name, raw, default)
        return default
    return value


DEFAULT_BUDGET = _int_from_env(ENV_BUDGET, 1_000_000)
DEFAULT_JOBS = _int_from_env(ENV_JOBS, 1)
LOG_LEVEL = "WARNING"
