"""Configuration settings for MultiplierLab."""

import logging
import os
from pathlib import Path
from dotenv import load_dotenv

# Explicitly load from the project root (where config.py lives)
# so .env is found regardless of current working directory
_env_path = Path(__file__).parent / ".env"
load_dotenv(_env_path)

APP_NAME = "MultiplierLab"
VERSION = "1.0.0"


def _env_float(name: str, default: float) -> float:
    """
    Read a float setting from the environment.

    Args:
        name: Environment variable name.
        default: Value used when the variable is unset or malformed.

    Returns:
        Parsed float, or the default.
    """
    raw = os.getenv(name, "")
    if not raw:
        return default
    try:
        value = float(raw)
    except ValueError:
        logging.getLogger(__name__).warning(
            f"{name}={raw!r} is not a number, using default {default}"
        )
        return default
    if value != value or value in (float("inf"), float("-inf")):
        logging.getLogger(__name__).warning(f"{name} must be finite, using default {default}")
        return default
    return value


def _env_int(name: str, default: int) -> int:
    """
    Read an integer setting from the environment.

    Args:
        name: Environment variable name.
        default: Value used when the variable is unset or malformed.

    Returns:
        Parsed integer, or the default.
    """
    raw = os.getenv(name, "")
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        logging.getLogger(__name__).warning(
            f"{name}={raw!r} is not an integer, using default {default}"
        )
        return default


# --- Numerical tolerances ---
# Relative tolerance for approximate comparisons, PSD decisions and float ranks
DEFAULT_TOL = _env_float("MULTIPLIERLAB_TOL", 1e-9)

# Cyclic Jacobi: stop once the off-diagonal Frobenius norm is below
# EIGEN_OFFDIAG_THRESHOLD * ||A||_F
EIGEN_OFFDIAG_THRESHOLD = 1e-13
EIGEN_MAX_SWEEPS = _env_int("MULTIPLIERLAB_EIGEN_MAX_SWEEPS", 100)
EIGEN_RESIDUAL_TOL = 1e-12
HERMITIAN_TOL = 1e-12

# Gram decomposition must reproduce A within this relative error
GRAM_RECONSTRUCTION_TOL = 1e-10

# Pairing / dual-evaluation agreement for non-exact scalars
CONSISTENCY_TOL = 1e-12

# --- Capacity limits ---
# Largest finite group accepted by the Cayley-table builders
MAX_GROUP_ORDER = _env_int("MULTIPLIERLAB_MAX_GROUP_ORDER", 1024)
MAX_SYMMETRIC_DEGREE = 5

# Integer group elements used in windows are bounded by +/- 2^31
INTEGER_WINDOW_BOUND = 2 ** 31

# Largest state array |G|^(K+1) in the truncated dilation model
DILATION_STATE_CAP = _env_int("MULTIPLIERLAB_DILATION_STATE_CAP", 10 ** 6)

# Numerators/denominators of exact coefficients above this bit length
# are reported as a capacity error
EXACT_MAX_BITS = _env_int("MULTIPLIERLAB_EXACT_MAX_BITS", 4096)

# --- Group spec strings understood by the CLI ---
INTEGER_GROUP_SPEC = "Z"

# --- Paths ---
REPORTS_DIR = Path(os.getenv("MULTIPLIERLAB_REPORTS_DIR", str(Path.cwd() / "reports")))

# --- Logging ---
LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")  # Can override in .env: DEBUG, INFO, WARNING, ERROR
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# --- CLI exit codes ---
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NEGATIVE_VERDICT = 2
