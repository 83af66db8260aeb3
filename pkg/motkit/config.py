"""
Runtime configuration.

Values come from environment variables (optionally seeded from a .env file).
Defaults reproduce the tolerances the numerical checks are calibrated for.
"""
import hashlib
import json
import os
from dataclasses import asdict, dataclass
from functools import lru_cache

from dotenv import load_dotenv

from motkit.errors import ParameterError

TRUTHY = {"1", "true", "yes", "on"}
FALSY = {"0", "false", "no", "off"}


@dataclass(frozen=True)
class SolverSettings:
    pivot_tol: float = 1e-10
    feasibility_tol: float = 1e-9
    phase_one_tol: float = 1e-8
    gap_tol: float = 1e-7
    max_iterations: int = 100_000


@dataclass(frozen=True)
class Settings:
    solver: SolverSettings = SolverSettings()
    workers: int = 1
    record_runtime: bool = True
    log_level: str = "WARNING"
    telemetry: str = "off"  # "off" | "console"


def _env_float(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = float(raw)
    except ValueError:
        raise ParameterError(f"{name} must be a number, got {raw!r}")
    if value < 0:
        raise ParameterError(f"{name} must be nonnegative, got {value}")
    return value


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ParameterError(f"{name} must be an integer, got {raw!r}")
    if value < 1:
        raise ParameterError(f"{name} must be positive, got {value}")
    return value


def _env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    lowered = raw.strip().lower()
    if lowered in TRUTHY:
        return True
    if lowered in FALSY:
        return False
    raise ParameterError(f"{name} must be a boolean flag, got {raw!r}")


def load_settings() -> Settings:
    """Read settings from the environment without caching."""
    load_dotenv()

    solver = SolverSettings(
        pivot_tol=_env_float("MOTKIT_PIVOT_TOL", SolverSettings.pivot_tol),
        feasibility_tol=_env_float("MOTKIT_FEASIBILITY_TOL", SolverSettings.feasibility_tol),
        phase_one_tol=_env_float("MOTKIT_PHASE_ONE_TOL", SolverSettings.phase_one_tol),
        gap_tol=_env_float("MOTKIT_GAP_TOL", SolverSettings.gap_tol),
        max_iterations=_env_int("MOTKIT_MAX_ITERATIONS", SolverSettings.max_iterations),
    )

    telemetry = os.getenv("MOTKIT_TELEMETRY", "off").strip().lower() or "off"
    if telemetry not in ("off", "console"):
        raise ParameterError(f"MOTKIT_TELEMETRY must be 'off' or 'console', got {telemetry!r}")

    return Settings(
        solver=solver,
        workers=_env_int("MOTKIT_WORKERS", 1),
        record_runtime=_env_bool("MOTKIT_RECORD_RUNTIME", True),
        log_level=os.getenv("MOTKIT_LOG_LEVEL", "WARNING").strip().upper() or "WARNING",
        telemetry=telemetry,
    )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return load_settings()


def compute_config_hash(settings: Settings | None = None) -> str:
    """
    Deterministic hash of the settings that can change a numerical outcome.
    Logging and telemetry choices are left out.
    """
    settings = settings or get_settings()
    relevant = asdict(settings.solver)
    payload = json.dumps(relevant, sort_keys=True).encode("utf-8")
    return hashlib.sha256(payload).hexdigest()
