import pytest

from motkit.config import Settings, SolverSettings, compute_config_hash, get_settings, load_settings
from motkit.errors import ParameterError

ENV_VARS = [
    "MOTKIT_PIVOT_TOL",
    "MOTKIT_FEASIBILITY_TOL",
    "MOTKIT_PHASE_ONE_TOL",
    "MOTKIT_GAP_TOL",
    "MOTKIT_MAX_ITERATIONS",
    "MOTKIT_WORKERS",
    "MOTKIT_RECORD_RUNTIME",
    "MOTKIT_LOG_LEVEL",
    "MOTKIT_TELEMETRY",
]


@pytest.fixture
def clean_env(monkeypatch, mocker):
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)
    # Keep a developer's .env out of the picture.
    mocker.patch("motkit.config.load_dotenv")
    get_settings.cache_clear()
    yield monkeypatch
    get_settings.cache_clear()


def test_defaults(clean_env):
    settings = load_settings()
    assert settings == Settings()
    assert settings.solver.max_iterations == 100_000
    assert settings.record_runtime is True


def test_environment_overrides(clean_env):
    clean_env.setenv("MOTKIT_GAP_TOL", "1e-6")
    clean_env.setenv("MOTKIT_WORKERS", "4")
    clean_env.setenv("MOTKIT_RECORD_RUNTIME", "off")
    clean_env.setenv("MOTKIT_LOG_LEVEL", "debug")
    clean_env.setenv("MOTKIT_TELEMETRY", "console")

    settings = load_settings()
    assert settings.solver.gap_tol == 1e-6
    assert settings.workers == 4
    assert settings.record_runtime is False
    assert settings.log_level == "DEBUG"
    assert settings.telemetry == "console"


@pytest.mark.parametrize(
    "name,value",
    [
        ("MOTKIT_GAP_TOL", "tiny"),
        ("MOTKIT_PIVOT_TOL", "-1"),
        ("MOTKIT_WORKERS", "0"),
        ("MOTKIT_RECORD_RUNTIME", "maybe"),
        ("MOTKIT_TELEMETRY", "otlp"),
    ],
)
def test_invalid_values_raise(clean_env, name, value):
    clean_env.setenv(name, value)
    with pytest.raises(ParameterError, match=name):
        load_settings()


def test_get_settings_is_cached(clean_env):
    assert get_settings() is get_settings()


def test_config_hash_tracks_numerics_only():
    base = Settings()
    assert compute_config_hash(base) == compute_config_hash(Settings(log_level="DEBUG", workers=8))
    assert compute_config_hash(base) != compute_config_hash(Settings(solver=SolverSettings(gap_tol=1e-6)))
    assert len(compute_config_hash(base)) == 64
