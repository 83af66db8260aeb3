"""
OpenTelemetry span events for solves and experiment runs.

Every emitter is a no-op when no span is recording, so library code can
call them unconditionally. Attributes are a fixed, typed set.
"""
import logging
from contextlib import contextmanager
from typing import Iterator, Literal

from opentelemetry import trace
from opentelemetry.trace import get_current_span

logger = logging.getLogger("motkit.telemetry")

TRACER_NAME = "motkit"

_initialized = False


def init_telemetry(mode: str = "off") -> None:
    """
    Install an SDK tracer provider. Only "console" exports anything;
    "off" leaves the default no-op provider in place.
    """
    global _initialized
    if mode != "console" or _initialized:
        return

    from opentelemetry.sdk.trace import TracerProvider
    from opentelemetry.sdk.trace.export import ConsoleSpanExporter, SimpleSpanProcessor

    provider = TracerProvider()
    provider.add_span_processor(SimpleSpanProcessor(ConsoleSpanExporter()))
    trace.set_tracer_provider(provider)
    _initialized = True
    logger.debug("Console span exporter installed")


@contextmanager
def experiment_span(name: str) -> Iterator[None]:
    tracer = trace.get_tracer(TRACER_NAME)
    with tracer.start_as_current_span(f"motkit.experiment.{name}"):
        yield


@contextmanager
def command_span(name: str) -> Iterator[None]:
    """Span around one CLI command; command failures are recorded on it."""
    tracer = trace.get_tracer(TRACER_NAME)
    with tracer.start_as_current_span(f"motkit.cli.{name}"):
        yield


def emit_solve_telemetry(
    status: Literal["optimal", "infeasible", "unbounded"],
    iterations: int,
    rows: int,
    variables: int,
) -> None:
    assert status in ("optimal", "infeasible", "unbounded"), f"unexpected status {status}"
    assert isinstance(iterations, int), "iterations must be int"
    assert isinstance(rows, int) and isinstance(variables, int), "sizes must be int"

    span = get_current_span()
    if not span.is_recording():
        return

    span.add_event(
        name="motkit.lp.solve",
        attributes={
            "status": status,
            "iterations": iterations,
            "rows": rows,
            "variables": variables,
        },
    )


def emit_experiment_telemetry(name: str, verdict: bool, runtime_ms: int) -> None:
    assert isinstance(verdict, bool), "verdict must be bool"
    assert isinstance(runtime_ms, int), "runtime_ms must be int"

    span = get_current_span()
    if not span.is_recording():
        return

    span.add_event(
        name="motkit.experiment.verdict",
        attributes={
            "experiment": name,
            "verdict": verdict,
            "runtime_ms": runtime_ms,
        },
    )


def emit_exception_telemetry(exception: Exception) -> None:
    """Records the exception class only, never its message."""
    span = get_current_span()
    if not span.is_recording():
        return

    span.add_event(
        name="motkit.exception",
        attributes={"exception_type": type(exception).__name__},
    )
