import pytest
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import SimpleSpanProcessor
from opentelemetry.sdk.trace.export.in_memory_span_exporter import InMemorySpanExporter

from motkit.constructions import mu_m, nu_mn
from motkit.telemetry import (
    command_span,
    emit_exception_telemetry,
    emit_experiment_telemetry,
    emit_solve_telemetry,
    experiment_span,
)
from motkit.transport import mot_value


@pytest.fixture
def recording_tracer():
    exporter = InMemorySpanExporter()
    provider = TracerProvider()
    provider.add_span_processor(SimpleSpanProcessor(exporter))
    return provider.get_tracer("motkit.tests"), exporter


def test_emitters_do_not_crash_without_a_span():
    """Telemetry is safe when nothing is recording (local runs, tests)."""
    emit_solve_telemetry("optimal", iterations=3, rows=2, variables=4)
    emit_experiment_telemetry("ratio", verdict=True, runtime_ms=12)
    emit_exception_telemetry(ValueError("boom"))
    with experiment_span("noop"):
        pass
    with command_span("noop"):
        pass


def test_attribute_types_are_locked():
    with pytest.raises(AssertionError):
        emit_solve_telemetry("optimal", iterations=1.5, rows=2, variables=4)
    with pytest.raises(AssertionError):
        emit_solve_telemetry("exploded", iterations=1, rows=2, variables=4)
    with pytest.raises(AssertionError):
        emit_experiment_telemetry("ratio", verdict="yes", runtime_ms=1)


def test_solves_are_recorded_on_the_active_span(recording_tracer):
    tracer, exporter = recording_tracer
    with tracer.start_as_current_span("run"):
        mot_value(mu_m(2), nu_mn(2, 2))
        emit_exception_telemetry(RuntimeError("secret detail"))

    (span,) = exporter.get_finished_spans()
    names = [event.name for event in span.events]
    assert "motkit.lp.solve" in names
    solve_event = next(event for event in span.events if event.name == "motkit.lp.solve")
    assert solve_event.attributes["status"] == "optimal"
    assert solve_event.attributes["rows"] == 2 + 4 + 4

    exception_event = span.events[-1]
    assert exception_event.name == "motkit.exception"
    assert dict(exception_event.attributes) == {"exception_type": "RuntimeError"}
