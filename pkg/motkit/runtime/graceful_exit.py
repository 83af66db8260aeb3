import logging
import signal
import threading
from contextlib import contextmanager
from typing import Iterator

from motkit.telemetry import emit_exception_telemetry

logger = logging.getLogger("motkit.runtime")

SHUTDOWN_EXIT_CODE = 130


class GracefulShutdown(Exception):
    pass


def _signal_handler(signum, frame):
    raise GracefulShutdown(f"Received signal {signum}")


def install_signal_handlers() -> bool:
    """
    Route SIGINT and SIGTERM to GracefulShutdown. signal.signal only works
    from the main thread, so elsewhere (pytest workers, embedding hosts)
    this is a logged no-op. Returns whether handlers were installed.
    """
    try:
        if threading.current_thread() is not threading.main_thread():
            logger.debug("Not main thread; skipping signal handler installation")
            return False

        if hasattr(signal, "SIGINT"):
            signal.signal(signal.SIGINT, _signal_handler)
        if hasattr(signal, "SIGTERM"):
            signal.signal(signal.SIGTERM, _signal_handler)
        return True
    except (ValueError, AttributeError) as e:
        logger.warning(f"Could not install signal handlers: {e}")
        return False


@contextmanager
def graceful_execution_context() -> Iterator[None]:
    """Turn an interrupted sweep into SystemExit(130) after logging it."""
    try:
        yield
    except (GracefulShutdown, KeyboardInterrupt) as e:
        logger.warning("Graceful shutdown initiated: %s", str(e) or type(e).__name__)
        emit_exception_telemetry(e)
        raise SystemExit(SHUTDOWN_EXIT_CODE)
