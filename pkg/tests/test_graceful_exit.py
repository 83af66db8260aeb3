import signal
import threading

import pytest

from motkit.runtime.graceful_exit import (
    SHUTDOWN_EXIT_CODE,
    GracefulShutdown,
    graceful_execution_context,
    install_signal_handlers,
)


def test_interrupt_becomes_exit_130():
    with pytest.raises(SystemExit) as excinfo:
        with graceful_execution_context():
            raise KeyboardInterrupt
    assert excinfo.value.code == SHUTDOWN_EXIT_CODE

    with pytest.raises(SystemExit) as excinfo:
        with graceful_execution_context():
            raise GracefulShutdown("Received signal 15")
    assert excinfo.value.code == 130


def test_other_errors_pass_through():
    with pytest.raises(ValueError):
        with graceful_execution_context():
            raise ValueError("not a shutdown")


def test_handlers_are_installed_from_the_main_thread(mocker):
    install = mocker.patch("motkit.runtime.graceful_exit.signal.signal")
    assert install_signal_handlers() is True
    installed = {call.args[0] for call in install.call_args_list}
    assert signal.SIGINT in installed


def test_worker_threads_skip_installation(mocker):
    install = mocker.patch("motkit.runtime.graceful_exit.signal.signal")
    outcome = []
    worker = threading.Thread(target=lambda: outcome.append(install_signal_handlers()))
    worker.start()
    worker.join()
    assert outcome == [False]
    install.assert_not_called()
