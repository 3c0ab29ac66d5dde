import contextlib
import time

import mpmath
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=1000, deadline=None)
settings.load_profile("default")


@pytest.fixture(autouse=True)
def _mpmath_precision():
    # independent reference arithmetic for every test; well past any digits checked
    with mpmath.workdps(300):
        yield


# acceptance reporting: one PASS/FAIL line per criterion in the terminal summary

_RESULTS = pytest.StashKey[list]()
_STARTED = pytest.StashKey[float]()


def pytest_configure(config):
    config.stash[_RESULTS] = []
    config.stash[_STARTED] = time.perf_counter()


@pytest.fixture
def criterion(request):
    results = request.config.stash[_RESULTS]

    @contextlib.contextmanager
    def check(number: int, label: str):
        try:
            yield
        except BaseException as exc:
            text = str(exc).strip()
            detail = text.splitlines()[0] if text else type(exc).__name__
            results.append((number, label, False, detail))
            print(f"FAIL criterion {number}: {label} ({detail})")
            raise
        results.append((number, label, True, ""))
        print(f"PASS criterion {number}: {label}")

    return check


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(_RESULTS, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, label, ok, detail in sorted(results, key=lambda r: r[0]):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {label}"
        terminalreporter.write_line(line + (f" ({detail})" if detail else ""))
    elapsed = time.perf_counter() - config.stash[_STARTED]
    terminalreporter.write_line(f"session runtime {elapsed:.1f} s (target < 60 s)")
