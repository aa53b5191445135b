import pytest

from hamming_kfree import kernels
from hamming_kfree._accel import HAVE_NUMBA

BACKENDS = ["numpy"] + (["numba"] if HAVE_NUMBA else [])

ACCEPTANCE_RESULTS = {}


@pytest.fixture(params=BACKENDS)
def backend(request):
    with kernels.backend(request.param):
        yield request.param


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for marker in report.keywords:
        if marker.startswith("criterion_"):
            n = int(marker.split("_")[1])
            prev = ACCEPTANCE_RESULTS.get(n, True)
            ACCEPTANCE_RESULTS[n] = prev and report.passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if ACCEPTANCE_RESULTS[n] else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d}: {status}")
