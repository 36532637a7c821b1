import os
import sys

import pytest
from hypothesis import settings

from wittkit import RingPresentation

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def sphere():
    return RingPresentation("x y z", ["x^2 + y^2 + z^2 - 1"])


@pytest.fixture(scope="session")
def S5():
    return RingPresentation("x1 x2 x3 y1 y2 y3", ["x1*y1 + x2*y2 + x3*y3 - 1"])


@pytest.fixture(scope="session")
def generic3():
    """Q[a,b,c,p,q,r]/(ap + bq + cr - 1)."""
    return RingPresentation("a b c p q r", ["a*p + b*q + c*r - 1"])


@pytest.fixture(scope="session")
def Q0():
    return RingPresentation()


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion and enforce its time bound."""
    import time

    class _Criterion:
        def __init__(self):
            self.number = None

        def __call__(self, number, title, bound_s, check):
            self.number = number
            start = time.perf_counter()
            status, detail = "FAIL", ""
            try:
                detail = check() or ""
                elapsed = time.perf_counter() - start
                status = "PASS" if elapsed < bound_s else "FAIL"
                if status == "FAIL":
                    detail = f"time bound exceeded; {detail}"
            except AssertionError as exc:
                elapsed = time.perf_counter() - start
                detail = f"assertion failed: {exc}"
            line = f"criterion {number:2d} {status}  {elapsed:7.2f}s / {bound_s:g}s  {title}"
            if detail:
                line += f"  [{detail}]"
            ACCEPTANCE_LINES.append(line)
            print(line)
            assert status == "PASS", line

    return _Criterion()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
