import time

import numpy as np
import pytest

from rootdisk import genpoly as gp
from rootdisk.core import Polynomial

SESSION_BUDGET = 90.0

# criterion id -> (passed, detail); filled by test_acceptance and echoed at the end
ACCEPTANCE: dict[str, tuple[bool, str]] = {}

_started = time.perf_counter()


def session_elapsed() -> float:
    return time.perf_counter() - _started


@pytest.fixture
def fixture_poly():
    return Polynomial([4, 1, 1, 1])


@pytest.fixture(scope="session")
def thm17_corpus():
    rng = np.random.default_rng(1701)
    out = []
    for _ in range(500):
        spec = gp.random_spec(rng, "thm17", n_range=(3, 10))
        out.append((spec, gp.gen_thm17_instance(spec)))
    return out


@pytest.fixture(scope="session")
def thm110_corpus():
    rng = np.random.default_rng(1110)
    out = []
    for _ in range(500):
        spec = gp.random_spec(rng, "thm110", n_range=(1, 10))
        out.append((spec, gp.gen_thm110_instance(spec)))
    return out


@pytest.fixture(scope="session")
def ek_corpus():
    rng = np.random.default_rng(7)
    return [gp.gen_ek_instance(int(rng.integers(2, 13)), seed) for seed in range(500)]


def pytest_sessionfinish(session, exitstatus):
    elapsed = session_elapsed()
    if ACCEPTANCE:
        ok = elapsed < SESSION_BUDGET
        ACCEPTANCE["10b"] = (ok, f"session wall-clock {elapsed:.1f}s (budget {SESSION_BUDGET:.0f}s)")
        if not ok and session.exitstatus == 0:
            session.exitstatus = 1


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda s: (int("".join(c for c in s if c.isdigit())), s)):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {detail}")
