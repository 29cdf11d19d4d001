"""Shared fixtures: each theorem pipeline runs once per session, timed."""

import time

import pytest

from etacert import regression_suite, run_theorem


def _timed(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return result, time.perf_counter() - start


@pytest.fixture(scope="session")
def t1_report():
    return _timed(run_theorem, "T1_mod5")


@pytest.fixture(scope="session")
def t2_report():
    return _timed(run_theorem, "T2_mod25")


@pytest.fixture(scope="session")
def t3_report():
    return _timed(run_theorem, "T3_mod7")


@pytest.fixture(scope="session")
def t4_report():
    return _timed(run_theorem, "T4_mod49")


@pytest.fixture(scope="session")
def regression_report():
    return _timed(regression_suite)
