import pytest

from nacx.coeffalg import cyclic_algebra, field_algebra
from nacx.fields import frobenius, make_finite_field, prime_field

MODULI = {
    "F2": (2, [0, 1]),
    "F4": (2, [1, 1, 1]),
    "F8": (2, [1, 1, 0, 1]),
    "F9": (3, [1, 0, 1]),
    "F16": (2, [1, 1, 0, 0, 1]),
    "F25": (5, [2, 0, 1]),
    "F27": (3, [1, 2, 0, 1]),
    "F64": (2, [1, 1, 0, 0, 0, 0, 1]),
    "F81": (3, [2, 0, 0, 1, 1]),
}

_cache = {}


def field(name):
    if name not in _cache:
        p, mod = MODULI[name]
        _cache[name] = make_finite_field(p, mod, name)
    return _cache[name]


def frob_algebra(name, e=1):
    K = field(name)
    return field_algebra(K, frobenius(K, e))


@pytest.fixture
def F4():
    return field("F4")


@pytest.fixture
def F9():
    return field("F9")


@pytest.fixture
def D4():
    return frob_algebra("F4")


@pytest.fixture
def D9():
    return frob_algebra("F9")


_criteria = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1][len("test_criterion_"):]
        _criteria[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        num, _, label = name.partition("_")
        verdict = "PASS" if _criteria[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {int(num):2d} {verdict}  {label.replace('_', ' ')}")
