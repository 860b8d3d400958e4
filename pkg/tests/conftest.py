import pytest
from hypothesis import HealthCheck, settings

from reflexa import GF, QQ, QuotientRing

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

VARS = ("X", "Y", "Z", "W")
MINORS = ("X*Z - Y^2", "X*W - Y*Z", "Y*W - Z^2")
FIELDS = [GF(32003), QQ]


def cone(field=GF(32003)):
    return QuotientRing(field, VARS, "degrevlex", MINORS)


@pytest.fixture(params=FIELDS, ids=repr)
def field(request):
    return request.param


@pytest.fixture
def R(field):
    return cone(field)


@pytest.fixture
def T(R):
    return R.quotient(["X"])


# one summary line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[key])
