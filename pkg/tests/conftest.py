import random

import pytest

from cuspquartics import geometry, singular
from cuspquartics.groebner import buchberger


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=20250809,
                     help="seed for the randomized property suites")


def pytest_runtest_logreport(report):
    # one visible pass/fail line per acceptance criterion
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    status = "PASS" if report.passed else "FAIL"
    print(f"\n[ACCEPTANCE] {name}: {status}")


@pytest.fixture(scope="session")
def seed(request):
    return request.config.getoption("--seed")


@pytest.fixture(scope="session")
def make_rng(seed):
    def factory(offset=0):
        return random.Random(seed + offset)
    return factory


@pytest.fixture(scope="session")
def ex61_family():
    return geometry.twisted_cubic_example()


@pytest.fixture(scope="session")
def ex61_search(ex61_family):
    return geometry.cusp_candidates(ex61_family)


@pytest.fixture(scope="session")
def ex61_basis(ex61_family):
    return buchberger(singular.jacobian_ideal(ex61_family.quartic))


@pytest.fixture(scope="session")
def ex62_family():
    return geometry.concurrent_lines_example()


@pytest.fixture(scope="session")
def ex62_search(ex62_family):
    return geometry.cusp_candidates(ex62_family)


@pytest.fixture(scope="session")
def ex62_basis(ex62_family):
    return buchberger(singular.jacobian_ideal(ex62_family.quartic))
