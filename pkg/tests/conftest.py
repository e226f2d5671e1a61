import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from slkma.model import EXAMPLE_1, Instance
from slkma.weights import DegenerateCostConfig, compute_kl

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def example1():
    return EXAMPLE_1


positive = st.floats(0.5, 20, allow_nan=False, allow_infinity=False)


@st.composite
def instances(draw, n_min=1, n_max=7, interior=False):
    """Random valid instances; ``interior`` forces gamma < delta < beta and non-crossing indices."""
    n = draw(st.integers(n_min, n_max))
    a = draw(st.lists(st.integers(0, 100), min_size=n, max_size=n))
    b = draw(st.sampled_from([0.0, 0.01, 0.05, 0.1, 0.3]))
    alpha, gamma = draw(positive), draw(positive)
    if interior:
        delta = gamma + draw(st.floats(0.01, 10))
        beta = delta + draw(st.floats(0.01, 20))
    else:
        delta, beta = draw(positive), draw(positive)
    mu = draw(st.floats(0.1, 100))
    sigma = draw(st.sampled_from([0.0, 0.1, 0.5, 2.0]))
    inst = Instance(a, b, alpha, beta, gamma, delta, mu, sigma)
    if interior:
        try:
            compute_kl(inst)
        except DegenerateCostConfig:
            from hypothesis import assume

            assume(False)
    return inst


@st.composite
def schedules(draw, n):
    order = draw(st.permutations(range(1, n + 1)))
    i = draw(st.integers(1, n))
    return tuple(order), i


# ---- acceptance summary -------------------------------------------------------------

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion checked by this test")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = report.user_properties and dict(report.user_properties).get("criterion")
    if marker:
        number, title = marker
        _criteria[number] = (title, "PASS" if report.passed else "FAIL")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            item.user_properties.append(("criterion", tuple(m.args)))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcome = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {outcome}  {title}")
