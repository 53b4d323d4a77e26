import pytest
from hypothesis import HealthCheck, settings, strategies as st

from brauer_decomp.fields import RationalFunctionField

settings.register_profile(
    "repo",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("repo")

FIELDS = {q: RationalFunctionField(q, "t") for q in (19, 37)}


def polys(q, max_degree=3, monic=False, nonzero=True):
    """Random polynomials of F_q[t] as coefficient lists (lowest first)."""
    coeff = st.integers(0, q - 1)
    lists = st.lists(coeff, min_size=1, max_size=max_degree + 1)
    if monic:
        lists = lists.map(lambda c: c + [1])
    if nonzero:
        lists = lists.filter(lambda c: any(c))
    return lists


def rf_elements(q, max_degree=3):
    F = FIELDS[q]
    return st.tuples(polys(q, max_degree), polys(q, max_degree, monic=True)).map(
        lambda nd: F.from_polys(F.poly(nd[0]), F.poly(nd[1]))
    )


@pytest.fixture(params=[19, 37], ids=["F19", "F37"])
def F(request):
    return FIELDS[request.param]


ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[key])
