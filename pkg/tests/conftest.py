import os

import pytest
from hypothesis import HealthCheck, settings

from exacta import CMon, FinAb, FinGrp, SetPt
from exacta.gen import seed_rng

settings.register_profile(
    "exacta",
    deadline=None,
    max_examples=int(os.environ.get("EXACTA_HYPOTHESIS_EXAMPLES", 60)),
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("exacta")


@pytest.fixture(scope="session")
def S():
    return SetPt()


@pytest.fixture(scope="session")
def M():
    return CMon()


@pytest.fixture(scope="session")
def G():
    return FinGrp()


@pytest.fixture(scope="session")
def A():
    return FinAb()


@pytest.fixture(params=["setpt", "cmon", "group", "ab"])
def any_cat(request):
    return {"setpt": SetPt, "cmon": CMon, "group": FinGrp, "ab": FinAb}[request.param]()


@pytest.fixture
def rng(request):
    # stable per test, shifted by EXACTA_SEED
    return seed_rng(salt=sum(map(ord, request.node.name)))


# -- acceptance reporting ----------------------------------------------------------
#
# Tests marked @pytest.mark.acceptance(n, "title") get one PASS/FAIL line each in
# the terminal summary, whatever the capture mode.

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n, title): numbered acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    n, title = mark.args
    failed = rep.failed or (rep.when == "call" and rep.skipped)
    if rep.when == "call" or failed:
        prev = _ACCEPTANCE.get(n, (title, True, ""))
        detail = getattr(item, "acceptance_detail", "")
        _ACCEPTANCE[n] = (title, prev[1] and not failed, detail)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        title, ok, detail = _ACCEPTANCE[n]
        line = f"{'PASS' if ok else 'FAIL'}  {n:>2}. {title}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)


@pytest.fixture
def detail(request):
    """Call detail("...") to attach a short measurement to the acceptance line."""
    def put(text):
        request.node.acceptance_detail = text
        print(text)
    return put
