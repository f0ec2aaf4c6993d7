import pytest

from dbcause import load_facts, parse_dc, parse_query
from helpers import DATA, PATH_QUERY, PR_JOIN, RS_JOIN


@pytest.fixture
def path_db():
    return load_facts(DATA / "path.facts")


@pytest.fixture
def path_query():
    return parse_query(PATH_QUERY)


@pytest.fixture
def path_partitioned():
    return load_facts(DATA / "path_partitioned.facts")


@pytest.fixture
def path_partitioned_updated():
    return load_facts(DATA / "path_partitioned_updated.facts")


@pytest.fixture
def pr_loop():
    return load_facts(DATA / "pr_loop.facts")


@pytest.fixture
def pr_cqa():
    return load_facts(DATA / "pr_cqa.facts")


@pytest.fixture
def prs_chain():
    return load_facts(DATA / "prs_chain.facts")


@pytest.fixture
def pr_join():
    return parse_dc(PR_JOIN)


@pytest.fixture
def rs_join():
    return parse_dc(RS_JOIN)


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE_LINES
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=_criterion_order):
            terminalreporter.write_line(line)


def _criterion_order(line):
    label = line.split()[1]
    number, _, sub = label.partition(".")
    return int(number), sub
