from __future__ import annotations

import pytest

from annbc.ring import (attach_involution, make_johnson_ring, make_matrix_ring,
                        make_upper_triangular, make_zmod, transpose_involution)


@pytest.fixture(scope="session")
def z6():
    return make_zmod(6)


@pytest.fixture(scope="session")
def johnson():
    return make_johnson_ring()


@pytest.fixture(scope="session")
def m22():
    return make_matrix_ring(2, 2)


@pytest.fixture(scope="session")
def m22t():
    return attach_involution(make_matrix_ring(2, 2), transpose_involution(2, 2))


@pytest.fixture(scope="session")
def m23t():
    return attach_involution(make_matrix_ring(2, 3), transpose_involution(2, 3))


@pytest.fixture(scope="session")
def ut2():
    return make_upper_triangular(2, 2)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
