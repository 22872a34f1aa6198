import pytest

from twisted_center import normalize, validate_pairing_matrix, validate_shape

EXAMPLE_BLOCKS = [(2, 2), (1, 2)]
EXAMPLE_MATRIX = [[0, 1, 1, 1], [8, 0, 2, 2], [2, 1, 0, 1], [2, 1, 2, 0]]
EXAMPLE_NORMALIZED = [[0, 1, 3, 3], [8, 0, 6, 6], [6, 3, 0, 3], [6, 3, 6, 0]]

ACCEPTANCE_LINES = []


@pytest.fixture
def example_shape():
    return validate_shape(EXAMPLE_BLOCKS, 3)


@pytest.fixture
def example_A(example_shape):
    return validate_pairing_matrix(example_shape, EXAMPLE_MATRIX)


@pytest.fixture
def example_At(example_A):
    return normalize(example_A)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
