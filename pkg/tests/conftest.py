import pytest

from pstwalk import catalog

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion and echo it."""

    def record(label: str, ok: bool, detail: str = "") -> bool:
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def small_drgs():
    """Distance-regular catalog graphs with integral spectra, small enough for exact projectors."""
    return {
        "K2": catalog.complete_graph(2),
        "K4": catalog.complete_graph(4),
        "C4": catalog.cycle(4),
        "C6": catalog.cycle(6),
        "Q3": catalog.hypercube(3),
        "Q4": catalog.hypercube(4),
        "CP3": catalog.cocktail_party(3),
        "CP4": catalog.cocktail_party(4),
        "Petersen": catalog.petersen(),
        "Had4": catalog.hadamard_graph(catalog.sylvester_hadamard(4)),
        "Cover4": catalog.hadamard_cover(catalog.symmetric_constant_diagonal_hadamard(4)),
        "Cover16": catalog.hadamard_cover(catalog.symmetric_constant_diagonal_hadamard(16)),
        "OA(4,2)": catalog.orthogonal_array_graph(4, 2),
        "OA(5,3)": catalog.orthogonal_array_graph(5, 3),
    }
