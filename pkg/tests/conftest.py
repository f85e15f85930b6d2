import pytest

from zpjoin.explore import GenConfig, random_free_complex
from zpjoin.gfp import PrimeField


def random_complexes(p, seed, count, **kw):
    cfg = GenConfig(PrimeField(p), seed=seed, trials=1, **kw)
    return [random_free_complex(cfg, t) for t in range(count)]


@pytest.fixture(scope="session")
def random_p3():
    return random_complexes(3, 11, 40)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
