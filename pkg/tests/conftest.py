import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from classgraph.harness import default_spec, generate_corpus, run_corpus  # noqa: E402


def brute_elements(G) -> dict[tuple, int]:
    """Image tuple -> engine index, read straight off the stored permutations."""
    return {G.perm(x).images: x for x in range(G.order)}


def brute_gens(G) -> list[tuple]:
    return [G.perm(g).images for g in G.generators]


def to_indices(index: dict[tuple, int], elems) -> frozenset[int]:
    return frozenset(index[x] for x in elems)


@pytest.fixture(scope="session")
def default_corpus():
    return generate_corpus(default_spec())


@pytest.fixture(scope="session")
def corpus_report():
    return run_corpus(default_spec())


ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line per acceptance criterion."""
    lines = request.config.stash.setdefault(ACCEPTANCE, [])

    def record(number: int, ok: bool, detail: str) -> bool:
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
        lines.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
