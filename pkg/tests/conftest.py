from __future__ import annotations

from hypothesis import strategies as st

from unavoidable.digraph import Digraph
from unavoidable.generators import gen_random_strong


def cycle(n: int) -> Digraph:
    return Digraph(range(n), [(i, (i + 1) % n) for i in range(n)])


@st.composite
def digraphs(draw, max_vertices: int = 8) -> Digraph:
    v = draw(st.integers(1, max_vertices))
    pairs = [(a, b) for a in range(v) for b in range(v) if a != b]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Digraph(range(v), [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def strong_digraphs(draw, min_vertices: int = 1, max_vertices: int = 12) -> Digraph:
    v = draw(st.integers(min_vertices, max_vertices))
    p = draw(st.floats(0.0, 0.6))
    seed = draw(st.integers(0, 2**32))
    return gen_random_strong(v, p, seed)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
