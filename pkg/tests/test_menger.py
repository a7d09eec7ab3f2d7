import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unavoidable.digraph import Digraph, DigraphError
from unavoidable.generators import gen_flower
from unavoidable.menger import max_disjoint_paths, max_internally_disjoint

from brute import max_internally_disjoint_brute, min_separator_size, reaches
from conftest import cycle, digraphs


def _check_disjoint(paths, shared):
    seen = set()
    for p in paths:
        inner = set(p) - shared
        assert seen.isdisjoint(inner)
        seen |= inner


def test_flower_petals_into_sink():
    D = gen_flower(3)
    res = max_disjoint_paths(D, {2, 3, 4}, 1, excluded={0})
    assert res.paths == ((2, 1), (3, 1), (4, 1))
    assert len(res.separator) == 3 == min_separator_size(D, {2, 3, 4}, 1, {0})


def test_single_route():
    D = Digraph(edges=[(0, 1), (1, 2)])
    res = max_disjoint_paths(D, {0}, 2)
    assert res.paths == ((0, 1, 2),)
    assert res.separator in ({0}, {1})


def test_no_route_after_exclusion():
    D = Digraph(edges=[(0, 1), (1, 2), (2, 0)])
    res = max_disjoint_paths(D, {0}, 2, excluded={1})
    assert res.paths == () and res.separator == frozenset()


def test_precondition_errors():
    D = cycle(3)
    with pytest.raises(DigraphError):
        max_disjoint_paths(D, set(), 0)
    with pytest.raises(DigraphError):
        max_disjoint_paths(D, {0}, 0)
    with pytest.raises(DigraphError):
        max_disjoint_paths(D, {0}, 2, excluded={0})
    with pytest.raises(DigraphError):
        max_disjoint_paths(D, {9}, 2)
    with pytest.raises(DigraphError):
        max_internally_disjoint(D, 1, 1)


def test_internally_disjoint_examples():
    assert len(max_internally_disjoint(gen_flower(3), 0, 1)) == 3
    assert max_internally_disjoint(cycle(5), 0, 2).paths == ((0, 1, 2),)
    K4 = Digraph(edges=[(a, b) for a in range(4) for b in range(4) if a != b])
    res = max_internally_disjoint(K4, 0, 1)
    assert len(res) == 3 and res.direct_edge
    assert (0, 1) in res.paths


@settings(max_examples=200, deadline=None)
@given(digraphs(max_vertices=7), st.data())
def test_duality_against_brute_force(D, data):
    sink = data.draw(st.sampled_from(D.vertices))
    rest = [v for v in D.vertices if v != sink]
    if not rest:
        return
    sources = set(data.draw(st.lists(st.sampled_from(rest), min_size=1, max_size=3)))
    excluded = set(data.draw(st.lists(st.sampled_from([v for v in rest if v not in sources] or [sink]), max_size=2)))
    excluded.discard(sink)
    res = max_disjoint_paths(D, sources, sink, excluded)
    assert len(res.paths) == len(res.separator) == min_separator_size(D, sources, sink, excluded)
    for p in res.paths:
        assert D.is_dipath(p) and p[0] in sources and p[-1] == sink
        assert excluded.isdisjoint(p)
    _check_disjoint(res.paths, {sink})
    assert sink not in res.separator and excluded.isdisjoint(res.separator)
    assert not reaches(D, sources, sink, excluded | res.separator)


@settings(max_examples=200, deadline=None)
@given(digraphs(max_vertices=7), st.data())
def test_internally_disjoint_against_brute_force(D, data):
    if len(D) < 2:
        return
    x, y = data.draw(st.lists(st.sampled_from(D.vertices), min_size=2, max_size=2, unique=True))
    res = max_internally_disjoint(D, x, y)
    assert len(res) == max_internally_disjoint_brute(D, x, y)
    for p in res.paths:
        assert D.is_dipath(p) and p[0] == x and p[-1] == y
    _check_disjoint(res.paths, {x, y})
    assert x not in res.separator and y not in res.separator


@settings(max_examples=100, deadline=None)
@given(digraphs(max_vertices=7), st.data())
def test_adding_an_edge_never_loses_paths(D, data):
    if len(D) < 2:
        return
    x, y = data.draw(st.lists(st.sampled_from(D.vertices), min_size=2, max_size=2, unique=True))
    a, b = data.draw(st.lists(st.sampled_from(D.vertices), min_size=2, max_size=2, unique=True))
    bigger = Digraph(D.vertices, list(D.edges) + [(a, b)]) if not D.has_edge(a, b) else D
    assert len(max_internally_disjoint(bigger, x, y)) >= len(max_internally_disjoint(D, x, y))
