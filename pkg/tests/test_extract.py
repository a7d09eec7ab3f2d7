import threading

import pytest

from unavoidable import (
    BelowThreshold,
    Digraph,
    Fan,
    LongDicycle,
    LongDipath,
    NarrowSemiChain,
    NotStrongError,
    OutStar,
    ShortSystem,
    dipath_or_fan,
    long_dipath_or_out_star,
    semi_chain_along,
    system_from_fan,
    unavoidable,
    unavoidable_threshold,
    verify_certificate,
)
from unavoidable.digraph import DigraphError
from unavoidable.extract import Cancelled, fan_degree, threshold
from unavoidable.generators import gen_flower, gen_triangle_chain
from unavoidable.oracle import oracle_longest_dicycle

from conftest import cycle


def test_constants():
    assert [fan_degree(n) for n in (2, 3, 4, 5)] == [2, 3, 12, 80]
    assert threshold(3, 3) == 13
    assert unavoidable_threshold(3, 1) == 13
    assert unavoidable_threshold(2, 1) == threshold(2, 2) == 3


class TestLongDipathOrOutStar:
    def test_six_cycle(self):
        assert long_dipath_or_out_star(cycle(6), 3, 3) == LongDipath((0, 1, 2, 3))

    def test_bidirected_star(self):
        D = Digraph(edges=[(0, i) for i in (1, 2, 3)] + [(i, 0) for i in (1, 2, 3)])
        assert long_dipath_or_out_star(D, 3, 3) == OutStar(0, frozenset({1, 2, 3}))

    def test_three_cycle(self):
        assert long_dipath_or_out_star(cycle(3), 3, 3) == BelowThreshold(13)

    def test_rejects_non_strong(self):
        with pytest.raises(NotStrongError):
            long_dipath_or_out_star(Digraph(edges=[(0, 1)]), 2, 2)


class TestDipathOrFan:
    def test_six_cycle(self):
        w = dipath_or_fan(cycle(6), 3)
        assert isinstance(w, LongDipath) and w.length >= 3

    def test_three_petal_flower_has_long_dipath(self):
        # u1 -> y -> x -> u2 has length 3
        assert dipath_or_fan(gen_flower(3), 3) == LongDipath((2, 1, 0, 3))

    def test_flower_fan(self):
        w = dipath_or_fan(gen_flower(12), 4)
        assert isinstance(w, Fan) and (w.x, w.y) == (0, 1)
        assert w.paths == tuple((0, u, 1) for u in range(2, 14))

    def test_three_cycle(self):
        assert dipath_or_fan(cycle(3), 3) == BelowThreshold(13)


class TestSemiChainAlong:
    def test_triangle_chain(self):
        D = gen_triangle_chain(4)
        cert = semi_chain_along(D, tuple(range(9)), 4, 2)
        assert cert == NarrowSemiChain(
            cert.chain, ((6, 7, 8), (4, 5, 6), (2, 3, 4), (0, 1, 2))
        )
        assert cert.chain.cycles == ((6, 7, 8), (4, 5, 6))
        assert verify_certificate(D, cert, 4, 2)

    def test_closing_the_whole_cycle(self):
        D = cycle(7)
        assert semi_chain_along(D, tuple(range(7)), 3, 2) == LongDicycle(tuple(range(7)))

    def test_preconditions(self):
        D = gen_triangle_chain(1)
        with pytest.raises(DigraphError):
            semi_chain_along(D, (0, 1, 2), 4, 1)
        with pytest.raises(DigraphError):
            semi_chain_along(D, (0, 2, 1), 2, 1)


class TestSystemFromFan:
    def test_flower(self):
        D = gen_flower(8)
        fan = Fan(0, 1, tuple((0, u, 1) for u in range(2, 10)))
        cert = system_from_fan(D, fan, 4, 2)
        assert isinstance(cert, ShortSystem)
        assert cert.system.backward == ((1, 0),) and len(cert.system.forward) == 8
        assert verify_certificate(D, cert, 4, 2)

    def _shared_petal(self, petals):
        # y -> a -> x is the only return route and a = u1 also sits in petal 1
        edges = [(1, 2), (2, 0)]
        edges += [e for u in range(2, petals + 2) for e in ((0, u), (u, 1))]
        D = Digraph(edges=edges)
        return D, Fan(0, 1, tuple((0, u, 1) for u in range(2, petals + 2)))

    def test_return_route_filters_petal(self):
        D, fan = self._shared_petal(5)
        cert = system_from_fan(D, fan, 5, 1)
        assert cert.system.backward == ((1, 2, 0),)
        assert cert.system.forward == tuple((0, u, 1) for u in range(3, 7))
        assert verify_certificate(D, cert, 5, 1)

    def test_return_route_closes_long_cycle(self):
        D, fan = self._shared_petal(4)
        assert system_from_fan(D, fan, 4, 1) == LongDicycle((0, 3, 1, 2))

    def test_dicycles_with_small_n(self):
        D = Digraph(edges=[(0, 1), (1, 0), (0, 2), (2, 0)])
        fan = Fan(0, 0, ((0, 1), (0, 2)))
        assert system_from_fan(D, fan, 2, 1) == LongDicycle((0, 1))

    def test_too_small_fan(self):
        with pytest.raises(ValueError):
            system_from_fan(gen_flower(2), Fan(0, 1, ((0, 2, 1), (0, 3, 1))), 3, 1)


class TestUnavoidable:
    def test_four_cycle(self):
        assert unavoidable(cycle(4), 4, 1) == LongDicycle((0, 1, 2, 3))

    def test_triangle_chain(self):
        cert = unavoidable(gen_triangle_chain(4), 4, 2)
        assert isinstance(cert, NarrowSemiChain)
        assert len(cert.chain.cycles) == 2 and len(cert.constructed) == 4
        assert len(oracle_longest_dicycle(gen_triangle_chain(4))) == 3

    def test_flower(self):
        cert = unavoidable(gen_flower(8), 4, 2)
        assert isinstance(cert, ShortSystem) and len(cert.system.forward) >= 7

    def test_six_petals_close_a_triangle(self):
        # x -> u -> y -> x already has 3 vertices
        cert = unavoidable(gen_flower(6), 3, 2)
        assert isinstance(cert, LongDicycle) and len(cert.cycle) == 3

    def test_two_uses_shortest_cycle(self):
        assert unavoidable(gen_flower(3), 2, 5) == LongDicycle((0, 2, 1))
        assert unavoidable(Digraph([0]), 2, 1) == BelowThreshold(unavoidable_threshold(2, 1))

    def test_rejects_bad_input(self):
        with pytest.raises(NotStrongError):
            unavoidable(Digraph(edges=[(0, 1)]), 3, 1)
        with pytest.raises(ValueError):
            unavoidable(cycle(3), 1, 1)

    def test_cancellation(self):
        token = threading.Event()
        token.set()
        with pytest.raises(Cancelled):
            unavoidable(gen_flower(12), 4, 1, cancel=token)
