"""Exhaustive oracles for tiny digraphs.

These share no code with the extractors beyond the Digraph container:
they enumerate every simple dicycle or dipath and search directly.
"""

from __future__ import annotations

from collections.abc import Iterator

from .digraph import Dicycle, Digraph, Dipath

__all__ = [
    "OracleGuardError",
    "enumerate_dicycles",
    "enumerate_dipaths",
    "oracle_has_certificate",
    "oracle_longest_dicycle",
]

MAX_CYCLE_VERTICES = 14
MAX_CERT_VERTICES = 10
MAX_CERT_PARAM = 4


class OracleGuardError(ValueError):
    pass


def enumerate_dicycles(D: Digraph) -> Iterator[Dicycle]:
    """Every simple dicycle once, rotated to start at its smallest vertex."""
    for s in D.vertices:
        path = [s]
        on = {s}
        stack = [iter(D.succ(s))]
        while stack:
            w = next(stack[-1], None)
            if w is None:
                stack.pop()
                on.discard(path.pop())
                continue
            if w == s:
                if len(path) >= 2:
                    yield tuple(path)
            elif w > s and w not in on:
                path.append(w)
                on.add(w)
                stack.append(iter(D.succ(w)))


def enumerate_dipaths(D: Digraph, s: int, t: int) -> Iterator[Dipath]:
    """Every simple s-t dipath with at least one edge."""
    path = [s]
    on = {s}
    stack = [iter(D.succ(s))]
    while stack:
        w = next(stack[-1], None)
        if w is None:
            stack.pop()
            on.discard(path.pop())
            continue
        if w in on:
            continue
        if w == t:
            yield tuple(path) + (t,)
            continue
        path.append(w)
        on.add(w)
        stack.append(iter(D.succ(w)))


def oracle_longest_dicycle(D: Digraph) -> Dicycle | None:
    if len(D) > MAX_CYCLE_VERTICES:
        raise OracleGuardError(f"oracle limited to {MAX_CYCLE_VERTICES} vertices")
    best = None
    for c in enumerate_dicycles(D):
        if best is None or len(c) > len(best):
            best = c
    return best


def _has_semi_chain(short: list[Dicycle], k: int) -> bool:
    sets = [frozenset(c) for c in short]

    def extend(chain: list[int]) -> bool:
        if len(chain) == k:
            return True
        for idx in range(len(short)):
            if idx in chain:
                continue
            s = sets[idx]
            if s.isdisjoint(sets[chain[-1]]):
                continue
            if any(not s.isdisjoint(sets[c]) for c in chain[:-1]):
                continue
            if extend(chain + [idx]):
                return True
        return False

    return any(extend([i]) for i in range(len(short)))


def _max_packing(interiors: list[frozenset[int]], need: int) -> bool:
    """Whether ``need`` of the sets are pairwise disjoint."""
    if need <= 0:
        return True

    def go(start: int, used: frozenset[int], left: int) -> bool:
        if left == 0:
            return True
        if len(interiors) - start < left:
            return False
        for i in range(start, len(interiors)):
            if used.isdisjoint(interiors[i]) and go(i + 1, used | interiors[i], left - 1):
                return True
        return False

    return go(0, frozenset(), need)


def _has_system(D: Digraph, n: int, m: int, cycles: list[Dicycle]) -> bool:
    # x == y: m + 1 dicycles through x, each under n vertices, sharing only x
    for x in D.vertices:
        through = [frozenset(c) - {x} for c in cycles if x in c and len(c) < n]
        if _max_packing(through, m + 1):
            return True
    # x != y: one y-x dipath Q and m x-y dipaths P, internally disjoint,
    # with |P| + |Q| - 2 < n
    for x in D.vertices:
        for y in D.vertices:
            if x == y:
                continue
            backs = [q for q in enumerate_dipaths(D, y, x) if len(q) <= n]
            if not backs:
                continue
            fwd = [p for p in enumerate_dipaths(D, x, y) if len(p) <= n]
            for q in backs:
                q_in = frozenset(q[1:-1])
                ok = [
                    frozenset(p[1:-1])
                    for p in fwd
                    if len(p) + len(q) - 2 < n and q_in.isdisjoint(p[1:-1])
                ]
                if _max_packing(ok, m):
                    return True
    return False


def oracle_has_certificate(D: Digraph, n: int, k: int) -> bool:
    """Exact test for a long dicycle, narrow semi-chain, or short (m, 1)-system."""
    if len(D) > MAX_CERT_VERTICES or n > MAX_CERT_PARAM or k > MAX_CERT_PARAM:
        raise OracleGuardError(
            f"oracle limited to {MAX_CERT_VERTICES} vertices and n, k <= {MAX_CERT_PARAM}"
        )
    cycles = list(enumerate_dicycles(D))
    if any(len(c) >= n for c in cycles):
        return True
    short = [c for c in cycles if len(c) < n]
    if _has_semi_chain(short, k):
        return True
    return _has_system(D, n, (k - 1) * n + 3, cycles)

