"""Finite simple digraphs and the path primitives the extractors build on.

Vertices are non-negative integers. Every choice that the underlying
arguments leave open resolves to the lowest id, and every tie between
paths resolves to the lexicographically smallest vertex sequence, so all
results are reproducible.
"""

from __future__ import annotations

import heapq
from collections import deque
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

Vertex = int
Edge = tuple[int, int]
Dipath = tuple[int, ...]
Dicycle = tuple[int, ...]

__all__ = [
    "BfsLayering",
    "Dicycle",
    "Digraph",
    "DigraphError",
    "Dipath",
    "Edge",
    "bfs_layers",
    "exterior_cost",
    "is_strong",
    "min_exterior_cost_dipath",
    "shortest_dipath",
    "strong_components",
]


class DigraphError(ValueError):
    """Malformed digraph input or an id that is not a vertex."""


class Digraph:
    """Immutable finite simple digraph.

    The vertex set is ``vertices`` together with every edge endpoint.
    Loops and repeated edges raise :class:`DigraphError`.
    """

    __slots__ = ("_succ", "_pred", "_edges", "_hash")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Edge] = ()):
        vset = set()
        for v in vertices:
            vset.add(_check_id(v))
        eset: set[Edge] = set()
        for e in edges:
            u, w = (_check_id(x) for x in e)
            if u == w:
                raise DigraphError(f"loop at vertex {u}")
            if (u, w) in eset:
                raise DigraphError(f"parallel edge {u}->{w}")
            eset.add((u, w))
            vset.add(u)
            vset.add(w)
        succ: dict[int, list[int]] = {v: [] for v in sorted(vset)}
        pred: dict[int, list[int]] = {v: [] for v in succ}
        for u, w in sorted(eset):
            succ[u].append(w)
            pred[w].append(u)
        for lst in pred.values():
            lst.sort()
        self._succ = {v: tuple(ws) for v, ws in succ.items()}
        self._pred = {v: tuple(us) for v, us in pred.items()}
        self._edges = frozenset(eset)
        self._hash: int | None = None

    @property
    def vertices(self) -> tuple[int, ...]:
        """Vertices in increasing id order."""
        return tuple(self._succ)

    @property
    def edges(self) -> frozenset[Edge]:
        return self._edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self._edges)

    def succ(self, v: int) -> tuple[int, ...]:
        try:
            return self._succ[v]
        except KeyError:
            raise DigraphError(f"unknown vertex {v}") from None

    def pred(self, v: int) -> tuple[int, ...]:
        try:
            return self._pred[v]
        except KeyError:
            raise DigraphError(f"unknown vertex {v}") from None

    def out_degree(self, v: int) -> int:
        return len(self.succ(v))

    def in_degree(self, v: int) -> int:
        return len(self.pred(v))

    def has_edge(self, u: int, w: int) -> bool:
        return (u, w) in self._edges

    def require(self, *vs: int) -> None:
        for v in vs:
            if v not in self._succ:
                raise DigraphError(f"unknown vertex {v}")

    def subgraph(self, keep: Iterable[int]) -> Digraph:
        """Induced subdigraph on ``keep`` (unknown ids are ignored)."""
        ks = {v for v in keep if v in self._succ}
        return Digraph(ks, ((u, w) for u, w in self._edges if u in ks and w in ks))

    def without_edges(self, drop: Iterable[Edge]) -> Digraph:
        gone = set(drop)
        return Digraph(self._succ, (e for e in self._edges if e not in gone))

    def __len__(self) -> int:
        return len(self._succ)

    def __contains__(self, v: object) -> bool:
        return v in self._succ

    def __iter__(self):
        return iter(self._succ)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._succ.keys() == other._succ.keys() and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((frozenset(self._succ), self._edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Digraph(|V|={len(self)}, |E|={len(self._edges)})"

    def is_dipath(self, seq: Sequence[int]) -> bool:
        if not seq or len(set(seq)) != len(seq) or any(v not in self for v in seq):
            return False
        return all((a, b) in self._edges for a, b in zip(seq, seq[1:]))

    def is_dicycle(self, seq: Sequence[int]) -> bool:
        return len(seq) >= 2 and self.is_dipath(seq) and (seq[-1], seq[0]) in self._edges


def _check_id(v: object) -> int:
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise DigraphError(f"vertex ids must be non-negative integers, got {v!r}")
    return v


def _reach(adj: Mapping[int, Sequence[int]], root: int) -> set[int]:
    seen = {root}
    todo = [root]
    while todo:
        u = todo.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def is_strong(D: Digraph) -> bool:
    if len(D) <= 1:
        return True
    root = D.vertices[0]
    n = len(D)
    return len(_reach(D._succ, root)) == n and len(_reach(D._pred, root)) == n


def strong_components(D: Digraph) -> list[list[int]]:
    """Strongly connected components in topological order of the condensation.

    Iterative Tarjan; each component is sorted.
    """
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in D.vertices:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(D.succ(root)))]
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(D.succ(w))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    # Tarjan emits sinks first
    comps.reverse()
    return comps


@dataclass(frozen=True)
class BfsLayering:
    root: int
    layers: tuple[frozenset[int], ...]
    parent: Mapping[int, int] = field(repr=False)

    @property
    def depth(self) -> int:
        return len(self.layers) - 1

    def distance(self, v: int) -> int | None:
        for i, layer in enumerate(self.layers):
            if v in layer:
                return i
        return None

    def path_to(self, v: int) -> Dipath:
        """Tree path from the root to ``v`` (a shortest dipath)."""
        out = [v]
        while out[-1] != self.root:
            try:
                out.append(self.parent[out[-1]])
            except KeyError:
                raise DigraphError(f"vertex {v} not reachable from {self.root}") from None
        return tuple(reversed(out))


def bfs_layers(D: Digraph, w: int) -> BfsLayering:
    """Distance layers from ``w``; parents are the lowest-id in-neighbour one layer up."""
    D.require(w)
    dist = {w: 0}
    layers = [[w]]
    while True:
        nxt = []
        for u in layers[-1]:
            for x in D._succ[u]:
                if x not in dist:
                    dist[x] = len(layers)
                    nxt.append(x)
        if not nxt:
            break
        layers.append(nxt)
    parent = {}
    for i, layer in enumerate(layers[1:], start=1):
        for x in layer:
            parent[x] = next(u for u in D._pred[x] if dist.get(u) == i - 1)
    return BfsLayering(w, tuple(frozenset(layer) for layer in layers), parent)


def shortest_dipath(
    D: Digraph, s: int, t: int, forbidden_interior: Iterable[int] = ()
) -> Dipath | None:
    """Fewest-edge ``s``-``t`` dipath whose interior avoids ``forbidden_interior``.

    Ties go to the lexicographically smallest vertex sequence.
    """
    D.require(s, t)
    if s == t:
        return (s,)
    bad = set(forbidden_interior)
    bad.add(s)
    # distances to t, only through vertices allowed in the interior
    dist = {t: 0}
    queue = deque([t])
    while queue and s not in dist:
        u = queue.popleft()
        for x in D._pred[u]:
            if x in dist:
                continue
            if x == s:
                dist[x] = dist[u] + 1
                break
            if x not in bad:
                dist[x] = dist[u] + 1
                queue.append(x)
    if s not in dist:
        return None
    path = [s]
    cur = s
    while cur != t:
        want = dist[cur] - 1
        cur = next(x for x in D._succ[cur] if dist.get(x) == want and x != s)
        path.append(cur)
    return tuple(path)


def exterior_cost(path: Sequence[int], free_edges: Iterable[Edge]) -> int:
    """Number of edges of ``path`` outside ``free_edges``."""
    free = free_edges if isinstance(free_edges, (set, frozenset)) else set(free_edges)
    return sum((a, b) not in free for a, b in zip(path, path[1:]))


def min_exterior_cost_dipath(
    D: Digraph,
    s: int,
    targets: Sequence[int],
    forbidden_interior: Iterable[int] = (),
    free_edges: Iterable[Edge] = (),
) -> tuple[Dipath, int] | None:
    """Route from ``s`` to the highest-priority reachable target.

    ``targets`` is in priority order. The chosen target is the first one
    reachable by a dipath whose interior avoids ``forbidden_interior``;
    among those dipaths the result minimises the number of edges outside
    ``free_edges``, then the number of edges, then the vertex sequence.
    Returns ``(path, target)`` or None if no target is reachable.
    """
    targets = list(targets)
    if not targets:
        raise DigraphError("targets must be nonempty")
    D.require(s, *targets)
    bad = set(forbidden_interior)
    bad.add(s)
    free = free_edges if isinstance(free_edges, (set, frozenset)) else set(free_edges)

    # forward sweep: which vertices are reachable with a conforming interior
    reached = {s}
    todo = [s]
    while todo:
        u = todo.pop()
        if u != s and u in bad:
            continue
        for x in D._succ[u]:
            if x not in reached:
                reached.add(x)
                todo.append(x)
    target = next((t for t in targets if t != s and t in reached), None)
    if target is None:
        return None

    # reverse Dijkstra on (exterior edges, edges) towards the target
    dist: dict[int, tuple[int, int]] = {target: (0, 0)}
    heap = [(0, 0, target)]
    done = set()
    while heap:
        c, ln, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        if u == s:
            continue
        if u != target and u in bad:
            continue
        for x in D._pred[u]:
            if x != s and x in bad:
                continue
            cand = (c + ((x, u) not in free), ln + 1)
            if x not in dist or cand < dist[x]:
                dist[x] = cand
                heapq.heappush(heap, (cand[0], cand[1], x))
    path = [s]
    cur = s
    while cur != target:
        c, ln = dist[cur]
        for x in D._succ[cur]:
            if x == s or x not in dist or (x != target and x in bad):
                continue
            step = (cur, x) not in free
            if dist[x] == (c - step, ln - 1):
                cur = x
                break
        path.append(cur)
    return tuple(path), target
