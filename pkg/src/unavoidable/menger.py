"""Vertex-disjoint dipath systems and minimum vertex separators.

Every non-sink vertex is split into an in-node and an out-node joined by a
unit arc; all other arcs are uncapacitated, so a minimum cut consists of
split arcs only and reads off directly as a vertex separator. Augmenting
paths are found breadth-first with neighbours scanned in id order.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

from .digraph import Digraph, DigraphError, Dipath

__all__ = ["DisjointPathResult", "max_disjoint_paths", "max_internally_disjoint"]

_INF = 1 << 30


@dataclass(frozen=True)
class DisjointPathResult:
    paths: tuple[Dipath, ...]
    separator: frozenset[int]
    # set when an x->y edge was counted as a path no separator can cut;
    # the separator then belongs to the instance without that edge
    direct_edge: bool = False

    def __len__(self) -> int:
        return len(self.paths)


class _FlowNet:
    __slots__ = ("head", "cap", "adj")

    def __init__(self, size: int):
        self.head: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(size)]

    def arc(self, a: int, b: int, c: int) -> None:
        self.adj[a].append(len(self.head))
        self.head.append(b)
        self.cap.append(c)
        self.adj[b].append(len(self.head))
        self.head.append(a)
        self.cap.append(0)

    def augment(self, s: int, t: int) -> bool:
        prev = {s: -1}
        queue = deque([s])
        head, cap, adj = self.head, self.cap, self.adj
        while queue:
            u = queue.popleft()
            for e in adj[u]:
                if cap[e] > 0:
                    v = head[e]
                    if v not in prev:
                        prev[v] = e
                        if v == t:
                            queue.clear()
                            break
                        queue.append(v)
        if t not in prev:
            return False
        v = t
        while v != s:
            e = prev[v]
            cap[e] -= 1
            cap[e ^ 1] += 1
            v = head[e ^ 1]
        return True

    def residual_reach(self, s: int) -> set[int]:
        seen = {s}
        todo = [s]
        while todo:
            u = todo.pop()
            for e in self.adj[u]:
                if self.cap[e] > 0 and self.head[e] not in seen:
                    seen.add(self.head[e])
                    todo.append(self.head[e])
        return seen


def max_disjoint_paths(
    D: Digraph, sources: Iterable[int], sink: int, excluded: Iterable[int] = ()
) -> DisjointPathResult:
    """Maximum family of source-to-sink dipaths, disjoint except at the sink.

    Paths start at distinct sources and meet no other source, avoid
    ``excluded`` entirely, and come with a minimum separator of equal size
    drawn from ``V - excluded - {sink}``.
    """
    src = sorted(set(sources))
    exc = set(excluded)
    if not src:
        raise DigraphError("sources must be nonempty")
    D.require(sink, *src, *exc)
    if sink in src:
        raise DigraphError("sink must not be a source")
    if exc & (set(src) | {sink}):
        raise DigraphError("excluded vertices overlap sources or sink")

    verts = [v for v in D.vertices if v not in exc]
    idx = {v: i for i, v in enumerate(verts)}
    # in-node 2i, out-node 2i+1; the sink's in-node is the flow target
    size = 2 * len(verts) + 1
    ss = size - 1
    net = _FlowNet(size)
    for s in src:
        net.arc(ss, 2 * idx[s], _INF)
    for v in verts:
        if v == sink:
            continue
        i = idx[v]
        net.arc(2 * i, 2 * i + 1, 1)
        for w in D.succ(v):
            if w in idx:
                net.arc(2 * i + 1, 2 * idx[w], _INF)
    t = 2 * idx[sink]
    while net.augment(ss, t):
        pass

    paths = []
    src_set = set(src)
    for e in net.adj[ss]:
        if e & 1 or net.cap[e] == _INF:
            continue
        walk = [verts[net.head[e] // 2]]
        node = net.head[e]
        while node != t:
            # in-node -> out-node -> next in-node along a saturated arc
            node = node + 1
            node = next(
                net.head[a] for a in net.adj[node] if not a & 1 and net.cap[a] < _INF
            )
            walk.append(verts[node // 2])
        last_src = max(i for i, v in enumerate(walk) if v in src_set)
        paths.append(tuple(walk[last_src:]))
    paths.sort()

    reach = net.residual_reach(ss)
    sep = frozenset(
        v for v in verts if v != sink and 2 * idx[v] in reach and 2 * idx[v] + 1 not in reach
    )
    return DisjointPathResult(tuple(paths), sep)


def max_internally_disjoint(D: Digraph, x: int, y: int) -> DisjointPathResult:
    """Maximum family of ``x``-``y`` dipaths pairwise sharing only ``x`` and ``y``."""
    D.require(x, y)
    if x == y:
        raise DigraphError("x and y must differ; use dicycle enumeration for x == y")
    direct = D.has_edge(x, y)
    starts = [w for w in D.succ(x) if w != y]
    if starts:
        res = max_disjoint_paths(D, starts, y, excluded=[x])
        paths = [(x,) + p for p in res.paths]
        sep = res.separator
    else:
        paths, sep = [], frozenset()
    if direct:
        paths.append((x, y))
    paths.sort()
    return DisjointPathResult(tuple(paths), sep, direct_edge=direct)
