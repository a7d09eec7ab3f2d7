"""Constructive extraction of unavoidable structures in strong digraphs.

Three layers, each producing witnesses that the verifiers in
:mod:`unavoidable.certificates` can check on their own:

* :func:`long_dipath_or_out_star` -- a long dipath or a vertex of large
  out-degree, unless the digraph is small;
* :func:`dipath_or_fan` -- a long dipath or a fan of many internally
  disjoint dipaths out of one vertex;
* :func:`unavoidable` -- a long dicycle, a narrow semi-chain of dicycles,
  or a short (m, 1)-system of dipaths.

Whenever a construction stumbles on a long dipath or dicycle it returns
that structure at once. A failed internal invariant raises
:class:`ProofInvariantViolation` instead of being repaired.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Protocol, Union

from .certificates import (
    BelowThreshold,
    Certificate,
    LongDicycle,
    NarrowSemiChain,
    PathSystem,
    SemiChain,
    ShortSystem,
    system_threshold,
)
from .digraph import (
    Dicycle,
    Digraph,
    DigraphError,
    Dipath,
    bfs_layers,
    is_strong,
    min_exterior_cost_dipath,
    shortest_dipath,
)
from .menger import max_disjoint_paths, max_internally_disjoint

log = logging.getLogger(__name__)

__all__ = [
    "Cancelled",
    "Fan",
    "FanWitness",
    "LongDipath",
    "NotStrongError",
    "OutStar",
    "ProofInvariantViolation",
    "WeakWitness",
    "dipath_or_fan",
    "fan_degree",
    "long_dipath_or_out_star",
    "semi_chain_along",
    "system_from_fan",
    "threshold",
    "unavoidable",
    "unavoidable_threshold",
]


class NotStrongError(DigraphError):
    """The input digraph is not strongly connected."""


class ProofInvariantViolation(RuntimeError):
    """A step that the underlying argument guarantees did not hold."""


class Cancelled(RuntimeError):
    pass


class CancelToken(Protocol):
    def is_set(self) -> bool: ...


@dataclass(frozen=True)
class LongDipath:
    path: Dipath

    @property
    def length(self) -> int:
        return len(self.path) - 1


@dataclass(frozen=True)
class OutStar:
    center: int
    out_neighbors: frozenset[int]


@dataclass(frozen=True)
class Fan:
    """At least n internally disjoint x-y dipaths (dicycles through x if x == y)."""

    x: int
    y: int
    paths: tuple[Dipath, ...]


WeakWitness = Union[LongDipath, OutStar, BelowThreshold]
FanWitness = Union[LongDipath, Fan, BelowThreshold]


def fan_degree(n: int) -> int:
    """Out-degree that forces a fan of n dipaths when no dipath of length n exists."""
    return n * (n - 1) ** max(n - 3, 0)


def threshold(degree: int, n: int) -> int:
    """sum_{i<n} degree**i: more vertices force depth n or out-degree ``degree``."""
    return sum(degree**i for i in range(n))


def unavoidable_threshold(n: int, k: int) -> int:
    """Size above which :func:`unavoidable` never reports BelowThreshold."""
    return threshold(fan_degree(n * k), n * k)


def _check_cancel(cancel: CancelToken | None) -> None:
    if cancel is not None and cancel.is_set():
        raise Cancelled("extraction cancelled")


def _require_strong(D: Digraph) -> None:
    if not is_strong(D):
        raise NotStrongError("digraph is not strongly connected")


# -- weak dichotomy --------------------------------------------------------


def _deepest_bfs(D: Digraph, n: int | None = None):
    """Scan roots in id order; stop at the first layering of depth >= n."""
    best = None
    for root in D.vertices:
        lay = bfs_layers(D, root)
        if n is not None and lay.depth >= n:
            return lay
        if best is None or lay.depth > best.depth:
            best = lay
    return best


def long_dipath_or_out_star(D: Digraph, n: int, degree: int) -> WeakWitness:
    if n < 1 or degree < 1:
        raise ValueError("n and degree must be positive")
    _require_strong(D)
    lay = _deepest_bfs(D, n)
    if lay.depth >= n:
        return LongDipath(lay.path_to(min(lay.layers[n])))
    for v in D.vertices:
        if D.out_degree(v) >= degree:
            return OutStar(v, frozenset(D.succ(v)))
    return BelowThreshold(threshold(degree, n))


# -- dipath or fan ---------------------------------------------------------


def _fan_rounds(D: Digraph, v: int, n: int, cancel) -> Fan | LongDipath | None:
    """Menger rounds from the out-neighbourhood of ``v``, shrinking by pigeonhole.

    Each round either finds n disjoint dipaths into the current target, or
    takes the separator vertex met by most per-source shortest dipaths as
    the next target and restricts to the initial segments ending there.
    Returns None when the rounds stall.
    """
    out_v = set(D.succ(v))
    rest = [u for u in D.vertices if u != v and u not in out_v]
    target = rest[0] if rest else v
    sources = sorted(out_v)
    work = D
    for _ in range(max(n - 2, 1)):
        _check_cancel(cancel)
        srcs = [w for w in sources if w != target and w in work]
        paths: list[Dipath] = []
        if target != v and target in out_v:
            paths.append((v, target))
        if not srcs:
            return None
        excl = [v] if target != v and v in work else []
        res = max_disjoint_paths(work, srcs, target, excl)
        for p in res.paths:
            paths.append((v,) + (p if target != v else p[:-1]))
        if len(paths) >= n:
            return Fan(v, target, tuple(sorted(paths)))
        if not res.separator:
            return None
        segments: dict[int, Dipath] = {}
        for w in srcs:
            p = shortest_dipath(work, w, target, [v])
            if p is None:
                continue
            walk = (v,) + (p if target != v else p[:-1])
            if len(walk) - 1 >= n:
                return LongDipath(walk)
            segments[w] = p
        hits = Counter(s for p in segments.values() for s in res.separator.intersection(p))
        if not hits:
            return None
        s = min(hits, key=lambda u: (-hits[u], u))
        cut = {w: p[: p.index(s) + 1] for w, p in segments.items() if s in p}
        keep = {u for p in cut.values() for u in p}
        work = D.subgraph(keep)
        sources = sorted(w for w in cut if w != s)
        target = s
    return None


def _fan_any_target(D: Digraph, v: int, n: int, cancel) -> Fan | None:
    """First target (by id, then ``v`` itself) with n internally disjoint dipaths from ``v``."""
    for y in D.vertices:
        if y == v or D.in_degree(y) < n:
            continue
        _check_cancel(cancel)
        res = max_internally_disjoint(D, v, y)
        if len(res.paths) >= n:
            return Fan(v, y, res.paths)
    if D.in_degree(v) >= n and D.succ(v):
        res = max_disjoint_paths(D, D.succ(v), v)
        if len(res.paths) >= n:
            return Fan(v, v, tuple(sorted((v,) + p[:-1] for p in res.paths)))
    return None


def _find_long_dipath(D: Digraph, n: int, cancel) -> Dipath | None:
    """Depth-first search for a dipath with n edges; exponential, last resort only."""
    for root in D.vertices:
        _check_cancel(cancel)
        path = [root]
        on = {root}
        stack = [iter(D.succ(root))]
        while stack:
            nxt = next((w for w in stack[-1] if w not in on), None)
            if nxt is None:
                stack.pop()
                on.discard(path.pop())
                continue
            path.append(nxt)
            on.add(nxt)
            if len(path) > n:
                return tuple(path)
            stack.append(iter(D.succ(nxt)))
    return None


def dipath_or_fan(D: Digraph, n: int, *, cancel: CancelToken | None = None) -> FanWitness:
    """A dipath of length >= n, a fan of >= n internally disjoint dipaths, or BelowThreshold.

    BelowThreshold only when ``|V(D)| <= threshold(fan_degree(n), n)``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    weak = long_dipath_or_out_star(D, n, fan_degree(n))
    if isinstance(weak, LongDipath):
        return weak
    if isinstance(weak, OutStar):
        v = weak.center
        found = _fan_rounds(D, v, n, cancel)
        if found is None:
            log.debug("fan rounds stalled at center %d; scanning targets", v)
            found = _fan_any_target(D, v, n, cancel)
        if found is None:
            path = _find_long_dipath(D, n, cancel)
            if path is None:
                raise ProofInvariantViolation(
                    f"vertex {v} has out-degree {len(weak.out_neighbors)} but neither a fan "
                    f"of {n} dipaths nor a dipath of length {n} exists"
                )
            found = LongDipath(path)
        return found
    # below the bound nothing is promised; still try the busiest vertex
    v = min(D.vertices, key=lambda u: (-D.out_degree(u), u))
    if D.out_degree(v) >= n:
        found = _fan_any_target(D, v, n, cancel)
        if found is not None:
            return found
    return weak


# -- semi-chains along a long dipath ---------------------------------------


def _cycles_along(
    D: Digraph, P: Dipath, n: int, cancel
) -> tuple[Dicycle | None, list[Dicycle]]:
    """Build dicycles backwards along ``P`` until they cover it.

    Returns ``(long_cycle, [])`` as soon as a dicycle with >= n vertices
    appears, otherwise ``(None, cycles)`` after checking the semi-chain
    pattern on the whole sequence.
    """
    pos = {v: i for i, v in enumerate(P)}
    free = frozenset(zip(P, P[1:]))
    covered: set[int] = set()
    cycles: list[Dicycle] = []
    cur = len(P) - 1
    while not covered.issuperset(P):
        _check_cancel(cancel)
        if cur == 0:
            raise ProofInvariantViolation("dicycles stopped before covering the dipath")
        found = min_exterior_cost_dipath(
            D,
            P[cur],
            P[:cur],
            forbidden_interior=P[: cur + 1],
            free_edges=free if cycles else (),
        )
        if found is None:
            raise ProofInvariantViolation(f"no return route from {P[cur]} to the dipath")
        q, t = found
        cycle = P[pos[t] : cur + 1] + q[1:-1]
        if len(cycle) >= n:
            return cycle, []
        cycles.append(cycle)
        covered.update(cycle)
        cur = pos[t]
    sets = [frozenset(c) for c in cycles]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if (j == i + 1) == sets[i].isdisjoint(sets[j]):
                raise ProofInvariantViolation(
                    f"constructed dicycles {i} and {j} break the semi-chain pattern"
                )
    return None, cycles


def semi_chain_along(
    D: Digraph, P: Dipath, n: int, k: int, *, cancel: CancelToken | None = None
) -> Certificate:
    """Long dicycle or n-narrow semi-chain of k dicycles along a dipath of length >= nk."""
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    P = tuple(P)
    if not D.is_dipath(P):
        raise DigraphError("P is not a dipath of D")
    if len(P) - 1 < n * k:
        raise DigraphError(f"P has length {len(P) - 1} < {n * k}")
    _require_strong(D)
    long_cycle, cycles = _cycles_along(D, P, n, cancel)
    if long_cycle is not None:
        return LongDicycle(long_cycle)
    if len(cycles) < k:
        raise ProofInvariantViolation(f"only {len(cycles)} dicycles cover a dipath of length {len(P) - 1}")
    return NarrowSemiChain(SemiChain(tuple(cycles[:k])), tuple(cycles))


# -- short systems from a fan ----------------------------------------------


def _interior(p: Dipath) -> frozenset[int]:
    return frozenset(p[1:-1])


def system_from_fan(D: Digraph, fan: Fan, n: int, k: int) -> Certificate:
    """Turn a fan of >= nk internally disjoint dipaths into a certificate."""
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    D.require(fan.x, fan.y)
    if len(fan.paths) < n * k:
        raise ValueError(f"fan has {len(fan.paths)} < {n * k} dipaths")
    x, y = fan.x, fan.y
    if x == y:
        cycles = list(fan.paths)
        if n <= 2:
            return LongDicycle(cycles[0])
        for c in cycles:
            if len(c) >= n:
                return LongDicycle(c)
        if len(cycles) - 1 >= system_threshold(n, k):
            return ShortSystem(PathSystem(x, x, tuple(cycles[:-1]), (cycles[-1],)))
        # n = 3: nk dicycles give only nk - 1 forward members
        if k <= 2:
            return NarrowSemiChain(SemiChain(tuple(cycles[:k])), tuple(cycles))
        bound = unavoidable_threshold(n, k)
        if len(D) <= bound:
            return BelowThreshold(bound)
        raise ProofInvariantViolation(f"{len(cycles)} dicycles through {x} are too few for a system")

    q = shortest_dipath(D, y, x)
    if q is None:
        raise NotStrongError(f"no dipath from {y} to {x}")
    q_in = _interior(q)
    kept = [p for p in fan.paths if q_in.isdisjoint(p[1:-1])]
    if not kept:
        raise ProofInvariantViolation("the return dipath meets the interior of every fan dipath")
    for p in kept:
        cycle = p + q[1:-1]
        if len(cycle) >= n:
            return LongDicycle(cycle)
    m = len(kept)
    if m < system_threshold(n, k):
        raise ProofInvariantViolation(f"only {m} fan dipaths avoid the return dipath")
    return ShortSystem(PathSystem(x, y, tuple(kept), (q,)))


# -- the trichotomy --------------------------------------------------------


def _shortest_cycle_through(D: Digraph, v: int) -> Dicycle | None:
    best = None
    for w in D.succ(v):
        p = shortest_dipath(D, w, v)
        if p is not None and (best is None or len(p) < len(best)):
            best = p
    return None if best is None else (v,) + best[:-1]


def unavoidable(D: Digraph, n: int, k: int, *, cancel: CancelToken | None = None) -> Certificate:
    """A dicycle on >= n vertices, an n-narrow semi-chain of k dicycles, or an
    n-short (m, 1)-system with m >= (k-1)n + 3.

    BelowThreshold only if ``|V(D)| <= unavoidable_threshold(n, k)``.
    """
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    _require_strong(D)
    bound = unavoidable_threshold(n, k)
    if n == 2:
        cycle = _shortest_cycle_through(D, D.vertices[0]) if len(D) >= 2 else None
        return LongDicycle(cycle) if cycle else BelowThreshold(bound)

    found = dipath_or_fan(D, n * k, cancel=cancel)
    if isinstance(found, LongDipath):
        return semi_chain_along(D, found.path, n, k, cancel=cancel)
    if isinstance(found, Fan):
        return system_from_fan(D, found, n, k)

    # small digraph: try the dicycle construction along the deepest BFS path
    lay = _deepest_bfs(D)
    if lay.depth >= 1:
        long_cycle, cycles = _cycles_along(D, lay.path_to(min(lay.layers[-1])), n, cancel)
        if long_cycle is not None:
            return LongDicycle(long_cycle)
        if len(cycles) >= k:
            return NarrowSemiChain(SemiChain(tuple(cycles[:k])), tuple(cycles))
    return BelowThreshold(bound)
