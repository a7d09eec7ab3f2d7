"""Instance generators: random strong digraphs and finite grid truncations.

Ray grids use the row-major id ``(i - 1) * h + (j - 1)`` for the j-th
vertex of the i-th ray (both 1-based), so ray ``i`` occupies the id block
``[(i - 1) * h, i * h)``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from enum import Enum

from .digraph import Digraph, strong_components

__all__ = [
    "Direction",
    "Family",
    "GeneratorSpec",
    "fuzz_digraph",
    "gen_bidirected_quarter_grid",
    "gen_circular_grid",
    "gen_complete_ray_prefix",
    "gen_cyclic_quarter_grid",
    "gen_flower",
    "gen_hexagonal_grid",
    "gen_random_strong",
    "gen_stein_example",
    "gen_triangle_chain",
    "ray_id",
]


def ray_id(i: int, j: int, h: int) -> int:
    return (i - 1) * h + (j - 1)


def _rays(w: int, h: int) -> list[tuple[int, int]]:
    return [(ray_id(i, j, h), ray_id(i, j + 1, h)) for i in range(1, w + 1) for j in range(1, h)]


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def gen_random_strong(v: int, edge_prob: float, seed: int) -> Digraph:
    """Random digraph on ``range(v)`` made strong by deterministic repair.

    Each ordered pair is kept with probability ``edge_prob``. While the
    digraph is not strong, one edge is added from a seeded-random vertex of
    the last condensation component to one of the first. Not uniform over
    strong digraphs.
    """
    _need(v >= 1, "v must be at least 1")
    _need(0.0 <= edge_prob <= 1.0, "edge_prob must lie in [0, 1]")
    rng = random.Random(seed)
    edges = {(a, b) for a in range(v) for b in range(v) if a != b and rng.random() < edge_prob}
    while True:
        D = Digraph(range(v), edges)
        comps = strong_components(D)
        if len(comps) == 1:
            return D
        edges.add((rng.choice(comps[-1]), rng.choice(comps[0])))


def fuzz_digraph(seed: int, vmin: int = 5, vmax: int = 40) -> Digraph:
    """Seed-indexed fuzz instance: size and density are drawn from the seed."""
    rng = random.Random(seed)
    v = rng.randint(vmin, vmax)
    p = rng.uniform(0.0, 0.35)
    return gen_random_strong(v, p, seed)


def gen_flower(m: int) -> Digraph:
    """x = 0, y = 1 and petals u_i = i + 1 with x -> u_i -> y, plus y -> x."""
    _need(m >= 1, "m must be at least 1")
    edges = [(1, 0)]
    for i in range(1, m + 1):
        edges += [(0, i + 1), (i + 1, 1)]
    return Digraph(range(m + 2), edges)


def gen_triangle_chain(k: int) -> Digraph:
    """Triangles 2i -> 2i+1 -> 2i+2 -> 2i for i < k, consecutive ones sharing a vertex."""
    _need(k >= 1, "k must be at least 1")
    edges = []
    for i in range(k):
        a, b, c = 2 * i, 2 * i + 1, 2 * i + 2
        edges += [(a, b), (b, c), (c, a)]
    return Digraph(range(2 * k + 1), edges)


def gen_hexagonal_grid(n: int, h: int) -> Digraph:
    """Hexagonal grid of width n, rays cut to h vertices.

    Ray i sends r^i_j -> r^{i+1}_j when (i odd, j = 1 mod 4) or
    (i even, j = 2 mod 4), and receives r^{i+1}_j -> r^i_j when
    (i odd, j = 3 mod 4) or (i even, j = 0 mod 4).
    """
    _need(n >= 1 and h >= 1, "need n >= 1 and h >= 1")
    edges = _rays(n, h)
    for i in range(1, n):
        for j in range(1, h + 1):
            a, b = ray_id(i, j, h), ray_id(i + 1, j, h)
            if (i % 2 == 1 and j % 4 == 1) or (i % 2 == 0 and j % 4 == 2):
                edges.append((a, b))
            elif (i % 2 == 1 and j % 4 == 3) or (i % 2 == 0 and j % 4 == 0):
                edges.append((b, a))
    return Digraph(range(n * h), edges)


def gen_circular_grid(n: int, h: int) -> Digraph:
    """Circular grid of width n, rays cut to h vertices."""
    _need(n >= 2 and h >= 2, "need n >= 2 and h >= 2")
    edges = _rays(n, h)
    for j in range(1, h + 1):
        if j % 2 == 1:
            edges.append((ray_id(1, j, h), ray_id(2, j, h)))
            if j + 1 <= h:
                for i in range(2, n):
                    edges.append((ray_id(i, j + 1, h), ray_id(i + 1, j, h)))
        else:
            edges.append((ray_id(n, j, h), ray_id(1, j, h)))
    return Digraph(range(n * h), edges)


def gen_bidirected_quarter_grid(w: int, h: int, suppress: bool = False) -> Digraph:
    """w rays of h vertices with x^i_{4j+7} -> x^{i+1}_{4j+1} and x^{i+1}_{4j+2} -> x^i_{4j+8}.

    With ``suppress``, ray vertices of in- and out-degree 1 whose neighbours
    all lie on their own ray are contracted away (remaining ids unchanged).
    """
    _need(w >= 1 and h >= 8, "need w >= 1 and h >= 8")
    cross = []
    for i in range(1, w):
        j = 0
        while 4 * j + 8 <= h:
            cross.append((ray_id(i, 4 * j + 7, h), ray_id(i + 1, 4 * j + 1, h)))
            cross.append((ray_id(i + 1, 4 * j + 2, h), ray_id(i, 4 * j + 8, h)))
            j += 1
    D = Digraph(range(w * h), _rays(w, h) + cross)
    if not suppress:
        return D
    edges = list(cross)
    keep = []
    for i in range(1, w + 1):
        ray = [ray_id(i, j, h) for j in range(1, h + 1)]
        block = set(ray)
        kept = [
            v
            for v in ray
            if not (
                D.in_degree(v) == 1
                and D.out_degree(v) == 1
                and D.pred(v)[0] in block
                and D.succ(v)[0] in block
            )
        ]
        edges += list(zip(kept, kept[1:]))
        keep += kept
    return Digraph(keep, edges)


class Direction(str, Enum):
    ASCENDING = "ascending"
    DESCENDING = "descending"


def gen_cyclic_quarter_grid(direction: str | Direction, w: int, h: int) -> Digraph:
    """Ascending or descending cyclically directed quarter-grid on w rays of h vertices."""
    direction = Direction(direction)
    _need(w >= 2 and h >= 3, "need w >= 2 and h >= 3")
    edges = _rays(w, h)
    if direction is Direction.ASCENDING:
        for j in range(1, h + 1, 2):
            edges.append((ray_id(1, j, h), ray_id(2, j, h)))
            if j + 3 <= h:
                for i in range(2, w):
                    edges.append((ray_id(i, j + 3, h), ray_id(i + 1, j, h)))
        for i in range(2, w + 1):
            if 2 * (i - 1) <= h:
                edges.append((ray_id(i, 2, h), ray_id(1, 2 * (i - 1), h)))
    else:
        for j in range(2, h, 2):
            for i in range(1, w):
                edges.append((ray_id(i + 1, j, h), ray_id(i, j + 1, h)))
        for i in range(1, w):
            if 2 * i <= h:
                edges.append((ray_id(1, 2 * i, h), ray_id(i + 1, 1, h)))
    return Digraph(range(w * h), edges)


def gen_stein_example(l: int, h: int) -> Digraph:  # noqa: E741
    """3l + 1 rays cut to indices j < h.

    The central ray x_j has id j; ray (i, k) for 1 <= i <= 3, 1 <= k <= l
    has ids ``((i - 1) * l + k) * h + j``. Even j: x_j -> x^{i,1}_j and
    x^{i,k}_j -> x^{i,k+1}_j; odd j: the reverse edges.
    """
    _need(l >= 1 and h >= 2, "need l >= 1 and h >= 2")

    def vid(i: int, k: int, j: int) -> int:
        return ((i - 1) * l + k) * h + j if i else j

    rays = [(0, 0)] + [(i, k) for i in range(1, 4) for k in range(1, l + 1)]
    edges = [(vid(i, k, j), vid(i, k, j + 1)) for i, k in rays for j in range(h - 1)]
    for i in range(1, 4):
        for j in range(h):
            chain = [vid(0, 0, j)] + [vid(i, k, j) for k in range(1, l + 1)]
            pairs = zip(chain, chain[1:])
            edges += pairs if j % 2 == 0 else [(b, a) for a, b in pairs]
    return Digraph(range((3 * l + 1) * h), edges)


def gen_complete_ray_prefix(w: int, h: int, c: int) -> Digraph:
    """w rays of h vertices joined by c one-vertex dipaths per ordered ray pair.

    Connecting dipaths are pairwise disjoint. On each ray, arriving
    dipaths take the lowest free positions and departing ones the highest;
    at each round, the dipath from ray 1 lands first, so the first vertex
    of every other ray is the end of a dipath from ray 1. Fresh vertices
    are numbered from ``w * h`` in (round, from-ray, to-ray) order.
    Needs ``h >= 2 (w - 1) c``.
    """
    _need(w >= 2 and h >= 1 and c >= 1, "need w >= 2, h >= 1, c >= 1")
    _need(h >= 2 * (w - 1) * c, f"h must be at least 2 (w - 1) c = {2 * (w - 1) * c}")
    edges = _rays(w, h)
    fresh = w * h
    for t in range(c):
        for a in range(1, w + 1):
            for b in range(1, w + 1):
                if a == b:
                    continue
                rank_in = a - 1 if a < b else a - 2  # position of a among rays != b
                rank_out = b - 1 if b < a else b - 2
                src = ray_id(a, h - (t * (w - 1) + rank_out), h)
                dst = ray_id(b, 1 + t * (w - 1) + rank_in, h)
                edges += [(src, fresh), (fresh, dst)]
                fresh += 1
    return Digraph(range(fresh), edges)


class Family(str, Enum):
    RANDOM_STRONG = "random_strong"
    TRIANGLE_CHAIN = "triangle_chain"
    FLOWER = "flower"
    HEXAGONAL_GRID = "hexagonal_grid"
    CIRCULAR_GRID = "circular_grid"
    BIDIRECTED_QUARTER_GRID = "bidirected_quarter_grid"
    ASCENDING_CYCLIC_QUARTER_GRID = "ascending_cyclic_quarter_grid"
    DESCENDING_CYCLIC_QUARTER_GRID = "descending_cyclic_quarter_grid"
    COMPLETE_RAY_PREFIX = "complete_ray_prefix"
    STEIN_EXAMPLE = "stein_example"


# family -> (required parameter names, builder)
_BUILDERS = {
    Family.RANDOM_STRONG: (("v", "p"), lambda p, seed: gen_random_strong(p["v"], p["p"], seed)),
    Family.TRIANGLE_CHAIN: (("k",), lambda p, _: gen_triangle_chain(p["k"])),
    Family.FLOWER: (("m",), lambda p, _: gen_flower(p["m"])),
    Family.HEXAGONAL_GRID: (("n", "h"), lambda p, _: gen_hexagonal_grid(p["n"], p["h"])),
    Family.CIRCULAR_GRID: (("n", "h"), lambda p, _: gen_circular_grid(p["n"], p["h"])),
    Family.BIDIRECTED_QUARTER_GRID: (
        ("w", "h"),
        lambda p, _: gen_bidirected_quarter_grid(p["w"], p["h"], bool(p.get("suppress", False))),
    ),
    Family.ASCENDING_CYCLIC_QUARTER_GRID: (
        ("w", "h"),
        lambda p, _: gen_cyclic_quarter_grid("ascending", p["w"], p["h"]),
    ),
    Family.DESCENDING_CYCLIC_QUARTER_GRID: (
        ("w", "h"),
        lambda p, _: gen_cyclic_quarter_grid("descending", p["w"], p["h"]),
    ),
    Family.COMPLETE_RAY_PREFIX: (
        ("w", "h", "c"),
        lambda p, _: gen_complete_ray_prefix(p["w"], p["h"], p["c"]),
    ),
    Family.STEIN_EXAMPLE: (("l", "h"), lambda p, _: gen_stein_example(p["l"], p["h"])),
}


@dataclass(frozen=True)
class GeneratorSpec:
    family: Family
    params: dict = field(default_factory=dict)
    seed: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        required, _ = _BUILDERS[self.family]
        missing = [r for r in required if self.params.get(r) is None]
        if missing:
            raise ValueError(f"{self.family.value} needs parameters {', '.join(missing)}")
        if self.family is Family.RANDOM_STRONG and self.seed is None:
            raise ValueError("random_strong needs a seed")

    def build(self) -> Digraph:
        return _BUILDERS[self.family][1](self.params, self.seed)

    def to_json(self) -> str:
        required, _ = _BUILDERS[self.family]
        params = {k: v for k, v in self.params.items() if k in required or k == "suppress"}
        obj = {"family": self.family.value, "params": params}
        if self.family is Family.RANDOM_STRONG:
            obj["seed"] = self.seed
        return json.dumps(obj, sort_keys=True)
