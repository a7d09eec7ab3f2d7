"""Certificates for the three unavoidable structures and their verifiers.

A verifier looks only at the digraph and the certificate. Each returns a
:class:`Verdict`, which is truthy on success and otherwise carries an
enumerated :class:`Reason`.

Note on short systems: a system without backward members is vacuously
short, because shortness only constrains forward/backward pairs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Union

from .digraph import Dicycle, Digraph, Dipath

__all__ = [
    "BelowThreshold",
    "Certificate",
    "LongDicycle",
    "NarrowSemiChain",
    "PathSystem",
    "Reason",
    "SemiChain",
    "ShortSystem",
    "Verdict",
    "dumps",
    "loads",
    "from_dict",
    "to_dict",
    "system_threshold",
    "verify_certificate",
    "verify_long_dicycle",
    "verify_semi_chain",
    "verify_system",
]

SCHEMA_VERSION = 1


class Reason(str, Enum):
    NOT_A_VERTEX = "not_a_vertex"
    REPEATED_VERTEX = "repeated_vertex"
    MISSING_EDGE = "missing_edge"
    MISSING_CLOSING_EDGE = "missing_closing_edge"
    TOO_SHORT = "too_short"
    TOO_LONG = "too_long"
    TOO_FEW_CYCLES = "too_few_cycles"
    DUPLICATE_CYCLE = "duplicate_cycle"
    CONSECUTIVE_DISJOINT = "consecutive_cycles_disjoint"
    DISTANT_INTERSECT = "non_consecutive_cycles_intersect"
    WRONG_ENDPOINTS = "wrong_endpoints"
    INTERNAL_DISJOINTNESS = "internal_disjointness"
    TOO_FEW_PATHS = "too_few_paths"
    BACKWARD_COUNT = "backward_count"
    NOT_SHORT = "not_short"
    ABOVE_BOUND = "above_bound"


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: Reason | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return f"{self.reason.value}: {self.detail}" if self.detail else self.reason.value


_OK = Verdict(True)


def _fail(reason: Reason, detail: str = "") -> Verdict:
    return Verdict(False, reason, detail)


@dataclass(frozen=True)
class SemiChain:
    cycles: tuple[Dicycle, ...]


@dataclass(frozen=True)
class PathSystem:
    """``forward`` run x->y and ``backward`` run y->x; dicycles through x if x == y.

    A dicycle through x is written as its vertex sequence starting at x.
    """

    x: int
    y: int
    forward: tuple[Dipath, ...]
    backward: tuple[Dipath, ...]


@dataclass(frozen=True)
class LongDicycle:
    cycle: Dicycle


@dataclass(frozen=True)
class NarrowSemiChain:
    chain: SemiChain
    # every dicycle built along the path, of which ``chain`` is a prefix
    constructed: tuple[Dicycle, ...] = ()


@dataclass(frozen=True)
class ShortSystem:
    system: PathSystem


@dataclass(frozen=True)
class BelowThreshold:
    bound: int


Certificate = Union[LongDicycle, NarrowSemiChain, ShortSystem, BelowThreshold]


def system_threshold(n: int, k: int) -> int:
    """Minimum number of forward members in a qualifying short system."""
    return (k - 1) * n + 3


# -- verifiers -------------------------------------------------------------


def _check_walk(D: Digraph, seq, closed: bool) -> Verdict:
    for v in seq:
        if v not in D:
            return _fail(Reason.NOT_A_VERTEX, str(v))
    if len(set(seq)) != len(seq):
        return _fail(Reason.REPEATED_VERTEX, str(list(seq)))
    for a, b in zip(seq, seq[1:]):
        if not D.has_edge(a, b):
            return _fail(Reason.MISSING_EDGE, f"{a}->{b}")
    if closed and not D.has_edge(seq[-1], seq[0]):
        return _fail(Reason.MISSING_CLOSING_EDGE, f"{seq[-1]}->{seq[0]}")
    return _OK


def _check_dicycle(D: Digraph, cycle) -> Verdict:
    if len(cycle) < 2:
        return _fail(Reason.TOO_SHORT, "a dicycle needs at least 2 vertices")
    return _check_walk(D, cycle, closed=True)


def _rotation(cycle) -> tuple[int, ...]:
    i = cycle.index(min(cycle))
    return tuple(cycle[i:]) + tuple(cycle[:i])


def verify_long_dicycle(D: Digraph, C: Dicycle, n: int) -> Verdict:
    v = _check_dicycle(D, C)
    if not v:
        return v
    if len(C) < n:
        return _fail(Reason.TOO_SHORT, f"{len(C)} < {n} vertices")
    return _OK


def verify_semi_chain(D: Digraph, SC: SemiChain, n: int, k: int) -> Verdict:
    cycles = SC.cycles
    if len(cycles) < k:
        return _fail(Reason.TOO_FEW_CYCLES, f"{len(cycles)} < {k}")
    seen = set()
    for c in cycles:
        v = _check_dicycle(D, c)
        if not v:
            return v
        if len(c) >= n:
            return _fail(Reason.TOO_LONG, f"dicycle on {len(c)} >= {n} vertices")
        rot = _rotation(c)
        if rot in seen:
            return _fail(Reason.DUPLICATE_CYCLE, str(list(c)))
        seen.add(rot)
    sets = [frozenset(c) for c in cycles]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            meet = not sets[i].isdisjoint(sets[j])
            if j == i + 1 and not meet:
                return _fail(Reason.CONSECUTIVE_DISJOINT, f"cycles {i} and {j}")
            if j > i + 1 and meet:
                return _fail(Reason.DISTANT_INTERSECT, f"cycles {i} and {j}")
    return _OK


def verify_system(D: Digraph, S: PathSystem, n: int, m: int) -> Verdict:
    """Check an n-short (m, 1)-system of x-y dipaths."""
    x, y = S.x, S.y
    if len(S.forward) < m:
        return _fail(Reason.TOO_FEW_PATHS, f"{len(S.forward)} < {m}")
    if len(S.backward) != 1:
        return _fail(Reason.BACKWARD_COUNT, f"{len(S.backward)} backward members")
    members = list(S.forward) + list(S.backward)
    ends = {x, y}
    if x == y:
        for c in members:
            v = _check_dicycle(D, c)
            if not v:
                return v
            if c[0] != x:
                return _fail(Reason.WRONG_ENDPOINTS, f"dicycle {list(c)} does not start at {x}")
    else:
        for p, (a, b) in [(p, (x, y)) for p in S.forward] + [(q, (y, x)) for q in S.backward]:
            if len(p) < 2:
                return _fail(Reason.TOO_SHORT, "dipath without edges")
            v = _check_walk(D, p, closed=False)
            if not v:
                return v
            if p[0] != a or p[-1] != b:
                return _fail(Reason.WRONG_ENDPOINTS, f"{list(p)} is not a {a}-{b} dipath")
    used: dict[int, int] = {}
    for i, p in enumerate(members):
        for v in p:
            if v in ends:
                continue
            if v in used:
                return _fail(Reason.INTERNAL_DISJOINTNESS, f"vertex {v} in members {used[v]} and {i}")
            used[v] = i
    if x == y:
        for c in members:
            if len(c) >= n:
                return _fail(Reason.NOT_SHORT, f"dicycle on {len(c)} >= {n} vertices")
    else:
        # internally disjoint, so |V(P) u V(Q)| = |P| + |Q| - 2
        q_len = max(len(q) for q in S.backward)
        p_len = max(len(p) for p in S.forward) if S.forward else 2
        if p_len + q_len - 2 >= n:
            return _fail(Reason.NOT_SHORT, f"a forward/backward pair covers {p_len + q_len - 2} >= {n}")
    return _OK


def verify_certificate(D: Digraph, cert: Certificate, n: int, k: int) -> Verdict:
    if isinstance(cert, LongDicycle):
        return verify_long_dicycle(D, cert.cycle, n)
    if isinstance(cert, NarrowSemiChain):
        return verify_semi_chain(D, cert.chain, n, k)
    if isinstance(cert, ShortSystem):
        return verify_system(D, cert.system, n, system_threshold(n, k))
    if isinstance(cert, BelowThreshold):
        if len(D) > cert.bound:
            return _fail(Reason.ABOVE_BOUND, f"|V| = {len(D)} > {cert.bound}")
        return _OK
    raise TypeError(f"not a certificate: {cert!r}")


# -- serialization ---------------------------------------------------------

_KINDS = {
    LongDicycle: "long_dicycle",
    NarrowSemiChain: "semi_chain",
    ShortSystem: "short_system",
    BelowThreshold: "below_threshold",
}


def kind(cert: Certificate) -> str:
    return _KINDS[type(cert)]


def to_dict(cert: Certificate, n: int, k: int) -> dict:
    if isinstance(cert, LongDicycle):
        data = {"cycle": list(cert.cycle)}
    elif isinstance(cert, NarrowSemiChain):
        data = {
            "cycles": [list(c) for c in cert.chain.cycles],
            "constructed": [list(c) for c in cert.constructed],
        }
    elif isinstance(cert, ShortSystem):
        s = cert.system
        data = {
            "x": s.x,
            "y": s.y,
            "forward": [list(p) for p in s.forward],
            "backward": [list(p) for p in s.backward],
        }
    elif isinstance(cert, BelowThreshold):
        data = {"bound": cert.bound}
    else:
        raise TypeError(f"not a certificate: {cert!r}")
    return {"version": SCHEMA_VERSION, "kind": kind(cert), "n": n, "k": k, "data": data}


def from_dict(obj: dict) -> tuple[Certificate, int, int]:
    """Inverse of :func:`to_dict`; returns ``(certificate, n, k)``."""
    if obj.get("version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported certificate version {obj.get('version')!r}")
    data = obj["data"]
    tup = lambda seqs: tuple(tuple(int(v) for v in s) for s in seqs)  # noqa: E731
    kind_ = obj["kind"]
    if kind_ == "long_dicycle":
        cert: Certificate = LongDicycle(tuple(int(v) for v in data["cycle"]))
    elif kind_ == "semi_chain":
        cert = NarrowSemiChain(SemiChain(tup(data["cycles"])), tup(data.get("constructed", [])))
    elif kind_ == "short_system":
        cert = ShortSystem(
            PathSystem(int(data["x"]), int(data["y"]), tup(data["forward"]), tup(data["backward"]))
        )
    elif kind_ == "below_threshold":
        cert = BelowThreshold(int(data["bound"]))
    else:
        raise ValueError(f"unknown certificate kind {kind_!r}")
    return cert, int(obj["n"]), int(obj["k"])


def dumps(cert: Certificate, n: int, k: int) -> str:
    return json.dumps(to_dict(cert, n, k), sort_keys=True, indent=2) + "\n"


def loads(text: str) -> tuple[Certificate, int, int]:
    return from_dict(json.loads(text))
