"""Constrained 3-coloring and 3-path-free orientations.

The three color classes are called O, D and I.  A proper 3-coloring
ordered O < D < I induces the class orientation (edges point towards the
later class), which never contains three consecutive directed edges;
conversely an orientation without three consecutive directed edges is
acyclic with all paths of length at most two, and coloring each vertex by
the length of the longest directed path leaving it recovers a proper
3-coloring.  ``has_3path`` therefore counts directed *walks*: three
consecutive arcs, with vertex repetition allowed, so that a directed
triangle also disqualifies an orientation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .graphs import ComplementGraph, GraphError

COLORS = ("O", "D", "I")

Coloring = dict[str, str]


def is_proper(g: ComplementGraph, coloring: Mapping[str, str]) -> bool:
    if set(coloring) != set(g.vertices):
        return False
    return all(coloring[u] != coloring[v] for u, v in g.edges)


def respects_constraints(
    g: ComplementGraph,
    coloring: Mapping[str, str],
    mono_sets: Sequence[Iterable[str]] = (),
    fixed: Mapping[str, str] | None = None,
) -> bool:
    if not is_proper(g, coloring):
        return False
    for ms in mono_sets:
        colors = {coloring[v] for v in ms}
        if len(colors) > 1:
            return False
    for v, c in (fixed or {}).items():
        if coloring[v] != c:
            return False
    return True


def find_3coloring(
    g: ComplementGraph,
    mono_sets: Sequence[Iterable[str]] = (),
    fixed: Mapping[str, str] | None = None,
) -> Coloring | None:
    """Complete search for a proper 3-coloring.

    Every set in ``mono_sets`` must come out monochromatic and ``fixed``
    assignments must be respected; returns None when no such coloring
    exists.  Monochromatic sets are unified into single color variables
    before the search, so they never enlarge the search space.
    """
    fixed = dict(fixed or {})
    if set(fixed.values()) - set(COLORS):
        raise GraphError(f"fixed colors must be among {COLORS}")

    # union-find over vertices: members of a mono set share one variable
    parent = {v: v for v in g.vertices}

    def find(v: str) -> str:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(u: str, v: str) -> None:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[rv] = ru

    for ms in mono_sets:
        ms = list(ms)
        for v in ms:
            if v not in parent:
                raise GraphError(f"unknown vertex {v!r} in mono set")
        for v in ms[1:]:
            union(ms[0], v)

    groups: dict[str, list[str]] = {}
    for v in g.vertices:
        groups.setdefault(find(v), []).append(v)

    pinned: dict[str, str] = {}
    for v, c in fixed.items():
        root = find(v)
        if pinned.get(root, c) != c:
            return None
        pinned[root] = c

    adj: dict[str, set[str]] = {root: set() for root in groups}
    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return None  # an edge inside a monochromatic set
        adj[ru].add(rv)
        adj[rv].add(ru)

    order = sorted(groups, key=lambda r: (-len(adj[r]), r))
    assignment: dict[str, str] = {}

    def backtrack(i: int, symmetry_free: bool) -> bool:
        if i == len(order):
            return True
        root = order[i]
        if root in pinned:
            choices = [pinned[root]]
        elif symmetry_free:
            # first unconstrained variable: colors are interchangeable
            choices = [COLORS[0]]
        else:
            choices = list(COLORS)
        for c in choices:
            if any(assignment.get(nb) == c for nb in adj[root]):
                continue
            assignment[root] = c
            if backtrack(i + 1, symmetry_free and root in pinned):
                return True
            del assignment[root]
        return False

    if not backtrack(0, not pinned):
        return None
    return {v: assignment[find(v)] for v in g.vertices}


def brute_force_3coloring(
    g: ComplementGraph,
    mono_sets: Sequence[Iterable[str]] = (),
    fixed: Mapping[str, str] | None = None,
) -> Coloring | None:
    """Independent oracle: try all 3^n assignments."""
    verts = list(g.vertices)
    for combo in itertools.product(COLORS, repeat=len(verts)):
        coloring = dict(zip(verts, combo))
        if respects_constraints(g, coloring, mono_sets, fixed):
            return coloring
    return None


# -- orientations ----------------------------------------------------------


@dataclass(frozen=True)
class Orientation:
    """A direction for every edge of a graph."""

    graph: ComplementGraph
    arcs: frozenset[tuple[str, str]]

    def __init__(self, graph: ComplementGraph, arcs: Iterable[tuple[str, str]]):
        arcset = frozenset((str(u), str(v)) for u, v in arcs)
        undirected = {tuple(sorted(a)) for a in arcset}
        if undirected != set(graph.edges) or len(arcset) != len(graph.edges):
            raise GraphError("arcs must orient each edge exactly once")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "arcs", arcset)

    def out_neighbors(self, v: str) -> set[str]:
        return {b for a, b in self.arcs if a == v}

    def in_degree(self, v: str) -> int:
        return sum(1 for _, b in self.arcs if b == v)


def has_3path(o: Orientation) -> bool:
    """True iff three consecutive directed edges exist (walk semantics)."""
    heads_out = {v: o.out_neighbors(v) for v in o.graph.vertices}
    for a, b in o.arcs:
        for c in heads_out[b]:
            if heads_out[c]:
                return True
    return False


def _longest_out(o: Orientation) -> dict[str, int]:
    memo: dict[str, int] = {}

    def walk(v: str) -> int:
        if v not in memo:
            memo[v] = 0  # guard; no cycles once has_3path is excluded
            outs = o.out_neighbors(v)
            memo[v] = 1 + max((walk(w) for w in outs), default=-1)
        return memo[v]

    for v in o.graph.vertices:
        walk(v)
    return memo


def ghrv_coloring(o: Orientation) -> Coloring:
    """Proper 3-coloring of a 3-path-free orientation by out-path length.

    color(v) is the length of the longest directed path starting at v,
    capped at 2, written as I, D, O for lengths 0, 1, 2.
    """
    if has_3path(o):
        raise GraphError("orientation contains a directed 3-path")
    layer = _longest_out(o)
    names = {0: "I", 1: "D", 2: "O"}
    return {v: names[min(layer[v], 2)] for v in o.graph.vertices}


def class_orientation(g: ComplementGraph, coloring: Mapping[str, str]) -> Orientation:
    """Direct every edge from the earlier class to the later one (O < D < I)."""
    if not is_proper(g, coloring):
        raise GraphError("coloring is not proper on this graph")
    rank = {c: i for i, c in enumerate(COLORS)}
    arcs = []
    for u, v in g.edges:
        if rank[coloring[u]] < rank[coloring[v]]:
            arcs.append((u, v))
        else:
            arcs.append((v, u))
    return Orientation(g, arcs)
