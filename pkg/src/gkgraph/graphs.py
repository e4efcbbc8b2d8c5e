"""Small undirected graphs stored as prime-graph complements.

Every structural condition used in this package is phrased on the
complement of a prime graph, so :class:`ComplementGraph` stores the
complement directly.  Vertex ids are opaque strings; prime labels are
attached only by the catalog and construction layers.

Graphs here are tiny (prime graphs at desk scale have at most ~10
vertices), so isomorphism is decided by exact canonical forms obtained
through exhaustive permutation minimisation rather than heuristics.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

CANONICAL_CAP = 10
ENUMERATE_CAP = 8

#: number of isomorphism classes of simple graphs on 1..8 vertices
GRAPH_CLASS_COUNTS = (1, 2, 4, 11, 34, 156, 1044, 12346)


class GraphError(ValueError):
    """Malformed graph data or violated size cap."""


def _norm_edge(u: str, v: str) -> tuple[str, str]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class ComplementGraph:
    """An undirected simple graph, by convention the complement of a prime graph.

    ``vertices`` keeps declaration order (deterministic iteration);
    ``edges`` holds unordered pairs normalised as sorted 2-tuples.
    """

    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]]

    def __init__(self, vertices: Iterable[str], edges: Iterable[Sequence[str]] = ()):
        verts = tuple(dict.fromkeys(str(v) for v in vertices))
        vset = set(verts)
        norm = set()
        for e in edges:
            u, v = str(e[0]), str(e[1])
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            if u not in vset or v not in vset:
                raise GraphError(f"edge {u!r}-{v!r} uses an undeclared vertex")
            norm.add(_norm_edge(u, v))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(norm))

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    def has_edge(self, u: str, v: str) -> bool:
        return _norm_edge(u, v) in self.edges

    def neighbors(self, v: str) -> set[str]:
        if v not in self.vertices:
            raise GraphError(f"unknown vertex {v!r}")
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted(self.edges)

    # -- derived graphs --------------------------------------------------

    def complement(self) -> "ComplementGraph":
        """Edge u-v present in the output iff absent here (u != v)."""
        verts = self.vertices
        comp = [
            (u, v)
            for u, v in itertools.combinations(verts, 2)
            if _norm_edge(u, v) not in self.edges
        ]
        return ComplementGraph(verts, comp)

    def induced(self, keep: Iterable[str]) -> "ComplementGraph":
        ks = set(keep)
        unknown = ks - set(self.vertices)
        if unknown:
            raise GraphError(f"unknown vertices {sorted(unknown)}")
        verts = [v for v in self.vertices if v in ks]
        return ComplementGraph(verts, [e for e in self.edges if e[0] in ks and e[1] in ks])

    def without(self, drop: Iterable[str]) -> "ComplementGraph":
        ds = set(drop)
        return self.induced(v for v in self.vertices if v not in ds)

    def with_edges(self, extra: Iterable[Sequence[str]]) -> "ComplementGraph":
        return ComplementGraph(self.vertices, list(self.edges) + [tuple(e) for e in extra])

    def relabeled(self, mapping: dict[str, str]) -> "ComplementGraph":
        return ComplementGraph(
            [mapping[v] for v in self.vertices],
            [(mapping[u], mapping[v]) for u, v in self.edges],
        )

    # -- census ----------------------------------------------------------

    def triangles(self) -> list[tuple[str, str, str]]:
        """All 3-cliques, each once, sorted canonically."""
        out = []
        for t in itertools.combinations(sorted(self.vertices), 3):
            a, b, c = t
            if self.has_edge(a, b) and self.has_edge(a, c) and self.has_edge(b, c):
                out.append(t)
        return out

    def neighborhood(self, members: Iterable[str]) -> set[str]:
        """N(S): vertices adjacent to at least one member of S.

        Members of S appear in the result exactly when they are adjacent
        to another member.
        """
        s = list(members)
        out: set[str] = set()
        for v in s:
            out |= self.neighbors(v)
        return out

    def is_triangle_free(self) -> bool:
        return not self.triangles()


# -- canonical forms -----------------------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    """Minimal colex edge bitstring plus the relabeling that produced it.

    Two graphs are isomorphic iff their ``key()`` values coincide; the
    minimum is taken over all vertex orderings, so this is exact for the
    sizes accepted here.
    """

    n: int
    bits: int
    positions: dict[str, int] = field(compare=False)

    def key(self) -> tuple[int, int]:
        return (self.n, self.bits)


def _min_colex(n: int, adj: list[int]) -> tuple[int, list[int]]:
    """Lexicographically minimal colex bitstring over all orderings.

    The string is built level by level: placing the vertex at position j
    determines the j bits joining it to positions 0..j-1 (most significant
    first).  At every level only candidates achieving the minimal block can
    start a global minimum, and twin vertices (identical adjacency apart
    from each other) lead to identical completions, so one representative
    suffices.
    """
    total_bits = n * (n - 1) // 2
    best: list[int | None] = [None]
    best_order: list[list[int]] = [[]]

    order0 = sorted(range(n), key=lambda v: bin(adj[v]).count("1"))

    def dfs(placed: list[int], remaining: list[int], prefix: int, bits_used: int) -> None:
        j = len(placed)
        if j == n:
            if best[0] is None or prefix < best[0]:
                best[0] = prefix
                best_order[0] = list(placed)
            return
        blocks: dict[int, int] = {}
        for c in remaining:
            b = 0
            for p in placed:
                b = (b << 1) | ((adj[c] >> p) & 1)
            blocks[c] = b
        mb = min(blocks.values())
        cands = [c for c in remaining if blocks[c] == mb]
        reps: list[int] = []
        for c in cands:
            if any(
                (adj[c] ^ adj[r]) & ~((1 << c) | (1 << r)) == 0 for r in reps
            ):
                continue
            reps.append(c)
        new_prefix = (prefix << j) | mb
        new_bits = bits_used + j
        if best[0] is not None and new_bits:
            if new_prefix > (best[0] >> (total_bits - new_bits)):
                return
        for c in reps:
            dfs(placed + [c], [r for r in remaining if r != c], new_prefix, new_bits)

    dfs([], order0, 0, 0)
    assert best[0] is not None
    return best[0], best_order[0]


def canonical_form(g: ComplementGraph) -> CanonicalForm:
    """Canonical form by exhaustive minimisation; requires n <= 10."""
    n = g.n
    if n > CANONICAL_CAP:
        raise GraphError(f"canonical_form cap is {CANONICAL_CAP} vertices, got {n}")
    index = {v: i for i, v in enumerate(g.vertices)}
    adj = [0] * n
    for u, v in g.edges:
        adj[index[u]] |= 1 << index[v]
        adj[index[v]] |= 1 << index[u]
    if n <= 1:
        return CanonicalForm(n, 0, {v: 0 for v in g.vertices})
    bits, order = _min_colex(n, adj)
    positions = {g.vertices[orig]: pos for pos, orig in enumerate(order)}
    return CanonicalForm(n, bits, positions)


def isomorphic(g1: ComplementGraph, g2: ComplementGraph) -> bool:
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return False
    return canonical_form(g1).key() == canonical_form(g2).key()


def from_canonical_bits(n: int, bits: int, names: Sequence[str] | None = None) -> ComplementGraph:
    """Rebuild a graph from a colex bitstring (inverse of canonical packing)."""
    verts = list(names) if names is not None else [f"v{i + 1}" for i in range(n)]
    edges = []
    shift = n * (n - 1) // 2
    for j in range(1, n):
        for i in range(j):
            shift -= 1
            if (bits >> shift) & 1:
                edges.append((verts[i], verts[j]))
    return ComplementGraph(verts, edges)


def enumerate_graphs(n: int) -> Iterator[ComplementGraph]:
    """One representative per isomorphism class of simple graphs on n vertices.

    Graphs on n vertices are generated by extending the class
    representatives on n-1 vertices with one new vertex attached in every
    possible way, deduplicating by canonical form.  Yields in increasing
    canonical-bitstring order.
    """
    if n < 1:
        raise GraphError("need at least one vertex")
    if n > ENUMERATE_CAP:
        raise GraphError(f"enumerate_graphs cap is {ENUMERATE_CAP} vertices, got {n}")
    if n == 1:
        yield ComplementGraph(["v1"])
        return
    names = [f"v{i + 1}" for i in range(n)]
    new = names[-1]
    seen: set[tuple[int, int]] = set()
    forms: list[int] = []
    for smaller in enumerate_graphs(n - 1):
        for mask in range(1 << (n - 1)):
            extra = [
                (smaller.vertices[i], new) for i in range(n - 1) if (mask >> i) & 1
            ]
            g = ComplementGraph(
                list(smaller.vertices) + [new], list(smaller.edges) + extra
            )
            key = canonical_form(g).key()
            if key not in seen:
                seen.add(key)
                forms.append(key[1])
    for bits in sorted(forms):
        yield from_canonical_bits(n, bits, names)


# -- serialisation -------------------------------------------------------

SCHEMA_VERSION = 1


def to_json_dict(g: ComplementGraph) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "vertices": list(g.vertices),
        "complement_edges": [list(e) for e in g.sorted_edges()],
    }


def from_json_dict(data: dict) -> ComplementGraph:
    try:
        return ComplementGraph(data["vertices"], data.get("complement_edges", []))
    except (KeyError, TypeError) as exc:
        raise GraphError(f"bad graph JSON: {exc}") from exc


def parse_edge_list(text: str) -> ComplementGraph:
    """Line-oriented format: ``u v`` per line declares an edge, a single
    token declares an isolated vertex, ``#`` starts a comment."""
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1:
            vertices.append(parts[0])
        elif len(parts) == 2:
            vertices.extend(parts)
            edges.append((parts[0], parts[1]))
        else:
            raise GraphError(f"line {lineno}: expected 1 or 2 tokens, got {len(parts)}")
    return ComplementGraph(dict.fromkeys(vertices), edges)


def load_graph_file(path: str, as_complement: bool = True) -> ComplementGraph:
    """Read a graph from a ``.json`` or edge-list file.

    With ``as_complement=False`` the file is interpreted as the prime
    graph itself and complemented on ingestion.
    """
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            g = from_json_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise GraphError(f"bad JSON in {path}: {exc}") from exc
    else:
        g = parse_edge_list(text)
    return g if as_complement else g.complement()
