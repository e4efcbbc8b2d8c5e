import itertools
from pathlib import Path

import pytest

from gkgraph.graphs import ComplementGraph, load_graph_file

DATA = Path(__file__).parent / "data"


def complete(n: int) -> ComplementGraph:
    verts = [f"v{i}" for i in range(1, n + 1)]
    return ComplementGraph(verts, itertools.combinations(verts, 2))


def empty(n: int) -> ComplementGraph:
    return ComplementGraph([f"v{i}" for i in range(1, n + 1)])


def cycle(n: int) -> ComplementGraph:
    verts = [f"v{i}" for i in range(1, n + 1)]
    return ComplementGraph(verts, [(verts[i], verts[(i + 1) % n]) for i in range(n)])


def path(n: int) -> ComplementGraph:
    verts = [f"v{i}" for i in range(1, n + 1)]
    return ComplementGraph(verts, [(verts[i], verts[i + 1]) for i in range(n - 1)])


def k4_minus_edge() -> ComplementGraph:
    g = complete(4)
    return ComplementGraph(g.vertices, [e for e in g.edges if e != ("v1", "v2")])


def paw() -> ComplementGraph:
    """Triangle v1 v2 v3 with pendant v4 at v3."""
    return ComplementGraph(
        ["v1", "v2", "v3", "v4"],
        [("v1", "v2"), ("v1", "v3"), ("v2", "v3"), ("v3", "v4")],
    )


def triangle_plus_isolated() -> ComplementGraph:
    return ComplementGraph(
        ["v1", "v2", "v3", "v4"], [("v1", "v2"), ("v1", "v3"), ("v2", "v3")]
    )


def disjoint_union(g1: ComplementGraph, g2: ComplementGraph) -> ComplementGraph:
    ren = {v: f"b_{v}" for v in g2.vertices}
    h = g2.relabeled(ren)
    return ComplementGraph(
        list(g1.vertices) + list(h.vertices), list(g1.edges) + list(h.edges)
    )


# -- synthetic element-order sets for the product-law oracle ---------------


def prime_factors(n: int) -> set[int]:
    out, p = set(), 2
    while n > 1:
        if n % p == 0:
            out.add(p)
            while n % p == 0:
                n //= p
        p += 1
    return out


def order_set_graph(orders) -> ComplementGraph:
    """Prime graph complement of a hypothetical group with these element orders."""
    primes = sorted({p for o in orders for p in prime_factors(o)})
    edges = [
        (str(p), str(q))
        for i, p in enumerate(primes)
        for q in primes[i + 1 :]
        if not any(o % (p * q) == 0 for o in orders)
    ]
    return ComplementGraph([str(p) for p in primes], edges)


def random_order_set(rng) -> set[int]:
    """A divisor-closed set of element orders over small primes."""
    base = [2, 3, 5, 7, 11, 13]
    orders = {1}
    for _ in range(rng.randint(1, 4)):
        o = rng.choice(base) ** rng.randint(1, 2)
        if rng.random() < 0.5:
            o *= rng.choice(base)
        orders.add(o)
    closed = set()
    for o in orders:
        for d in range(1, o + 1):
            if o % d == 0:
                closed.add(d)
    return closed


@pytest.fixture(scope="session")
def fig1():
    return load_graph_file(str(DATA / "fig1.edges"))


@pytest.fixture(scope="session")
def fig2():
    return load_graph_file(str(DATA / "fig2.edges"))


@pytest.fixture(scope="session")
def fig3():
    return load_graph_file(str(DATA / "fig3.edges"))


@pytest.fixture(scope="session")
def fig4():
    return load_graph_file(str(DATA / "fig4.edges"))
