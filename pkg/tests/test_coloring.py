import itertools
import random

import pytest

from gkgraph.coloring import (
    Orientation,
    brute_force_3coloring,
    class_orientation,
    find_3coloring,
    ghrv_coloring,
    has_3path,
    is_proper,
    respects_constraints,
)
from gkgraph.graphs import ComplementGraph, GraphError, enumerate_graphs

from conftest import complete, cycle, empty


def rand_graph(n, p, rng):
    verts = [f"v{i}" for i in range(1, n + 1)]
    return ComplementGraph(
        verts, [e for e in itertools.combinations(verts, 2) if rng.random() < p]
    )


def test_k3_uses_three_colors():
    coloring = find_3coloring(complete(3))
    assert coloring is not None and len(set(coloring.values())) == 3


def test_k4_has_no_3coloring():
    assert find_3coloring(complete(4)) is None


def test_star_with_monochromatic_leaves():
    g = ComplementGraph("clmn", [("c", "l"), ("c", "m"), ("c", "n")])
    coloring = find_3coloring(g, mono_sets=[{"l", "m", "n"}])
    assert coloring is not None
    assert len({coloring["l"], coloring["m"], coloring["n"]}) == 1
    assert coloring["c"] != coloring["l"]


def test_spoked_cycle_monochromatic_constraint_unsatisfiable(fig3):
    mono = fig3.neighbors("c") - {"a", "b", "d"}
    assert len(mono) == 5
    assert find_3coloring(fig3, mono_sets=[mono]) is None
    assert find_3coloring(fig3) is not None


def test_fixed_colors_are_respected():
    g = cycle(5)
    coloring = find_3coloring(g, fixed={"v1": "I", "v2": "O"})
    assert coloring["v1"] == "I" and coloring["v2"] == "O"
    assert find_3coloring(complete(3), fixed={"v1": "I", "v2": "I"}) is None
    with pytest.raises(GraphError):
        find_3coloring(g, fixed={"v1": "purple"})


def test_empty_inputs_accepted():
    assert find_3coloring(empty(4), mono_sets=[set()]) is not None
    assert find_3coloring(ComplementGraph([])) == {}


def test_agrees_with_bruteforce_on_all_small_classes():
    rng = random.Random(2024)
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            mono = {rng.choice(g.vertices), rng.choice(g.vertices)} if n > 2 else set()
            for sets in ([], [mono]):
                fast = find_3coloring(g, mono_sets=sets)
                brute = brute_force_3coloring(g, mono_sets=sets)
                assert (fast is None) == (brute is None)
                if fast is not None:
                    assert respects_constraints(g, fast, sets)


# -- orientations ----------------------------------------------------------


def arcs_path(k):
    verts = [f"v{i}" for i in range(1, k + 2)]
    g = ComplementGraph(verts, [(verts[i], verts[i + 1]) for i in range(k)])
    return Orientation(g, [(verts[i], verts[i + 1]) for i in range(k)])


def test_has_3path_on_directed_paths():
    assert not has_3path(arcs_path(2))
    assert has_3path(arcs_path(3))


def test_directed_triangle_counts_as_3path():
    g = complete(3)
    o = Orientation(g, [("v1", "v2"), ("v2", "v3"), ("v3", "v1")])
    assert has_3path(o)


def test_orientation_must_cover_each_edge_once():
    g = cycle(4)
    with pytest.raises(GraphError):
        Orientation(g, [("v1", "v2")])


def test_ghrv_single_edge():
    o = arcs_path(1)
    coloring = ghrv_coloring(o)
    assert coloring == {"v1": "D", "v2": "I"}


def test_ghrv_empty_graph_is_all_sinks():
    o = Orientation(empty(3), [])
    assert set(ghrv_coloring(o).values()) == {"I"}


def test_ghrv_requires_no_3path():
    with pytest.raises(GraphError):
        ghrv_coloring(arcs_path(3))


def test_class_orientation_directions():
    g = ComplementGraph("ab", [("a", "b")])
    o = class_orientation(g, {"a": "O", "b": "I"})
    assert ("a", "b") in o.arcs
    g2 = ComplementGraph("abcd", [("a", "b"), ("b", "c"), ("c", "d")])
    o2 = class_orientation(g2, {"a": "O", "b": "I", "c": "O", "d": "I"})
    assert o2.arcs == {("a", "b"), ("c", "b"), ("c", "d")}
    assert not has_3path(o2)


def test_class_orientation_needs_proper_coloring():
    with pytest.raises(GraphError):
        class_orientation(complete(3), {"v1": "O", "v2": "O", "v3": "I"})


def test_class_orientation_of_random_proper_colorings_has_no_3path():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(2, 8)
        colors = {f"v{i}": rng.choice("ODI") for i in range(1, n + 1)}
        verts = sorted(colors)
        edges = [
            e
            for e in itertools.combinations(verts, 2)
            if colors[e[0]] != colors[e[1]] and rng.random() < 0.6
        ]
        g = ComplementGraph(verts, edges)
        o = class_orientation(g, colors)
        assert not has_3path(o)
        recovered = ghrv_coloring(o)
        assert is_proper(g, recovered)


def test_random_3path_free_orientations_yield_proper_colorings():
    rng = random.Random(6)
    found = 0
    while found < 300:
        g = rand_graph(rng.randint(2, 6), 0.4, rng)
        arcs = [(u, v) if rng.random() < 0.5 else (v, u) for u, v in g.edges]
        o = Orientation(g, arcs)
        if has_3path(o):
            continue
        found += 1
        coloring = ghrv_coloring(o)
        assert is_proper(g, coloring)
        assert set(coloring.values()) <= {"O", "D", "I"}
