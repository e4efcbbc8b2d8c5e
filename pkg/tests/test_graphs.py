import itertools
import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gkgraph.graphs import (
    ComplementGraph,
    GraphError,
    canonical_form,
    enumerate_graphs,
    from_canonical_bits,
    from_json_dict,
    isomorphic,
    load_graph_file,
    parse_edge_list,
    to_json_dict,
)
from gkgraph import catalog

from conftest import complete, cycle, empty, k4_minus_edge, path


def random_graph(n: int, p: float, rng: random.Random) -> ComplementGraph:
    verts = [f"v{i}" for i in range(1, n + 1)]
    edges = [e for e in itertools.combinations(verts, 2) if rng.random() < p]
    return ComplementGraph(verts, edges)


def test_construction_rejects_bad_edges():
    with pytest.raises(GraphError):
        ComplementGraph(["a"], [("a", "a")])
    with pytest.raises(GraphError):
        ComplementGraph(["a", "b"], [("a", "c")])


def test_complement_of_empty_is_complete():
    g = empty(3).complement()
    assert len(g.edges) == 3
    assert g.triangles() == [("v1", "v2", "v3")]


def test_complement_is_involution_on_samples():
    rng = random.Random(7)
    for n in range(1, 9):
        g = random_graph(n, 0.4, rng)
        assert g.complement().complement() == g


@given(st.integers(min_value=1, max_value=7), st.integers(min_value=0, max_value=2**21))
def test_complement_involution_property(n, mask):
    g = from_canonical_bits(n, mask & ((1 << (n * (n - 1) // 2)) - 1))
    assert g.complement().complement() == g


def test_a7_complement_from_catalog():
    comp = catalog.complement_of("A7")
    # complement of the stored complement has exactly the 2-3 edge
    inv = comp.complement()
    assert inv.sorted_edges() == [("2", "3")]


def test_triangle_census_examples():
    assert len(complete(4).triangles()) == 4
    assert cycle(5).triangles() == []
    tri = catalog.complement_of("A7").triangles()
    assert len(tri) == 2
    shared = set(tri[0]) & set(tri[1])
    assert len(shared) == 2  # the two triangles share an edge


def test_triangles_match_bruteforce():
    rng = random.Random(11)
    for n in range(2, 9):
        g = random_graph(n, 0.5, rng)
        brute = [
            t
            for t in itertools.combinations(sorted(g.vertices), 3)
            if g.has_edge(t[0], t[1]) and g.has_edge(t[0], t[2]) and g.has_edge(t[1], t[2])
        ]
        assert g.triangles() == brute


def test_neighborhood_examples():
    g = ComplementGraph(["c", "l1", "l2", "l3"], [("c", "l1"), ("c", "l2"), ("c", "l3")])
    assert g.neighborhood({"c"}) == {"l1", "l2", "l3"}
    assert empty(1).neighborhood({"v1"}) == set()
    a7 = catalog.complement_of("A7")
    assert a7.neighborhood({"2"}) == {"5", "7"}
    with pytest.raises(GraphError):
        g.neighborhood({"zz"})


def test_neighborhood_members_included_iff_adjacent_to_another_member():
    g = path(3)
    assert g.neighborhood({"v1", "v2"}) == {"v1", "v2", "v3"}
    assert g.neighborhood({"v1", "v3"}) == {"v2"}


def test_canonical_form_separates_p3_and_k3():
    assert canonical_form(path(3)).key() != canonical_form(complete(3)).key()


def test_canonical_form_identifies_relabeled_cycles():
    c5 = cycle(5)
    ren = {"v1": "x", "v2": "q", "v3": "m", "v4": "a", "v5": "z"}
    assert canonical_form(c5).key() == canonical_form(c5.relabeled(ren)).key()
    assert isomorphic(c5, c5.relabeled(ren))


def test_canonical_form_partitions_labeled_graphs_on_4_vertices():
    # brute-force oracle: all 2^6 labeled graphs fall into 11 classes
    keys = set()
    for bits in range(64):
        keys.add(canonical_form(from_canonical_bits(4, bits)).key())
    assert len(keys) == 11


@settings(max_examples=80)
@given(
    st.integers(min_value=1, max_value=7),
    st.integers(min_value=0, max_value=2**21),
    st.randoms(use_true_random=False),
)
def test_canonical_form_is_isomorphism_invariant(n, mask, rng):
    g = from_canonical_bits(n, mask & ((1 << (n * (n - 1) // 2)) - 1))
    perm = list(g.vertices)
    rng.shuffle(perm)
    h = g.relabeled(dict(zip(g.vertices, perm)))
    assert canonical_form(g).key() == canonical_form(h).key()


def test_canonical_form_invariant_over_1000_random_pairs():
    rng = random.Random(1000)
    for _ in range(1000):
        n = rng.randint(1, 7)
        g = random_graph(n, rng.choice((0.25, 0.5, 0.75)), rng)
        perm = list(g.vertices)
        rng.shuffle(perm)
        h = g.relabeled(dict(zip(g.vertices, perm)))
        assert canonical_form(g).key() == canonical_form(h).key()


def test_canonical_form_positions_reproduce_bits():
    rng = random.Random(3)
    for n in range(2, 8):
        g = random_graph(n, 0.45, rng)
        form = canonical_form(g)
        rebuilt = from_canonical_bits(form.n, form.bits)
        relabeled = g.relabeled({v: f"v{form.positions[v] + 1}" for v in g.vertices})
        assert rebuilt.edges == relabeled.edges
        assert set(rebuilt.vertices) == set(relabeled.vertices)


def test_canonical_cap():
    with pytest.raises(GraphError):
        canonical_form(empty(11))


def test_enumeration_counts():
    assert [sum(1 for _ in enumerate_graphs(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


def test_enumeration_is_irredundant_and_cap_enforced():
    seen = set()
    for g in enumerate_graphs(5):
        key = canonical_form(g).key()
        assert key not in seen
        seen.add(key)
    with pytest.raises(GraphError):
        next(enumerate_graphs(9))


@pytest.mark.slow
def test_enumeration_count_n7():
    assert sum(1 for _ in enumerate_graphs(7)) == 1044


def test_json_roundtrip():
    g = k4_minus_edge()
    assert from_json_dict(to_json_dict(g)) == g
    data = to_json_dict(g)
    assert data["schema"] == 1


def test_edge_list_parsing_and_isolated_vertices():
    g = parse_edge_list("# demo\na b\nb c # trailing\nd\n")
    assert set(g.vertices) == {"a", "b", "c", "d"}
    assert g.neighbors("d") == set()
    with pytest.raises(GraphError):
        parse_edge_list("a b c\n")


def test_load_graph_file_as_prime_graph(tmp_path):
    p = tmp_path / "g.json"
    p.write_text(json.dumps(to_json_dict(complete(3))), encoding="utf-8")
    as_comp = load_graph_file(str(p))
    as_prime = load_graph_file(str(p), as_complement=False)
    assert len(as_comp.edges) == 3
    assert len(as_prime.edges) == 0
