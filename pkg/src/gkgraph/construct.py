"""Symbolic group blueprints and their independent evaluation.

An accepted graph is realized by a group of the shape J x| (E x (Q x| P)):
an extension E covering the role vertices, a solvable tower of cyclic
groups of prime order for the remaining vertices (O-primes acting
Frobeniusly on D-primes, both acting on I-primes), and per-I-vertex
representation choices tying the tower to E.  Nothing here multiplies
group elements; a blueprint records the prime assignments, Frobenius
actions and representation choices, and the evaluator re-derives the
prime graph complement those choices force.  Some clauses realize the
graph as a direct product with a cyclic group instead: the graph is
augmented, built, and the cyclic factor applied afterwards.

Prime selection is deterministic: O-primes are the smallest primes
outside pi(E), D- and I-primes the smallest primes satisfying their
congruence.  Dirichlet guarantees the searches terminate; a candidate
cap keeps runs bounded.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import prod

from sympy import isprime, nextprime

from . import catalog as cat
from .classify import Verdict, classify
from .coloring import COLORS
from .graphs import ComplementGraph, canonical_form

SEARCH_CAP = 10_000_000  # candidates per arithmetic progression


class BlueprintError(RuntimeError):
    """Unbuildable verdict or violated blueprint invariant."""


@dataclass(frozen=True)
class Blueprint:
    family: str
    clause: str
    extension: str | None
    prime_map: dict[str, int]
    o_primes: dict[str, int]
    d_primes: dict[str, int]
    i_primes: dict[str, int]
    frobenius_edges: frozenset[tuple[str, str]]
    rep_choice: dict[str, tuple[int, ...]]
    post_products: tuple[int, ...] = ()
    trace: tuple[str, ...] = field(default=(), compare=False)

    def assigned_primes(self) -> dict[str, int]:
        out: dict[str, int] = {}
        out.update(self.o_primes)
        out.update(self.d_primes)
        out.update(self.i_primes)
        return out

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "family": self.family,
            "clause": self.clause,
            "extension": self.extension,
            "prime_map": self.prime_map,
            "o_primes": self.o_primes,
            "d_primes": self.d_primes,
            "i_primes": self.i_primes,
            "frobenius_edges": sorted(list(e) for e in self.frobenius_edges),
            "rep_choice": {v: list(vec) for v, vec in self.rep_choice.items()},
            "post_products": list(self.post_products),
            "trace": list(self.trace),
        }


def blueprint_from_json_dict(data: dict) -> Blueprint:
    return Blueprint(
        family=data["family"],
        clause=data["clause"],
        extension=data.get("extension"),
        prime_map={v: int(p) for v, p in data.get("prime_map", {}).items()},
        o_primes={v: int(p) for v, p in data.get("o_primes", {}).items()},
        d_primes={v: int(p) for v, p in data.get("d_primes", {}).items()},
        i_primes={v: int(p) for v, p in data.get("i_primes", {}).items()},
        frobenius_edges=frozenset(
            (str(u), str(v)) for u, v in data.get("frobenius_edges", [])
        ),
        rep_choice={
            v: tuple(sorted(int(p) for p in vec))
            for v, vec in data.get("rep_choice", {}).items()
        },
        post_products=tuple(int(p) for p in data.get("post_products", [])),
    )


# -- prime selection ---------------------------------------------------------


def _next_free_prime(used: set[int]) -> int:
    p = 1
    while True:
        p = int(nextprime(p))
        if p not in used:
            return p


def _prime_in_progression(modulus: int, used: set[int]) -> int:
    """Smallest unused prime congruent to 1 modulo ``modulus``."""
    if modulus == 1:
        return _next_free_prime(used)
    for k in range(1, SEARCH_CAP + 1):
        n = k * modulus + 1
        if n not in used and isprime(n):
            return n
    raise BlueprintError(
        f"no prime = 1 mod {modulus} within {SEARCH_CAP} candidates"
    )


# -- extension matching ------------------------------------------------------


def _allowed_vectors(ext_name: str) -> tuple[tuple[int, ...], ...] | None:
    fact = cat.lookup(ext_name)
    if isinstance(fact, cat.GroupFact):
        for cover in cat.covers_of(ext_name):
            if cover.name == ext_name:
                return cover.vectors
        return None
    return fact.vectors


def _match_extension(
    g: ComplementGraph, x_order: tuple[str, ...], ext_name: str
) -> tuple[dict[str, int], dict[str, tuple[int, ...]]]:
    """Find a prime assignment of the role vertices onto pi(E).

    The induced subgraph on the roles must map isomorphically onto the
    catalog complement of E, and for every external neighbor v of the
    role set there must be a catalog fixed-point vector omitting exactly
    the primes of v's role neighbors.  Failure signals a disagreement
    between classifier and constructor and is raised, not repaired.
    """
    target = cat.load_catalog().complement_of(ext_name)
    base_primes = tuple(sorted(int(p) for p in target.vertices))
    vectors = _allowed_vectors(ext_name)
    full = tuple(base_primes)
    xs = set(x_order)
    externals = {
        v: {x for x in xs if g.has_edge(v, x)}
        for v in g.neighborhood(xs) - xs
    }
    for perm in itertools.permutations(base_primes):
        phi = dict(zip(x_order, perm))
        ok = all(
            g.has_edge(u, v) == target.has_edge(str(phi[u]), str(phi[v]))
            for u, v in itertools.combinations(x_order, 2)
        )
        if not ok:
            continue
        reps: dict[str, tuple[int, ...]] = {}
        for v, pattern in externals.items():
            needed = tuple(sorted(set(base_primes) - {phi[x] for x in pattern}))
            if needed == full or (vectors is not None and needed in vectors):
                reps[v] = needed
            else:
                break
        else:
            return phi, reps
    raise BlueprintError(
        f"no prime assignment onto {ext_name} matches the role subgraph and "
        "the catalog fixed-point vectors"
    )


# -- tower construction ------------------------------------------------------


def _normalize_coloring(coloring: dict[str, str], mono: set[str]) -> dict[str, str]:
    """Rename classes so that the monochromatic external set is colored I."""
    if not mono:
        return dict(coloring)
    gamma = coloring[next(iter(mono))]
    if gamma == "I":
        return dict(coloring)
    others = [c for c in COLORS if c != gamma]
    rename = {gamma: "I", others[0]: "O", others[1]: "D"}
    return {v: rename[c] for v, c in coloring.items()}


def _build_direct(
    g: ComplementGraph,
    family: str,
    clause: str,
    ext_name: str | None,
    roles: dict[str, str] | None,
    coloring: dict[str, str],
    trace: tuple[str, ...] = (),
) -> Blueprint:
    x_order = tuple(roles[r] for r in sorted(roles)) if roles else ()
    xs = set(x_order)
    if ext_name is not None:
        phi, reps = _match_extension(g, x_order, ext_name)
        ext_order = cat.order_of(ext_name)
        base_primes = set(cat.load_catalog().primes_of(ext_name))
    else:
        phi, reps = {}, {}
        ext_order = 1
        base_primes = set()

    tower = [v for v in g.vertices if v not in xs]
    coloring = _normalize_coloring(coloring, g.neighborhood(xs) - xs if xs else set())
    classes = {v: coloring[v] for v in tower}
    rank = {c: i for i, c in enumerate(COLORS)}
    arcs: set[tuple[str, str]] = set()
    for u, v in g.edges:
        if u in xs or v in xs:
            continue
        if rank[classes[u]] < rank[classes[v]]:
            arcs.add((u, v))
        else:
            arcs.add((v, u))

    used = set(base_primes)
    o_primes: dict[str, int] = {}
    for v in sorted(t for t in tower if classes[t] == "O"):
        p = _next_free_prime(used)
        o_primes[v] = p
        used.add(p)
    o_product = prod(o_primes.values()) if o_primes else 1
    d_primes: dict[str, int] = {}
    for v in sorted(t for t in tower if classes[t] == "D"):
        q = _prime_in_progression(o_product, used)
        d_primes[v] = q
        used.add(q)
    assigned = dict(o_primes)
    assigned.update(d_primes)
    i_primes: dict[str, int] = {}
    rep_choice: dict[str, tuple[int, ...]] = {}
    preds = {v: {u for u, w in arcs if w == v} for v in tower}
    for v in sorted(t for t in tower if classes[t] == "I"):
        n1 = preds[v]
        n2 = {w for u in n1 for w in preds[u]} - n1 - {v}
        modulus = ext_order * prod(assigned[u] for u in sorted(n1 | n2))
        r = _prime_in_progression(modulus, used)
        i_primes[v] = r
        used.add(r)
        assigned[v] = r
        if ext_name is not None:
            rep_choice[v] = reps.get(
                v, tuple(sorted(cat.load_catalog().primes_of(ext_name)))
            )

    bp = Blueprint(
        family=family,
        clause=clause,
        extension=ext_name,
        prime_map=phi,
        o_primes=o_primes,
        d_primes=d_primes,
        i_primes=i_primes,
        frobenius_edges=frozenset(arcs),
        rep_choice=rep_choice,
        trace=trace,
    )
    _validate_blueprint(bp)
    return bp


# -- clause dispatch ---------------------------------------------------------

_DIRECT_EXTENSIONS = {
    ("A7", "2.1"): "A7",
    ("A7", "2.2"): "64.A7",
    ("A7", "2.3"): "16.A7",
    ("A7", "2.4"): "2.A7",
    ("M11", "2.1"): "M11",
    ("M11", "2.2"): "3^5.M11",
    ("M12", "2"): "M12",
    ("M12", "3"): "2.M12",
    ("A5", "2.1"): "A5",
    ("A5", "2.2"): "SL(2,5)",
    ("A5", "2.3"): "C2.S5",
}

_BLOCK_EXTENSIONS = {
    # keyed by (group, shape of the induced block)
    ("G2(3)", "K4-minus-edge"): "G2(3)",
    ("G2(3)", "paw"): "G2(3).2",
    ("U4(3)", "K4-minus-edge"): "U4(3)",
    ("U4(3)", "paw"): "U4(3).2_E",
    ("PSL(3,4)", "K4"): "PSL(3,4)",
    ("PSL(3,4)", "K4-minus-edge"): "PSL(3,4).2_E1",
    ("PSL(3,4)", "paw"): "PSL(3,4).2_E2",
}

_PAW_FAMILIES = {
    "A8", "PSL(3,7)", "U3(5)", "U3(8)", "PSL(4,3)", "2F4(2)'",
    "PSL(3,5)", "PSL(3,8)", "PSL(3,17)", "U3(4)", "U3(7)", "U5(2)",
}

_BLOCK_FAMILIES = {"G2(3)", "U4(3)", "PSL(3,4)"}


def _block_shape(g: ComplementGraph, xs: tuple[str, ...]) -> str:
    sub = g.induced(xs)
    m = len(sub.edges)
    tri = len(sub.triangles())
    if m == 6:
        return "K4"
    if m == 5:
        return "K4-minus-edge"
    if m == 4 and tri == 1 and sorted(sub.degree(v) for v in xs) == [1, 2, 2, 3]:
        return "paw"
    if m == 3 and tri == 1:
        return "triangle-plus-isolated"
    return "triangle-free"


def is_product_clause(g: ComplementGraph, verdict: Verdict) -> bool:
    key = (verdict.family, verdict.clause)
    if key in (("A7", "2.5"), ("M11", "2.3")):
        return True
    if verdict.family in _PAW_FAMILIES and verdict.clause == "2":
        return True
    if verdict.family in _BLOCK_FAMILIES and verdict.clause == "2":
        xs = tuple(verdict.assignment[r] for r in sorted(verdict.assignment))
        return _block_shape(g, xs) == "triangle-plus-isolated"
    return False


def build_blueprint(g: ComplementGraph, verdict: Verdict) -> Blueprint:
    """Build a blueprint for a directly constructible accepted verdict."""
    if not verdict.accepted:
        raise BlueprintError("cannot build from a rejected verdict")
    if is_product_clause(g, verdict):
        raise BlueprintError(
            f"clause {verdict.condition_tag} needs the product route; "
            "use build_via_product"
        )
    family, clause = verdict.family, verdict.clause
    if clause == "1" or family == "solvable":
        return _build_direct(g, family, clause or "1", None, None, verdict.coloring)
    if family in _BLOCK_FAMILIES:
        xs = tuple(verdict.assignment[r] for r in sorted(verdict.assignment))
        shape = _block_shape(g, xs)
        if shape == "triangle-free":
            # the block is triangle-free, hence so is the whole graph
            coloring = _fresh_coloring(g, set())
            return _build_direct(g, family, clause, None, None, coloring)
        ext = _BLOCK_EXTENSIONS.get((family, shape))
        if ext is None:
            raise BlueprintError(f"block shape {shape} not realizable for {family}")
        return _build_direct(g, family, clause, ext, verdict.assignment, verdict.coloring)
    if family in _PAW_FAMILIES and clause == "3":
        return _build_direct(g, family, clause, family, verdict.assignment, verdict.coloring)
    ext = _DIRECT_EXTENSIONS.get((family, clause))
    if ext is None:
        raise BlueprintError(f"no construction rule for {family}:{clause}")
    return _build_direct(g, family, clause, ext, verdict.assignment, verdict.coloring)


def _fresh_coloring(g: ComplementGraph, mono: set[str]) -> dict[str, str]:
    from .coloring import find_3coloring

    coloring = find_3coloring(g, mono_sets=[mono] if mono else [])
    if coloring is None:
        raise BlueprintError("expected 3-coloring does not exist")
    return coloring


def build_via_product(g: ComplementGraph, verdict: Verdict) -> Blueprint:
    """Realize an isolated-vertex/pendant clause as inner group x cyclic.

    The graph is augmented so that a directly constructible clause
    applies, the inner blueprint is built for the augmented graph, and a
    cyclic factor for the prime of the augmented vertex is appended; the
    direct product erases that vertex's complement edges again.
    """
    if not verdict.accepted:
        raise BlueprintError("cannot build from a rejected verdict")
    if not is_product_clause(g, verdict):
        raise BlueprintError(f"clause {verdict.condition_tag} builds directly")
    family, clause = verdict.family, verdict.clause
    roles = dict(verdict.assignment)
    key = (family, clause)
    if key == ("A7", "2.5"):
        b, d = roles["b"], roles["d"]
        dup = sorted(g.neighbors(b) - {roles["a"], roles["c"]})
        g0 = g.with_edges((d, v) for v in dup)
        inner_clause = "2.4"
    elif key == ("M11", "2.3"):
        g0 = g.with_edges([(roles["c"], roles["d"])])
        inner_clause = "2.2"
    elif family in _PAW_FAMILIES:
        g0 = g.with_edges([(roles["c"], roles["d"])])
        inner_clause = "3"
    else:  # block family, triangle + isolated vertex
        xs = tuple(roles[r] for r in sorted(roles))
        sub = g.induced(xs)
        tri = sub.triangles()[0]
        lonely = next(v for v in xs if v not in tri)
        attach = sorted(tri) if family == "PSL(3,4)" else sorted(tri)[:2]
        g0 = g.with_edges((lonely, t) for t in attach)
        roles = dict(zip("abcd", sorted(xs)))
        inner_clause = clause
    xs = set(roles.values())
    # the tower only needs the non-role part colored; the role block may
    # even be a K4 (PSL(3,4)) that no 3-coloring covers
    coloring0 = _fresh_coloring(g0.without(xs), g0.neighborhood(xs) - xs)
    inner = Verdict(
        family=family,
        accepted=True,
        condition_tag=f"{family}:{inner_clause}",
        clause=inner_clause,
        assignment=roles,
        coloring=coloring0,
    )
    bp = build_blueprint(g0, inner)
    d_vertex = verdict.assignment["d"] if "d" in verdict.assignment else None
    if family in _BLOCK_FAMILIES:
        d_vertex = lonely
    cyclic = bp.prime_map[d_vertex]
    return Blueprint(
        family=family,
        clause=clause,
        extension=bp.extension,
        prime_map=bp.prime_map,
        o_primes=bp.o_primes,
        d_primes=bp.d_primes,
        i_primes=bp.i_primes,
        frobenius_edges=bp.frobenius_edges,
        rep_choice=bp.rep_choice,
        post_products=(cyclic,),
        trace=(f"augmented graph built via clause {inner_clause}, "
               f"then direct product with a cyclic group of order {cyclic}",),
    )


def build(g: ComplementGraph, verdict: Verdict) -> Blueprint:
    if is_product_clause(g, verdict):
        return build_via_product(g, verdict)
    return build_blueprint(g, verdict)


# -- evaluation --------------------------------------------------------------


def _validate_blueprint(b: Blueprint) -> None:
    assigned = b.assigned_primes()
    values = list(assigned.values())
    if len(set(values)) != len(values):
        raise BlueprintError("assigned primes are not distinct")
    if b.extension is not None:
        base = set(cat.load_catalog().primes_of(b.extension))
        if base & set(values):
            raise BlueprintError("assigned primes collide with the extension primes")
        allowed = _allowed_vectors(b.extension)
        full = tuple(sorted(base))
        if set(b.rep_choice) != set(b.i_primes):
            raise BlueprintError("every I-vertex needs a representation choice")
        for v, vec in b.rep_choice.items():
            if vec != full and (allowed is None or vec not in allowed):
                raise BlueprintError(f"vector {vec} for {v} is not in the catalog")
    elif b.rep_choice:
        raise BlueprintError("representation choices require an extension")
    heads = {v: set() for v in assigned}
    for u, v in b.frobenius_edges:
        if u not in assigned or v not in assigned:
            raise BlueprintError(f"arc {u}->{v} uses an unassigned vertex")
        source_ok = (u in b.o_primes and v not in b.o_primes) or (
            u in b.d_primes and v in b.i_primes
        )
        if not source_ok:
            raise BlueprintError(f"arc {u}->{v} violates the O<D<I layering")
        heads[u].add(v)
    for u in heads:
        for v in heads[u]:
            for w in heads[v]:
                if heads[w]:
                    raise BlueprintError("orientation contains a directed 3-path")
    o_product = prod(b.o_primes.values()) if b.o_primes else 1
    for v, q in b.d_primes.items():
        if (q - 1) % o_product:
            raise BlueprintError(f"D-prime {q} at {v} is not 1 mod {o_product}")
    ext_order = cat.order_of(b.extension) if b.extension else 1
    preds = {v: {u for u, w in b.frobenius_edges if w == v} for v in assigned}
    for v, r in b.i_primes.items():
        n1 = preds[v]
        n2 = {w for u in n1 for w in preds[u]} - n1 - {v}
        modulus = ext_order * prod(assigned[u] for u in sorted(n1 | n2))
        if (r - 1) % modulus:
            raise BlueprintError(f"I-prime {r} at {v} is not 1 mod {modulus}")


def cyclic_complement(p: int) -> ComplementGraph:
    """Prime graph complement of a cyclic group of prime order."""
    return ComplementGraph([str(p)])


def product_complement(g1: ComplementGraph, g2: ComplementGraph) -> ComplementGraph:
    """Complement of the prime graph of a direct product.

    Element orders of a direct product are lcms, so p-q survives in the
    complement iff it survives in every factor containing both primes and
    the pair does not straddle the two factors.
    """
    pi1, pi2 = set(g1.vertices), set(g2.vertices)
    verts = list(g1.vertices) + [v for v in g2.vertices if v not in pi1]
    edges = []
    for p, q in itertools.combinations(verts, 2):
        if (p in pi1 and q in pi2) or (p in pi2 and q in pi1):
            continue
        if p in pi1 and q in pi1 and not g1.has_edge(p, q):
            continue
        if p in pi2 and q in pi2 and not g2.has_edge(p, q):
            continue
        edges.append((p, q))
    return ComplementGraph(verts, edges)


def evaluate_blueprint(b: Blueprint) -> ComplementGraph:
    """Re-derive the prime graph complement a blueprint forces.

    Complement edges are exactly: the catalog complement of E inside
    pi(E); u-w between assigned primes for each Frobenius arc u->w; x-w
    between pi(E) and an I-prime w when phi(x) is omitted from w's
    fixed-point vector; nothing between pi(E) and O/D-primes (direct
    product).  Cyclic post-products are applied last.
    """
    _validate_blueprint(b)
    assigned = b.assigned_primes()
    verts: list[str] = []
    edges: list[tuple[str, str]] = []
    if b.extension is not None:
        target = cat.load_catalog().complement_of(b.extension)
        verts.extend(sorted(target.vertices, key=int))
        edges.extend(target.edges)
    verts.extend(str(p) for p in sorted(assigned.values()))
    for u, w in b.frobenius_edges:
        edges.append((str(assigned[u]), str(assigned[w])))
    if b.extension is not None:
        base = sorted(int(p) for p in target.vertices)
        for v, vec in b.rep_choice.items():
            for x in base:
                if x not in vec:
                    edges.append((str(x), str(assigned[v])))
    g = ComplementGraph(verts, edges)
    for p in b.post_products:
        g = product_complement(g, cyclic_complement(p))
    return g


# -- round trip --------------------------------------------------------------


@dataclass(frozen=True)
class RoundtripReport:
    family: str
    status: str  # "rejected" | "pass" | "fail"
    verdict: Verdict
    blueprint: Blueprint | None = None
    evaluated: ComplementGraph | None = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def roundtrip_matches(g: ComplementGraph, bp: Blueprint, evaluated: ComplementGraph) -> bool:
    """Isomorphism check between input and evaluated graph.

    Small graphs are compared by canonical form.  Larger ones are
    compared exactly under the blueprint's own vertex-to-prime map, which
    exhibits an explicit isomorphism when the edge sets agree.
    """
    if g.n != evaluated.n:
        return False
    if g.n <= 10:
        return canonical_form(g).key() == canonical_form(evaluated).key()
    to_prime = {v: str(p) for v, p in bp.assigned_primes().items()}
    to_prime.update({v: str(p) for v, p in bp.prime_map.items()})
    if set(to_prime) != set(g.vertices):
        return False
    mapped = {tuple(sorted((to_prime[u], to_prime[v]))) for u, v in g.edges}
    return mapped == set(evaluated.edges) and {
        to_prime[v] for v in g.vertices
    } == set(evaluated.vertices)


def verify_roundtrip(g: ComplementGraph, family: str) -> RoundtripReport:
    """Classify, build, evaluate, and compare up to isomorphism."""
    verdict = classify(g, family)
    if not verdict.accepted:
        return RoundtripReport(family, "rejected", verdict, detail=verdict.refutation or "")
    try:
        bp = build(g, verdict)
        evaluated = evaluate_blueprint(bp)
    except BlueprintError as exc:
        return RoundtripReport(family, "fail", verdict, detail=str(exc))
    same = roundtrip_matches(g, bp, evaluated)
    status = "pass" if same else "fail"
    detail = "" if same else "evaluated graph is not isomorphic to the input"
    return RoundtripReport(family, status, verdict, bp, evaluated, detail)
