"""Per-family decision procedures.

Each classifier decides whether an unlabeled graph is the prime graph
complement of a T-solvable group for its family, quantifying over all
injective role assignments, and returns a :class:`Verdict` carrying
re-checkable certificates (role assignment plus a constrained
3-coloring) or the first violated obligation.

Role conventions follow the classification statements: {a,b,c} is the
triangle (where one exists), c is the vertex allowed to carry edges
leaving the role set, d is the pendant or isolated extra vertex.  Subset
conditions are implemented as non-strict inclusions throughout; no
reverse construction depends on strictness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import catalog as cat
from .coloring import Coloring, find_3coloring
from .graphs import ComplementGraph


@dataclass(frozen=True)
class Verdict:
    family: str
    accepted: bool
    condition_tag: str | None = None
    clause: str | None = None
    assignment: dict[str, str] | None = None
    coloring: Coloring | None = None
    refutation: str | None = None
    trace: tuple[str, ...] = field(default=(), compare=False)

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "family": self.family,
            "accepted": self.accepted,
            "condition_tag": self.condition_tag,
            "clause": self.clause,
            "assignment": self.assignment,
            "coloring": self.coloring,
            "refutation": self.refutation,
            "trace": list(self.trace),
        }


def _accept(family: str, clause: str, assignment=None, coloring=None, trace=()) -> Verdict:
    return Verdict(
        family=family,
        accepted=True,
        condition_tag=f"{family}:{clause}",
        clause=clause,
        assignment=assignment,
        coloring=coloring,
        trace=tuple(trace),
    )


def _reject(family: str, refutation: str, trace=()) -> Verdict:
    return Verdict(family=family, accepted=False, refutation=refutation, trace=tuple(trace))


class _Ctx:
    """Per-graph precomputations shared by the clause predicates."""

    def __init__(self, g: ComplementGraph):
        self.g = g
        self.nbrs = {v: g.neighbors(v) for v in g.vertices}
        self.tri = g.triangles()
        self.tri_sets = {frozenset(t) for t in self.tri}
        self._colorings: dict[frozenset, Coloring | None] = {}

    def colored(self, mono: frozenset | None) -> Coloring | None:
        """3-coloring with one optional monochromatic set, memoized."""
        key = mono if mono is not None else frozenset({None})
        if key not in self._colorings:
            sets = [mono] if mono else []
            self._colorings[key] = find_3coloring(self.g, mono_sets=sets)
        return self._colorings[key]

    def external_mono(self, roles: tuple[str, ...]) -> frozenset:
        """N(X) \\ X for a role set X."""
        x = set(roles)
        return frozenset(self.g.neighborhood(x) - x)


def _tf_and_colorable(ctx: _Ctx, family: str, clause: str = "1") -> Verdict | None:
    if ctx.tri:
        return None
    coloring = ctx.colored(None)
    if coloring is None:
        return None
    return _accept(family, clause, coloring=coloring)


# -- clause predicates -------------------------------------------------------
# Each takes (ctx, a, b, c, d) and checks only graph structure; the
# boundary-coloring obligation is applied afterwards.


def _two_triangles(ctx: _Ctx, a, b, c, d) -> bool:
    if ctx.tri_sets != {frozenset((a, b, c)), frozenset((b, c, d))}:
        return False
    return (
        ctx.nbrs[a] == {b, c}
        and ctx.nbrs[b] == {a, c, d}
        and ctx.nbrs[d] == {b, c}
    )


def _one_triangle(ctx: _Ctx, a, b, c) -> bool:
    return ctx.tri_sets == {frozenset((a, b, c))}


def _a7_22(ctx, a, b, c, d):
    return (
        _one_triangle(ctx, a, b, c)
        and ctx.nbrs[d] == {c}
        and ctx.nbrs[a] == {b, c}
        and ctx.nbrs[b] == {a, c}
    )


def _a7_23(ctx, a, b, c, d):
    return (
        _one_triangle(ctx, a, b, c)
        and ctx.nbrs[d] == {b}
        and ctx.nbrs[a] == {b, c}
        and ctx.nbrs[b] == {a, c, d}
    )


def _a7_24(ctx, a, b, c, d):
    return (
        _one_triangle(ctx, a, b, c)
        and ctx.nbrs[a] == {b, c}
        and not (ctx.nbrs[d] & {a, b, c})
        and (ctx.nbrs[b] - {a, c}) <= ctx.nbrs[d]
        and not (ctx.nbrs[c] & ctx.nbrs[d])
    )


def _a7_25(ctx, a, b, c, d):
    return (
        _one_triangle(ctx, a, b, c)
        and not ctx.nbrs[d]
        and ctx.nbrs[a] == {b, c}
    )


def _m11_23(ctx, a, b, c, d):
    return (
        _one_triangle(ctx, a, b, c)
        and not ctx.nbrs[d]
        and ctx.nbrs[a] == {b, c}
        and ctx.nbrs[b] == {a, c}
    )


_A7_CLAUSES = (
    ("2.1", _two_triangles),
    ("2.2", _a7_22),
    ("2.3", _a7_23),
    ("2.4", _a7_24),
    ("2.5", _a7_25),
)

_M11_CLAUSES = (
    ("2.1", _two_triangles),
    ("2.2", _a7_22),
    ("2.3", _m11_23),
)


def _match_quad_clauses(ctx: _Ctx, family: str, clauses) -> Verdict:
    """Exhaustive role search with the N(X)\\X monochromatic coloring."""
    verts = sorted(ctx.g.vertices)
    structural_only: list[str] = []
    for clause, pred in clauses:
        for quad in itertools.permutations(verts, 4):
            if not pred(ctx, *quad):
                continue
            mono = ctx.external_mono(quad)
            coloring = ctx.colored(mono)
            if coloring is None:
                structural_only.append(clause)
                continue
            assignment = dict(zip("abcd", quad))
            trace = []
            if clause in ("2.2", "2.3") and family == "A7":
                other = "2.3" if clause == "2.2" else "2.2"
                other_pred = dict(clauses)[other]
                if any(other_pred(ctx, *q) for q in itertools.permutations(verts, 4)):
                    trace.append(
                        f"conditions 2.2 and 2.3 both match; {clause} selected by clause order"
                    )
            return _accept(family, clause, assignment, coloring, trace)
    if structural_only:
        return _reject(
            family,
            f"condition(s) {sorted(set(structural_only))} match structurally but no "
            "3-coloring keeps the external neighbors of the role set monochromatic",
        )
    return _reject(family, _shape_refutation(ctx))


def _shape_refutation(ctx: _Ctx) -> str:
    if ctx.tri:
        return f"no admissible role assignment: {len(ctx.tri)} triangle(s), first {ctx.tri[0]}"
    return "triangle-free but not 3-colorable"


def classify_solvable(g: ComplementGraph) -> Verdict:
    ctx = _Ctx(g)
    if ctx.tri:
        return _reject("solvable", f"triangle {ctx.tri[0]}")
    coloring = ctx.colored(None)
    if coloring is None:
        return _reject("solvable", "no proper 3-coloring")
    return Verdict(
        family="solvable",
        accepted=True,
        condition_tag="solvable",
        clause="1",
        coloring=coloring,
    )


def classify_triangle_free(g: ComplementGraph, group: str) -> Verdict:
    inner = classify_solvable(g)
    if not inner.accepted:
        return _reject(group, inner.refutation or "")
    return _accept(group, "1", coloring=inner.coloring)


def classify_a7(g: ComplementGraph) -> Verdict:
    ctx = _Ctx(g)
    v1 = _tf_and_colorable(ctx, "A7")
    if v1 is not None:
        return v1
    return _match_quad_clauses(ctx, "A7", _A7_CLAUSES)


def classify_m11(g: ComplementGraph) -> Verdict:
    ctx = _Ctx(g)
    v1 = _tf_and_colorable(ctx, "M11")
    if v1 is not None:
        return v1
    return _match_quad_clauses(ctx, "M11", _M11_CLAUSES)


def classify_m12(g: ComplementGraph) -> Verdict:
    family = "M12"
    ctx = _Ctx(g)
    base = ctx.colored(None)
    if base is None:
        return _reject(family, "no proper 3-coloring")
    if not ctx.tri:
        return _accept(family, "1", coloring=base)
    verts = sorted(g.vertices)
    structural_only = []
    # clause 2: the role set is a whole component shaped triangle + pendant
    for quad in itertools.permutations(verts, 4):
        a, b, c, d = quad
        if (
            _one_triangle(ctx, a, b, c)
            and ctx.nbrs[a] == {b, c}
            and ctx.nbrs[b] == {a, c}
            and ctx.nbrs[c] == {a, b, d}
            and ctx.nbrs[d] == {c}
        ):
            return _accept(family, "2", dict(zip("abcd", quad)), base)
    # clause 3: isolated d; neighbors of c besides a, b monochromatic
    for quad in itertools.permutations(verts, 4):
        a, b, c, d = quad
        if not (
            _one_triangle(ctx, a, b, c)
            and ctx.nbrs[a] == {b, c}
            and ctx.nbrs[b] == {a, c}
            and not ctx.nbrs[d]
        ):
            continue
        mono = frozenset(ctx.nbrs[c] - {a, b})
        coloring = ctx.colored(mono)
        if coloring is None:
            structural_only.append("3")
            continue
        return _accept(family, "3", dict(zip("abcd", quad)), coloring)
    if structural_only:
        return _reject(
            family,
            "condition(s) ['3'] match structurally but no 3-coloring keeps the "
            "external neighbors of c monochromatic",
        )
    return _reject(family, _shape_refutation(ctx))


def classify_paw_closed(g: ComplementGraph, group: str) -> Verdict:
    """Families whose role set must form a closed triangle-plus-extra component."""
    ctx = _Ctx(g)
    base = ctx.colored(None)
    if base is None:
        return _reject(group, "no proper 3-coloring")
    if not ctx.tri:
        return _accept(group, "1", coloring=base)
    verts = sorted(g.vertices)
    for quad in itertools.permutations(verts, 4):
        a, b, c, d = quad
        if (
            _one_triangle(ctx, a, b, c)
            and ctx.nbrs[a] == {b, c}
            and ctx.nbrs[b] == {a, c}
            and ctx.nbrs[c] == {a, b}
            and not ctx.nbrs[d]
        ):
            return _accept(group, "2", dict(zip("abcd", quad)), base)
    for quad in itertools.permutations(verts, 4):
        a, b, c, d = quad
        if (
            _one_triangle(ctx, a, b, c)
            and ctx.nbrs[a] == {b, c}
            and ctx.nbrs[b] == {a, c}
            and ctx.nbrs[c] == {a, b, d}
            and ctx.nbrs[d] == {c}
        ):
            return _accept(group, "3", dict(zip("abcd", quad)), base)
    return _reject(group, _shape_refutation(ctx))


def classify_paw_open(g: ComplementGraph, group: str) -> Verdict:
    """Families where c may carry external edges under a monochromatic
    constraint on its neighbors besides a, b, d."""
    ctx = _Ctx(g)
    if ctx.colored(None) is None:
        return _reject(group, "no proper 3-coloring")
    if not ctx.tri:
        return _accept(group, "1", coloring=ctx.colored(None))
    verts = sorted(g.vertices)
    structural_only = []
    # the pendant clause is preferred: an isolated vertex may coexist with
    # the pendant, and the pendant certificate builds without a product step
    for clause, d_pred in (("3", "pendant"), ("2", "isolated")):
        for quad in itertools.permutations(verts, 4):
            a, b, c, d = quad
            if not (
                _one_triangle(ctx, a, b, c)
                and ctx.nbrs[a] == {b, c}
                and ctx.nbrs[b] == {a, c}
            ):
                continue
            if d_pred == "isolated" and ctx.nbrs[d]:
                continue
            if d_pred == "pendant" and ctx.nbrs[d] != {c}:
                continue
            mono = frozenset(ctx.nbrs[c] - {a, b, d})
            coloring = ctx.colored(mono)
            if coloring is None:
                structural_only.append(clause)
                continue
            return _accept(group, clause, dict(zip("abcd", quad)), coloring)
    if structural_only:
        return _reject(
            group,
            f"condition(s) {sorted(set(structural_only))} match structurally but no "
            "3-coloring keeps the neighbors of c other than a, b, d monochromatic",
        )
    return _reject(group, _shape_refutation(ctx))


def classify_isolated_block(g: ComplementGraph, group: str) -> Verdict:
    """Families admitting a four-vertex block X with N(X) contained in X.

    For PSL(3,4) the block may be complete and only the rest of the graph
    must be 3-colorable; for G2(3) and U4(3) the block must not be
    complete and the whole graph must be 3-colorable.
    """
    whole_must_color = group != "PSL(3,4)"
    ctx = _Ctx(g)
    base = ctx.colored(None)
    if whole_must_color and base is None:
        return _reject(group, "no proper 3-coloring")
    if not ctx.tri and base is not None:
        return _accept(group, "1", coloring=base)
    for x in itertools.combinations(sorted(g.vertices), 4):
        xs = set(x)
        if not g.neighborhood(xs) <= xs:
            continue
        if group != "PSL(3,4)" and all(
            g.has_edge(u, v) for u, v in itertools.combinations(x, 2)
        ):
            continue
        rest = g.without(xs)
        if not rest.is_triangle_free():
            continue
        rest_coloring = find_3coloring(rest)
        if rest_coloring is None:
            continue
        coloring = base if whole_must_color else rest_coloring
        return _accept(group, "2", dict(zip("abcd", x)), coloring)
    if ctx.tri:
        return _reject(group, _shape_refutation(ctx))
    return _reject(group, "triangle-free but not 3-colorable")


def classify_a5(g: ComplementGraph) -> Verdict:
    family = "A5"
    ctx = _Ctx(g)
    v1 = _tf_and_colorable(ctx, family)
    if v1 is not None:
        return v1
    if not ctx.colored(None) and not ctx.tri:
        return _reject(family, "triangle-free but not 3-colorable")
    verts = sorted(g.vertices)
    structural_only = []

    def shared(b: str, c: str, a: str) -> bool:
        return all({b, c} <= t and a not in t for t in ctx.tri_sets)

    clauses = (
        (
            "2.1",
            lambda a, b, c: _one_triangle(ctx, a, b, c)
            and ctx.nbrs[a] == {b, c}
            and ctx.nbrs[b] == {a, c},
        ),
        (
            "2.2",
            lambda a, b, c: shared(b, c, a)
            and not g.has_edge(a, b)
            and not g.has_edge(a, c)
            and (ctx.nbrs[b] - {c}) <= (ctx.nbrs[a] & ctx.nbrs[c]),
        ),
        (
            "2.3",
            lambda a, b, c: shared(b, c, a)
            and not ctx.nbrs[a]
            and (ctx.nbrs[b] - {c}) <= ctx.nbrs[c],
        ),
    )
    for clause, pred in clauses:
        for trip in itertools.permutations(verts, 3):
            if not pred(*trip):
                continue
            mono = ctx.external_mono(trip)
            coloring = ctx.colored(mono)
            if coloring is None:
                structural_only.append(clause)
                continue
            return _accept(family, clause, dict(zip("abc", trip)), coloring)
    if structural_only:
        return _reject(
            family,
            f"condition(s) {sorted(set(structural_only))} match structurally but no "
            "3-coloring keeps the external neighbors of the role set monochromatic",
        )
    return _reject(family, _shape_refutation(ctx))


# -- dispatch ----------------------------------------------------------------

_KIND_DISPATCH = {
    "A7": lambda g, name: classify_a7(g),
    "A5": lambda g, name: classify_a5(g),
    "M11": lambda g, name: classify_m11(g),
    "M12": lambda g, name: classify_m12(g),
    "triangle-free": classify_triangle_free,
    "paw-closed": classify_paw_closed,
    "paw-open": classify_paw_open,
    "block-3col": classify_isolated_block,
    "block-any": classify_isolated_block,
}


def classifiable_families() -> tuple[str, ...]:
    names = [
        name
        for name, fact in cat.load_catalog().groups.items()
        if fact.classified and fact.family is not None
    ]
    return ("solvable", *sorted(names))


def classify(g: ComplementGraph, family: str) -> Verdict:
    if family == "solvable":
        return classify_solvable(g)
    fact = cat.load_catalog().groups.get(family)
    if fact is None:
        raise cat.UnknownGroupError(family)
    if not fact.classified or fact.family is None:
        raise ValueError(f"no classifier for {family}")
    return _KIND_DISPATCH[fact.family](g, family)


def classify_all(g: ComplementGraph) -> dict[str, Verdict]:
    return {family: classify(g, family) for family in classifiable_families()}
