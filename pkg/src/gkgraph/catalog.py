"""Embedded catalog of group facts.

The data lives in ``data/catalog.json`` and is the single source of truth
for order factorizations, Sylow Frobenius-criterion flags, Schur
multiplier orders, labeled prime graph complements, perfect extensions
and their fixed-point vectors.  A fixed-point vector of a representation
is the set of primes r such that some element of order r acts with a
nonzero fixed vector while elements of the omitted prime orders act
freely.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from math import prod

from .graphs import ComplementGraph

SHAPE_TAGS = (
    "K4-minus-edge",
    "triangle-plus-pendant",
    "star",
    "K4-complete",
    "A10-shape",
    "triangle",
)


class UnknownGroupError(KeyError):
    """Name not present in the catalog."""


Vector = tuple[int, ...]


@dataclass(frozen=True)
class GroupFact:
    name: str
    k4: bool
    classified: bool
    family: str | None
    order_factorization: dict[int, int] | None
    out_order: int | None
    schur_multiplier_order: int | None
    sylow_fc: dict[int, bool] | None
    shape_tag: str
    complement: ComplementGraph | None
    relevant_subgroups: tuple[str, ...]
    note: str = ""

    @property
    def primes(self) -> tuple[int, ...]:
        if self.order_factorization is None:
            return ()
        return tuple(sorted(self.order_factorization))

    @property
    def order(self) -> int | None:
        if self.order_factorization is None:
            return None
        return prod(p**e for p, e in self.order_factorization.items())


@dataclass(frozen=True)
class CoverFact:
    base: str
    name: str
    kernel_order: int
    central: bool
    vectors: tuple[Vector, ...]
    complement_override: ComplementGraph | None = None
    note: str = ""


@dataclass(frozen=True)
class ExtensionFact:
    base: str
    name: str
    order: int
    complement: ComplementGraph
    vectors: tuple[Vector, ...] | None = None
    note: str = ""


@dataclass(frozen=True)
class Catalog:
    groups: dict[str, GroupFact]
    covers: dict[str, tuple[CoverFact, ...]] = field(default_factory=dict)
    extensions: dict[str, tuple[ExtensionFact, ...]] = field(default_factory=dict)
    k4_list: tuple[str, ...] = ()

    # -- lookups ---------------------------------------------------------

    def lookup(self, name: str) -> GroupFact | CoverFact | ExtensionFact:
        if name in self.groups:
            return self.groups[name]
        for covers in self.covers.values():
            for c in covers:
                if c.name == name and name not in self.groups:
                    return c
        for exts in self.extensions.values():
            for e in exts:
                if e.name == name:
                    return e
        raise UnknownGroupError(name)

    def covers_of(self, base: str) -> tuple[CoverFact, ...]:
        if base not in self.groups:
            raise UnknownGroupError(base)
        return self.covers.get(base, ())

    def central_covers_of(self, base: str) -> tuple[CoverFact, ...]:
        return tuple(c for c in self.covers_of(base) if c.central)

    def extensions_of(self, base: str) -> tuple[ExtensionFact, ...]:
        if base not in self.groups:
            raise UnknownGroupError(base)
        return self.extensions.get(base, ())

    def base_of(self, name: str) -> str:
        fact = self.lookup(name)
        if isinstance(fact, GroupFact):
            return fact.name
        return fact.base

    def primes_of(self, name: str) -> tuple[int, ...]:
        return self.groups[self.base_of(name)].primes

    def order_of(self, name: str) -> int:
        fact = self.lookup(name)
        if isinstance(fact, GroupFact):
            order = fact.order
            if order is None:
                raise UnknownGroupError(f"{name} has symbolic order")
            return order
        if isinstance(fact, CoverFact):
            return fact.kernel_order * self.order_of(fact.base)
        return fact.order

    def complement_of(self, name: str) -> ComplementGraph:
        """Labeled prime graph complement of a group, cover or extension.

        For a central cover n.T every prime dividing n has an element of
        the center commuting with everything, so its vertex loses all
        complement edges; the remaining edges survive unchanged because
        an order-rs element of n.T with rs coprime to n would map onto
        one of T.  Non-central covers and extensions store their
        complements explicitly.
        """
        fact = self.lookup(name)
        if isinstance(fact, GroupFact):
            if fact.complement is None:
                raise UnknownGroupError(f"no labeled complement stored for {name}")
            return fact.complement
        if isinstance(fact, ExtensionFact):
            return fact.complement
        if fact.complement_override is not None:
            return fact.complement_override
        base = self.complement_of(fact.base)
        killed = {p for p in map(int, base.vertices) if fact.kernel_order % p == 0}
        edges = [e for e in base.edges if int(e[0]) not in killed and int(e[1]) not in killed]
        return ComplementGraph(base.vertices, edges)

    def classified_groups(self) -> tuple[str, ...]:
        return tuple(n for n, g in self.groups.items() if g.classified)

    # -- validation --------------------------------------------------------

    def validate(self) -> list[str]:
        """Cross-check the stored data; returns a list of violations."""
        bad: list[str] = []
        for name in self.k4_list:
            if name not in self.groups:
                bad.append(f"missing required group {name}")
        for name, g in self.groups.items():
            if g.shape_tag not in SHAPE_TAGS:
                bad.append(f"{name}: unknown shape tag {g.shape_tag}")
            if g.order_factorization is not None:
                primes = set(g.order_factorization)
                if g.k4 and len(primes) != 4:
                    bad.append(f"{name}: K4 row must have four prime divisors")
                if g.sylow_fc is None or set(g.sylow_fc) != primes:
                    bad.append(f"{name}: Sylow flags do not cover the prime divisors")
                if g.complement is not None:
                    labels = {int(v) for v in g.complement.vertices}
                    if labels != primes:
                        bad.append(f"{name}: complement labels {sorted(labels)} "
                                   f"differ from prime divisors {sorted(primes)}")
            if g.complement is not None:
                err = _shape_mismatch(g.shape_tag, g.complement)
                if err:
                    bad.append(f"{name}: {err}")
            elif g.shape_tag not in ("star", "A10-shape", "K4-minus-edge"):
                bad.append(f"{name}: shape {g.shape_tag} requires a stored complement")
        for base, covers in self.covers.items():
            if base not in self.groups:
                bad.append(f"covers reference unknown base {base}")
                continue
            primes = set(self.groups[base].primes)
            if not any(c.kernel_order == 1 for c in covers):
                bad.append(f"{base}: trivial cover missing")
            for c in covers:
                for vec in c.vectors:
                    if not set(vec) <= primes:
                        bad.append(f"{c.name}: vector {vec} leaves the prime set of {base}")
                if tuple(sorted(primes)) not in c.vectors:
                    bad.append(f"{c.name}: full fixed-point vector missing")
                if not c.central and c.complement_override is None:
                    bad.append(f"{c.name}: non-central cover needs an explicit complement")
        for base, exts in self.extensions.items():
            if base not in self.groups:
                bad.append(f"extensions reference unknown base {base}")
                continue
            primes = set(self.groups[base].primes)
            base_order = self.groups[base].order
            for e in exts:
                labels = {int(v) for v in e.complement.vertices}
                if not labels <= primes:
                    bad.append(f"{e.name}: complement labels leave the prime set of {base}")
                if base_order and e.order % base_order != 0:
                    bad.append(f"{e.name}: order {e.order} not a multiple of |{base}|")
                for vec in e.vectors or ():
                    if not set(vec) <= primes:
                        bad.append(f"{e.name}: vector {vec} leaves the prime set of {base}")
        return bad


def _shape_mismatch(tag: str, g: ComplementGraph) -> str | None:
    n, m = g.n, len(g.edges)
    tri = len(g.triangles())
    degs = sorted(g.degree(v) for v in g.vertices)
    if tag == "K4-minus-edge":
        ok = n == 4 and m == 5
    elif tag == "triangle-plus-pendant":
        ok = n == 4 and m == 4 and tri == 1 and degs == [1, 2, 2, 3]
    elif tag == "K4-complete":
        ok = n == 4 and m == 6
    elif tag == "triangle":
        ok = n == 3 and m == 3
    else:
        return f"shape {tag} should not carry a labeled complement"
    return None if ok else f"stored complement does not match shape {tag}"


# -- loading ---------------------------------------------------------------


def _graph_from_labels(vertices, edge_pairs) -> ComplementGraph:
    return ComplementGraph(
        [str(v) for v in vertices],
        [(str(u), str(v)) for u, v in edge_pairs],
    )


def catalog_from_dict(data: dict) -> Catalog:
    groups: dict[str, GroupFact] = {}
    for row in data["groups"]:
        fact = row.get("order_factorization")
        fact = {int(p): int(e) for p, e in fact.items()} if fact else None
        fc = row.get("sylow_fc")
        fc = {int(p): bool(b) for p, b in fc.items()} if fc else None
        comp = None
        if row.get("complement_edges") is not None:
            comp = _graph_from_labels(sorted(fact), row["complement_edges"])
        groups[row["name"]] = GroupFact(
            name=row["name"],
            k4=row["k4"],
            classified=row["classified"],
            family=row.get("family"),
            order_factorization=fact,
            out_order=row.get("out_order"),
            schur_multiplier_order=row.get("schur_multiplier_order"),
            sylow_fc=fc,
            shape_tag=row["shape_tag"],
            complement=comp,
            relevant_subgroups=tuple(row.get("relevant_subgroups", ())),
            note=row.get("note", ""),
        )
    covers: dict[str, list[CoverFact]] = {}
    for row in data.get("covers", []):
        override = None
        if row.get("complement_edges") is not None:
            override = _graph_from_labels(
                groups[row["base"]].primes, row["complement_edges"]
            )
        covers.setdefault(row["base"], []).append(
            CoverFact(
                base=row["base"],
                name=row["name"],
                kernel_order=row["kernel_order"],
                central=row["central"],
                vectors=tuple(tuple(sorted(v)) for v in row["vectors"]),
                complement_override=override,
                note=row.get("note", ""),
            )
        )
    extensions: dict[str, list[ExtensionFact]] = {}
    for row in data.get("extensions", []):
        extensions.setdefault(row["base"], []).append(
            ExtensionFact(
                base=row["base"],
                name=row["name"],
                order=row["order"],
                complement=_graph_from_labels(
                    row["complement_vertices"], row["complement_edges"]
                ),
                vectors=(
                    tuple(tuple(sorted(v)) for v in row["vectors"])
                    if row.get("vectors") is not None
                    else None
                ),
                note=row.get("note", ""),
            )
        )
    return Catalog(
        groups=groups,
        covers={k: tuple(v) for k, v in covers.items()},
        extensions={k: tuple(v) for k, v in extensions.items()},
        k4_list=tuple(data.get("k4_list", ())),
    )


def raw_catalog_dict() -> dict:
    """A fresh copy of the raw data file (mutable, for validation tests)."""
    text = resources.files("gkgraph").joinpath("data/catalog.json").read_text("utf-8")
    return json.loads(text)


@lru_cache(maxsize=1)
def load_catalog() -> Catalog:
    return catalog_from_dict(raw_catalog_dict())


# module-level conveniences bound to the embedded catalog


def lookup(name: str):
    return load_catalog().lookup(name)


def covers_of(name: str) -> tuple[CoverFact, ...]:
    return load_catalog().covers_of(name)


def complement_of(name: str) -> ComplementGraph:
    return load_catalog().complement_of(name)


def order_of(name: str) -> int:
    return load_catalog().order_of(name)


def validate_catalog() -> list[str]:
    return load_catalog().validate()
