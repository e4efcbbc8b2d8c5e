"""Data-driven rules deciding which vertices of pi(T) may carry edges
to primes outside pi(T) in the complement.

Two rules are mechanized.  The Sylow rule forbids external edges at r
whenever the Sylow r-subgroups of T are not cyclic, dihedral, Klein-4 or
generalized quaternion (the shapes able to act Frobeniusly).  The
multiplier rule forbids them when r is odd, coprime to the Schur
multiplier order, and every fixed-point vector of every perfect central
extension of T contains r.  Non-central perfect extensions are excluded
from the multiplier rule, and a group without recorded extension data
never fires it: the engine only forbids what the catalog can certify.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from . import catalog as cat

RULE_FC = "FC"
RULE_SCHUR = "SCHUR"


@dataclass(frozen=True)
class BoundaryReport:
    group: str
    forbidden: dict[int, str]
    allowed: frozenset[int]
    trace: tuple[str, ...] = field(default=(), compare=False)

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "group": self.group,
            "forbidden": {str(p): tag for p, tag in sorted(self.forbidden.items())},
            "allowed": sorted(self.allowed),
            "trace": list(self.trace),
        }


def _group(name: str, catalog: cat.Catalog) -> cat.GroupFact:
    fact = catalog.groups.get(name)
    if fact is None:
        raise cat.UnknownGroupError(name)
    return fact


def fc_rule(group: str, r: int, catalog: cat.Catalog | None = None) -> bool:
    """External edges at r are forbidden when the Sylow r-subgroup fails
    the Frobenius criterion."""
    catalog = catalog or cat.load_catalog()
    g = _group(group, catalog)
    if g.sylow_fc is None or r not in g.sylow_fc:
        raise ValueError(f"{r} does not divide the order of {group}")
    return not g.sylow_fc[r]


def schur_rule(group: str, r: int, catalog: cat.Catalog | None = None) -> bool:
    catalog = catalog or cat.load_catalog()
    g = _group(group, catalog)
    if g.sylow_fc is None or r not in g.sylow_fc:
        raise ValueError(f"{r} does not divide the order of {group}")
    if r == 2 or g.schur_multiplier_order is None:
        return False
    if gcd(r, g.schur_multiplier_order) != 1:
        return False
    central = catalog.central_covers_of(group)
    if not central:
        return False
    return all(r in vec for cover in central for vec in cover.vectors)


def boundary(group: str, catalog: cat.Catalog | None = None) -> BoundaryReport:
    """Partition pi(T) into externally forbidden and allowed vertices."""
    catalog = catalog or cat.load_catalog()
    g = _group(group, catalog)
    if not g.classified:
        raise ValueError(f"{group} is not classified; boundary rules do not apply")
    forbidden: dict[int, str] = {}
    trace: list[str] = []
    for r in g.primes:
        if fc_rule(group, r, catalog):
            forbidden[r] = RULE_FC
            trace.append(f"{r}: Sylow {r}-subgroup fails the Frobenius criterion")
        elif schur_rule(group, r, catalog):
            forbidden[r] = RULE_SCHUR
            trace.append(
                f"{r}: odd, coprime to the Schur multiplier order "
                f"{g.schur_multiplier_order}, and every fixed-point vector of every "
                f"central perfect extension contains {r}"
            )
        else:
            trace.append(f"{r}: no rule fires; external edges allowed")
    allowed = frozenset(set(g.primes) - set(forbidden))
    return BoundaryReport(group=group, forbidden=forbidden, allowed=allowed, trace=tuple(trace))
