"""Toolkit for prime graphs (Gruenberg-Kegel graphs) of T-solvable groups.

Decides whether an unlabeled graph is realizable as the prime graph of a
T-solvable group for each classified group T with four prime divisors,
emits verifiable certificates, and synthesizes symbolic group blueprints
whose prime graphs it independently re-derives.
"""

from .graphs import (
    CanonicalForm,
    ComplementGraph,
    GraphError,
    canonical_form,
    enumerate_graphs,
    isomorphic,
    load_graph_file,
)
from .coloring import (
    Orientation,
    class_orientation,
    find_3coloring,
    ghrv_coloring,
    has_3path,
)
from .catalog import (
    Catalog,
    CoverFact,
    ExtensionFact,
    GroupFact,
    UnknownGroupError,
    complement_of,
    covers_of,
    load_catalog,
    lookup,
    validate_catalog,
)
from .criteria import BoundaryReport, boundary, fc_rule, schur_rule
from .classify import Verdict, classifiable_families, classify, classify_all, classify_solvable
from .construct import (
    Blueprint,
    BlueprintError,
    RoundtripReport,
    build,
    build_blueprint,
    build_via_product,
    evaluate_blueprint,
    product_complement,
    verify_roundtrip,
)

__version__ = "0.1.0"

__all__ = [
    "Blueprint",
    "BlueprintError",
    "BoundaryReport",
    "CanonicalForm",
    "Catalog",
    "ComplementGraph",
    "CoverFact",
    "ExtensionFact",
    "GraphError",
    "GroupFact",
    "Orientation",
    "RoundtripReport",
    "UnknownGroupError",
    "Verdict",
    "boundary",
    "build",
    "build_blueprint",
    "build_via_product",
    "canonical_form",
    "class_orientation",
    "classifiable_families",
    "classify",
    "classify_all",
    "classify_solvable",
    "complement_of",
    "covers_of",
    "enumerate_graphs",
    "evaluate_blueprint",
    "fc_rule",
    "find_3coloring",
    "ghrv_coloring",
    "has_3path",
    "isomorphic",
    "load_catalog",
    "load_graph_file",
    "lookup",
    "product_complement",
    "schur_rule",
    "validate_catalog",
    "verify_roundtrip",
]
