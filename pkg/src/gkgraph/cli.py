"""Command-line surface: classify, construct, verify-blueprint, enumerate,
criteria, catalog.

Graphs are read as complements by default (every realizability condition
lives on the complement); pass --as-prime-graph when the file holds the
prime graph itself.  All JSON outputs carry a "schema" field and are
emitted with sorted keys, so identical invocations produce identical
bytes.  Exit codes: 0 accepted/ok, 1 rejected/failed, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog as cat
from . import construct as con
from .classify import classifiable_families, classify, classify_all
from .criteria import boundary
from .graphs import ENUMERATE_CAP, GraphError, enumerate_graphs, load_graph_file, to_json_dict

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_ERROR = 2


def _emit(data: dict, fmt: str, text_lines) -> None:
    if fmt == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for line in text_lines(data):
            print(line)


def _load(path: str, as_complement: bool):
    return load_graph_file(path, as_complement=as_complement)


def _cmd_classify(args) -> int:
    g = _load(args.graph, args.as_complement)
    if args.family == "all":
        verdicts = classify_all(g)
        data = {
            "schema": 1,
            "graph": to_json_dict(g),
            "verdicts": {f: v.to_json_dict() for f, v in verdicts.items()},
        }
        _emit(
            data,
            args.output,
            lambda d: [
                f"{f:<12} {'accept ' + (v['condition_tag'] or '') if v['accepted'] else 'reject: ' + (v['refutation'] or '')}"
                for f, v in sorted(d["verdicts"].items())
            ],
        )
        return EXIT_OK
    verdict = classify(g, args.family)
    _emit(
        verdict.to_json_dict(),
        args.output,
        lambda d: [
            f"{args.family}: "
            + (f"accept via {d['condition_tag']}" if d["accepted"] else f"reject: {d['refutation']}")
        ],
    )
    return EXIT_OK if verdict.accepted else EXIT_REJECTED


def _cmd_construct(args) -> int:
    g = _load(args.graph, args.as_complement)
    verdict = classify(g, args.family)
    if not verdict.accepted:
        _emit(
            {"schema": 1, "family": args.family, "accepted": False,
             "refutation": verdict.refutation},
            args.output,
            lambda d: [f"{args.family}: reject: {d['refutation']}"],
        )
        return EXIT_REJECTED
    bp = con.build(g, verdict)
    _emit(
        bp.to_json_dict(),
        args.output,
        lambda d: [
            f"{args.family}: blueprint via {d['family']}:{d['clause']}",
            f"  extension: {d['extension']}",
            f"  prime map: {d['prime_map']}",
            f"  tower primes: O={d['o_primes']} D={d['d_primes']} I={d['i_primes']}",
            f"  cyclic factors: {d['post_products']}",
        ],
    )
    return EXIT_OK


def _cmd_verify_blueprint(args) -> int:
    with open(args.blueprint, "r", encoding="utf-8") as fh:
        bp = con.blueprint_from_json_dict(json.load(fh))
    g = _load(args.graph, args.as_complement)
    evaluated = con.evaluate_blueprint(bp)
    same = con.roundtrip_matches(g, bp, evaluated)
    data = {
        "schema": 1,
        "pass": same,
        "evaluated": to_json_dict(evaluated),
    }
    _emit(data, args.output, lambda d: ["pass" if d["pass"] else "fail"])
    return EXIT_OK if same else EXIT_REJECTED


def enumerate_report(max_vertices: int, families: list[str]) -> dict:
    """Counts of accepted isomorphism classes per family and vertex count,
    plus the containment check that solvable-accepted classes stay accepted."""
    if max_vertices > ENUMERATE_CAP - 1:
        raise GraphError(f"enumerate report cap is {ENUMERATE_CAP - 1} vertices")
    counts: dict[str, dict[str, int]] = {f: {} for f in families}
    totals: dict[str, int] = {}
    containment = {f: True for f in families if f != "solvable"}
    for n in range(1, max_vertices + 1):
        key = str(n)
        totals[key] = 0
        for f in families:
            counts[f][key] = 0
        for g in enumerate_graphs(n):
            totals[key] += 1
            solvable_ok = classify(g, "solvable").accepted
            for f in families:
                v = classify(g, f) if f != "solvable" else classify(g, "solvable")
                if v.accepted:
                    counts[f][key] += 1
                elif f != "solvable" and solvable_ok:
                    containment[f] = False
    return {
        "schema": 1,
        "max_vertices": max_vertices,
        "total_classes": totals,
        "accepted": counts,
        "solvable_contained_in_family": containment,
    }


def _cmd_enumerate(args) -> int:
    families = args.family or ["solvable"]
    for f in families:
        if f != "solvable" and f not in classifiable_families():
            raise cat.UnknownGroupError(f)
    data = enumerate_report(args.max_vertices, families)
    data["seed"] = args.seed

    def text(d):
        lines = ["n    classes  " + "  ".join(f"{f:>12}" for f in families)]
        for n in sorted(d["total_classes"], key=int):
            row = f"{n:<4} {d['total_classes'][n]:<8}"
            row += "  ".join(f"{d['accepted'][f][n]:>12}" for f in families)
            lines.append(row)
        for f, ok in d["solvable_contained_in_family"].items():
            lines.append(f"solvable-accepted within {f}-accepted: {'yes' if ok else 'NO'}")
        return lines

    _emit(data, args.output, text)
    return EXIT_OK


def _cmd_criteria(args) -> int:
    report = boundary(args.group)
    _emit(
        report.to_json_dict(),
        args.output,
        lambda d: [
            f"{args.group}: allowed {d['allowed']}",
            *(f"  {p}: forbidden [{tag}]" for p, tag in d["forbidden"].items()),
        ],
    )
    return EXIT_OK


def _fact_to_dict(fact) -> dict:
    if isinstance(fact, cat.GroupFact):
        data = {
            "schema": 1,
            "kind": "group",
            "name": fact.name,
            "k4": fact.k4,
            "classified": fact.classified,
            "family": fact.family,
            "order_factorization": (
                {str(p): e for p, e in fact.order_factorization.items()}
                if fact.order_factorization
                else None
            ),
            "out_order": fact.out_order,
            "schur_multiplier_order": fact.schur_multiplier_order,
            "sylow_fc": (
                {str(p): b for p, b in fact.sylow_fc.items()} if fact.sylow_fc else None
            ),
            "shape_tag": fact.shape_tag,
            "complement": to_json_dict(fact.complement) if fact.complement else None,
            "relevant_subgroups": list(fact.relevant_subgroups),
        }
    elif isinstance(fact, cat.CoverFact):
        data = {
            "schema": 1,
            "kind": "cover",
            "name": fact.name,
            "base": fact.base,
            "kernel_order": fact.kernel_order,
            "central": fact.central,
            "vectors": [list(v) for v in fact.vectors],
        }
    else:
        data = {
            "schema": 1,
            "kind": "extension",
            "name": fact.name,
            "base": fact.base,
            "order": fact.order,
            "complement": to_json_dict(fact.complement),
            "vectors": [list(v) for v in fact.vectors] if fact.vectors else None,
        }
    if getattr(fact, "note", ""):
        data["note"] = fact.note
    return data


def _cmd_catalog(args) -> int:
    if args.action == "validate":
        violations = cat.validate_catalog()
        _emit(
            {"schema": 1, "violations": violations},
            args.output,
            lambda d: (d["violations"] or ["catalog ok"]),
        )
        return EXIT_OK if not violations else EXIT_REJECTED
    if args.action == "list":
        names = sorted(cat.load_catalog().groups)
        _emit({"schema": 1, "groups": names}, args.output, lambda d: d["groups"])
        return EXIT_OK
    fact = cat.lookup(args.name)
    data = _fact_to_dict(fact)
    _emit(data, args.output, lambda d: [json.dumps(d, indent=2, sort_keys=True)])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gkgraph", description=__doc__)
    parser.add_argument("--output", choices=("json", "text"), default="json")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed recorded with randomized suites")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_flags(p):
        p.add_argument("graph", help="graph file (.json or edge list)")
        p.add_argument(
            "--as-complement",
            action=argparse.BooleanOptionalAction,
            default=True,
            help="whether the file holds the complement (default) or the prime graph",
        )
        p.add_argument(
            "--as-prime-graph",
            dest="as_complement",
            action="store_false",
            help="shorthand for --no-as-complement",
        )

    p = sub.add_parser("classify", help="decide realizability for a family")
    p.add_argument("--family", required=True,
                   help="group name, 'solvable', or 'all'")
    add_graph_flags(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("construct", help="emit a blueprint for an accepted graph")
    p.add_argument("--family", required=True)
    add_graph_flags(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify-blueprint", help="evaluate a blueprint against a graph")
    p.add_argument("blueprint", help="blueprint JSON file")
    add_graph_flags(p)
    p.set_defaults(func=_cmd_verify_blueprint)

    p = sub.add_parser("enumerate", help="accepted-class counts per vertex count")
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--family", action="append",
                   help="repeatable; defaults to solvable")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("criteria", help="external-edge boundary report")
    p.add_argument("group")
    p.set_defaults(func=_cmd_criteria)

    p = sub.add_parser("catalog", help="inspect the embedded catalog")
    p.add_argument("action", choices=("show", "validate", "list"))
    p.add_argument("name", nargs="?")
    p.set_defaults(func=_cmd_catalog)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "catalog" and args.action == "show" and not args.name:
        parser.error("catalog show needs a name")
    try:
        return args.func(args)
    except (GraphError, cat.UnknownGroupError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
