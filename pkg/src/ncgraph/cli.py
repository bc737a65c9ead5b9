"""Command-line front end.

    ncgraph group list
    ncgraph group info <name|file.json>
    ncgraph graph <name> [--complement] [--format dot|json|text]
    ncgraph gamma <name> [--complement]
    ncgraph verify [--max-order N] [--report PATH]

Exit codes: 0 success, 1 verification failures, 2 usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import UnknownGroup, compute_tags, get_group, standard_catalog
from .domination import domination_number
from .graphs import components
from .groups import FiniteGroup, GroupError, cyclicizer_of_group, load_group_json
from .noncyclic import GroupIsCyclic, build_noncyclic_graph, is_acceptable, noncyclic_complement
from .theorems import run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class CliError(Exception):
    pass


def _resolve(selector: str) -> tuple[str, FiniteGroup]:
    path = Path(selector)
    if selector.endswith(".json") or path.is_file():
        try:
            return path.stem, load_group_json(path)
        except OSError as exc:
            raise CliError(f"InvalidTableFile: cannot read {selector}: {exc}") from exc
        except (GroupError, ValueError, KeyError, TypeError) as exc:
            raise CliError(f"InvalidTableFile: {selector}: {exc}") from exc
    try:
        entry = get_group(selector)
    except UnknownGroup:
        raise CliError(f"UnknownGroup: {selector!r} (try `ncgraph group list`)") from None
    return entry.name, entry.group


def _group_summary(name: str, group: FiniteGroup) -> dict:
    tags = compute_tags(group)
    return {
        "name": name,
        "order": group.order,
        "abelian": "abelian" in tags,
        "cyclic": "cyclic" in tags,
        "order_profile": {str(k): v for k, v in group.order_profile().items()},
        "cyc_size": len(cyclicizer_of_group(group)),
        "acceptable": is_acceptable(group),
    }


def cmd_group_list(args) -> int:
    rows = [
        {"name": e.name, "order": e.order, "tags": sorted(e.tags)} for e in standard_catalog()
    ]
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        for r in rows:
            print(f"{r['name']:<8} {r['order']:>3}  {', '.join(r['tags'])}")
    return EXIT_OK


def cmd_group_info(args) -> int:
    info = _group_summary(*_resolve(args.group))
    if args.format == "json":
        print(json.dumps(info, indent=2))
    else:
        for key, value in info.items():
            if key == "order_profile":
                value = ", ".join(f"{k}:{v}" for k, v in value.items())
            print(f"{key}: {str(value).lower() if isinstance(value, bool) else value}")
    return EXIT_OK


def _graph_for(selector: str, complement: bool):
    name, group = _resolve(selector)
    try:
        ncg = build_noncyclic_graph(group)
    except GroupIsCyclic as exc:
        raise CliError(f"GroupIsCyclic: {name}: {exc}") from exc
    return name, noncyclic_complement(ncg) if complement else ncg


def cmd_graph(args) -> int:
    name, ncg = _graph_for(args.group, args.complement)
    labels = ncg.labels
    if args.format == "dot":
        title = f"{name} complement" if args.complement else name
        sys.stdout.write(ncg.graph.to_dot(labels, name=title))
    elif args.format == "json":
        print(json.dumps(ncg.graph.to_dict(labels)))
    else:
        g = ncg.graph
        print(f"{'complement of ' if args.complement else ''}non-cyclic graph of {name}")
        print(f"vertices: {g.vertex_count}, edges: {g.edge_count()}")
        print("components: " + " ∪ ".join(str(c) for c in components(g)))
        for u, v in g.edges():
            print(f"  {labels[u]} -- {labels[v]}")
    return EXIT_OK


def cmd_gamma(args) -> int:
    _, ncg = _graph_for(args.group, args.complement)
    print(json.dumps(domination_number(ncg.graph).to_dict(ncg.labels)))
    return EXIT_OK


def cmd_verify(args) -> int:
    catalog = [e for e in standard_catalog() if args.max_order is None or e.order <= args.max_order]
    if not catalog:
        raise CliError("no catalog groups within --max-order")
    report = run_all(catalog)
    if args.report:
        try:
            Path(args.report).write_text(report.to_json() + "\n", encoding="utf-8")
        except OSError as exc:
            raise CliError(f"cannot write report: {exc}") from exc
    checked = sorted({e.group for e in report.entries if e.status != "na"})
    print(f"groups checked: {', '.join(checked)}")
    print(report.summary())
    for e in report.failures():
        print(f"FAIL {e.theorem} [{e.group}]: {e.witness}")
    print(f"note: {report.scope_note}")
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ncgraph", description="Non-cyclic graphs of small finite groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    group = sub.add_parser("group", help="browse the group catalog")
    gsub = group.add_subparsers(dest="group_command", required=True)
    p = gsub.add_parser("list", help="list catalog groups")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_group_list)
    p = gsub.add_parser("info", help="describe a catalog group or a JSON Cayley table")
    p.add_argument("group")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_group_info)

    p = sub.add_parser("graph", help="export the non-cyclic graph")
    p.add_argument("group")
    p.add_argument("--complement", action="store_true")
    p.add_argument("--format", choices=["dot", "json", "text"], default="text")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("gamma", help="exact domination number with a witness")
    p.add_argument("group")
    p.add_argument("--complement", action="store_true")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("verify", help="run every check over the catalog")
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--report", default=None, help="write the JSON report here")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
