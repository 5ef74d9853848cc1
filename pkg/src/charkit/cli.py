"""Command-line interface: table, classify, and verify subcommands."""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .catalog import parse_group
from .chartab import character_table
from .classify import GroupContext, classify_group
from .config import Config, seed_from_environment
from .errors import CharkitError
from .verify import ALL_CHECK_IDS, DEFAULT_CATALOG, run_suite


def _add_common(parser):
    parser.add_argument("--json", action="store_true",
                        help="emit JSON instead of text")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for the table computation "
                             "(default: CHARKIT_SEED or 1)")
    parser.add_argument("--element-cap", type=int, default=None,
                        help="largest group order enumerated (default 5000)")
    parser.add_argument("--subgroup-cap", type=int, default=None,
                        help="largest order for the subgroup census "
                             "(default 200)")


def _config(args) -> Config:
    kwargs = {}
    if args.element_cap is not None:
        kwargs["element_cap"] = args.element_cap
    if args.subgroup_cap is not None:
        kwargs["subgroup_cap"] = args.subgroup_cap
    kwargs["seed"] = (args.seed if args.seed is not None
                      else seed_from_environment())
    return Config(**kwargs)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charkit",
        description="Exact character tables, primitivity classification, "
                    "and statement verification for finite permutation "
                    "groups.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="compute an exact character table")
    p_table.add_argument("group", help="group spec (name:S4 or perm:(1 2),(3 4))")
    _add_common(p_table)

    p_cls = sub.add_parser("classify",
                           help="classify the irreducible characters")
    p_cls.add_argument("group", help="group spec")
    _add_common(p_cls)

    p_ver = sub.add_parser("verify", help="run the verification suite")
    p_ver.add_argument("--catalog", default=None,
                       help="comma-separated group specs (default: the "
                            "built-in catalog; empty string: no groups)")
    p_ver.add_argument("--check", default="all",
                       help="check id, comma-separated ids, or 'all'")
    p_ver.add_argument("--max-order", type=int, default=None,
                       help="skip catalog groups above this order")
    _add_common(p_ver)
    return parser


def _cmd_table(args) -> int:
    config = _config(args)
    G = parse_group(args.group, element_cap=config.element_cap)
    table = character_table(G, seed=config.seed)
    if args.json:
        print(json.dumps(table.to_json(), sort_keys=True))
        return 0
    print(f"group {G.label}  order {G.order}  exponent {table.exponent}")
    header = ["class"] + [_short(_cycles(c.representative)) for c in table.classes]
    rows = [header,
            ["size"] + [str(c.size) for c in table.classes],
            ["order"] + [str(c.element_order) for c in table.classes]]
    for i, row in enumerate(table.rows):
        rows.append([f"X{i} (deg {table.degrees[i]})"]
                    + [v.text() for v in row.values])
    _print_aligned(rows)
    return 0


def _cycles(p):
    from .perms import format_cycles
    return format_cycles(p)


def _short(text, limit=24):
    return text if len(text) <= limit else text[:limit - 2] + ".."


def _print_aligned(rows):
    widths = [max(len(row[c]) for row in rows) for c in range(len(rows[0]))]
    for row in rows:
        print("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))


def _cmd_classify(args) -> int:
    config = _config(args)
    G = parse_group(args.group, element_cap=config.element_cap)
    ctx = GroupContext(G, config)
    report = classify_group(G, config, ctx=ctx)
    if args.json:
        print(json.dumps(report.to_json(ctx), sort_keys=True))
        return 0
    print(f"group {G.label}  order {G.order}  |G:G'| = {report.derived_index}")
    rows = [["row", "degree", "primitive", "quasiPrimitive",
             "fullVanishingOff", "monomialWitness"]]
    for i, row in enumerate(report.rows):
        if row.monomial_witness is None:
            witness = "none"
        else:
            witness = (f"subgroup #{row.monomial_witness.subgroup_index} "
                       f"(order {row.monomial_witness.subgroup_order}), "
                       f"linear {row.monomial_witness.linear_index}")
        rows.append([f"X{i}", str(row.degree), str(row.primitive),
                     str(row.quasi_primitive), str(row.full_vanishing_off),
                     witness])
    _print_aligned(rows)
    print(f"counts: pri={report.count_primitive} "
          f"qua={report.count_quasi_primitive} "
          f"fullV={report.count_full_vanishing_off}")
    return 0


def _cmd_verify(args) -> int:
    config = _config(args)
    if args.catalog is None:
        catalog = list(DEFAULT_CATALOG)
    elif args.catalog.strip() == "":
        catalog = []
    else:
        catalog = [s.strip() for s in args.catalog.split(",") if s.strip()]
    if args.check == "all":
        checks = list(ALL_CHECK_IDS)
    else:
        checks = [c.strip() for c in args.check.split(",") if c.strip()]
        unknown = [c for c in checks if c not in ALL_CHECK_IDS]
        if unknown:
            raise CharkitError(
                f"unknown check id(s): {', '.join(unknown)}; known: "
                f"{', '.join(ALL_CHECK_IDS)}")
    results = run_suite(catalog, checks, config, max_order=args.max_order)
    if args.json:
        for r in results:
            print(r.to_json_line())
    else:
        for r in results:
            if r.status == "skipped":
                print(f"skipped  {r.check:22s} {r.group}  ({r.reason})")
            elif r.status == "fail":
                print(f"FAIL     {r.check:22s} {r.group}  {r.witness}")
            else:
                print(f"pass     {r.check:22s} {r.group}")
        n_pass = sum(1 for r in results if r.status == "pass")
        n_fail = sum(1 for r in results if r.status == "fail")
        n_skip = sum(1 for r in results if r.status == "skipped")
        print(f"summary: {n_pass} pass, {n_fail} fail, {n_skip} skipped")
    return 1 if any(r.status == "fail" for r in results) else 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "table":
            return _cmd_table(args)
        if args.command == "classify":
            return _cmd_classify(args)
        return _cmd_verify(args)
    except CharkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
