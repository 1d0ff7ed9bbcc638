"""Command-line surface: list the catalog, print Capelli elements, run
verification suites, emit JSON reports.

Exit codes: 0 all requested checks free of failures (measured outcomes
count as non-failures), 1 some check failed, 2 unresolved group/irrep
selector or unknown check name, 3 invalid user-supplied irrep.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .capelli import (
    capelli_element,
    center_basis,
    character_basis,
    render_capelli,
    verify_centrality,
    verify_closed_form,
    verify_conjugation_invariance,
    verify_det_variants,
)
from .catalog import catalog_group, catalog_irreps, catalog_names, catalog_summary
from .groups import DEFAULT_ORDER_LIMIT, Group, load_group
from .irreps import IrrepSet, load_irrep, validate, verify_E_basis, verify_schur_products
from .reports import Report
from .weyl import (
    GENERIC_SIZE_LIMIT,
    REP_DEGREE_LIMIT,
    THEOREM_M_LIMIT,
    build_generic,
    build_rep,
    verify_capelli,
    verify_capelli_properties,
    verify_capelli_rep,
    verify_det_equalities,
    verify_pi_relations,
    verify_rep_relations,
)

GENERIC_ALPHAS = (Fraction(1), Fraction(3), Fraction(5, 2))


@dataclass
class RunConfig:
    group: str | None = None
    group_file: str | None = None
    irrep: str | None = None
    irrep_file: str | None = None
    checks: list[str] = field(default_factory=list)
    at: str | None = None
    fmt: str = "text"
    out: str | None = None
    max_order: int = DEFAULT_ORDER_LIMIT


# -- check registry -------------------------------------------------------------


def _check_schur(irrep_set: IrrepSet) -> Report:
    return verify_schur_products(irrep_set)


def _check_e_basis(irrep_set: IrrepSet) -> Report:
    return verify_E_basis(irrep_set)


def _check_closed_form(irrep_set: IrrepSet) -> Report:
    report = Report()
    for irrep in irrep_set.irreps:
        report.extend(verify_closed_form(irrep))
    return report


def _check_central(irrep_set: IrrepSet) -> Report:
    report = Report()
    for irrep in irrep_set.irreps:
        report.extend(verify_centrality(irrep, irrep_set))
    return report


def _check_conj_inv(irrep_set: IrrepSet) -> Report:
    report = Report()
    for irrep in irrep_set.irreps:
        report.extend(verify_conjugation_invariance(irrep))
    return report


def _check_basis_capelli(irrep_set: IrrepSet) -> Report:
    _, report = center_basis(irrep_set)
    return report


def _check_basis_char(irrep_set: IrrepSet) -> Report:
    _, report = character_basis(irrep_set)
    return report


def _check_det_variants(irrep_set: IrrepSet) -> Report:
    report = Report()
    for irrep in irrep_set.irreps:
        report.extend(verify_det_variants(irrep))
    return report


def _check_weyl_relations(irrep_set: IrrepSet) -> Report:
    report = Report()
    for irrep in irrep_set.irreps:
        if irrep.degree > REP_DEGREE_LIMIT:
            report.results.append(
                _skip("weyl-relations", irrep.label, f"degree {irrep.degree} > {REP_DEGREE_LIMIT}")
            )
            continue
        report.extend(verify_rep_relations(irrep))
        _, _, _, pi = build_rep(irrep)
        report.extend(verify_pi_relations(pi, irrep.alpha, irrep.label))
    return report


def _check_weyl_capelli(irrep_set: IrrepSet) -> Report:
    report = Report()
    for m in range(1, GENERIC_SIZE_LIMIT + 1):
        for alpha in GENERIC_ALPHAS:
            _, xm, dm, pi = build_generic(m, alpha)
            report.extend(verify_capelli(xm, dm, pi, alpha, f"generic m={m} alpha={alpha}"))
    for irrep in irrep_set.irreps:
        if irrep.degree > REP_DEGREE_LIMIT:
            report.results.append(
                _skip("capelli-identity", irrep.label, f"degree {irrep.degree} > {REP_DEGREE_LIMIT}")
            )
            continue
        report.extend(verify_capelli_rep(irrep))
    return report


def _check_weyl_central(irrep_set: IrrepSet) -> Report:
    report = Report()
    for m in (1, 2):
        for alpha in GENERIC_ALPHAS:
            _, _, _, pi = build_generic(m, alpha)
            report.extend(verify_capelli_properties(pi, alpha, f"generic m={m} alpha={alpha}"))
    return report


def _check_det_equalities(irrep_set: IrrepSet) -> Report:
    report = Report()
    for m in range(1, THEOREM_M_LIMIT + 1):
        report.extend(verify_det_equalities(m))
    return report


def _skip(check, irrep, detail):
    from .reports import CheckResult

    return CheckResult(check, irrep, "skipped", detail)


CHECKS = {
    "schur": _check_schur,
    "e-basis": _check_e_basis,
    "closed-form": _check_closed_form,
    "central": _check_central,
    "conj-inv": _check_conj_inv,
    "basis-capelli": _check_basis_capelli,
    "basis-char": _check_basis_char,
    "det-variants": _check_det_variants,
    "weyl-relations": _check_weyl_relations,
    "weyl-capelli": _check_weyl_capelli,
    "weyl-central": _check_weyl_central,
    "det-equalities": _check_det_equalities,
}

# these presuppose a complete set of irreps (degree squares summing to the
# group order); they are skipped, not failed, when run on a restriction
NEEDS_COMPLETE_SET = {"schur", "e-basis", "basis-capelli", "basis-char"}


def _is_complete(irrep_set: IrrepSet) -> bool:
    return sum(r.degree * r.degree for r in irrep_set.irreps) == irrep_set.group.order


# -- selector resolution -----------------------------------------------------------


def resolve_group(config: RunConfig) -> Group:
    if config.group_file:
        try:
            group = load_group(config.group_file)
        except (OSError, ValueError, KeyError) as exc:
            print(f"error: cannot load group file: {exc}", file=sys.stderr)
            sys.exit(2)
        if group.order > config.max_order:
            print(f"error: group order {group.order} exceeds limit {config.max_order}", file=sys.stderr)
            sys.exit(2)
        return group
    if config.group in catalog_names():
        return catalog_group(config.group)
    print(f"error: unknown group {config.group!r}; try one of {', '.join(catalog_names())}",
          file=sys.stderr)
    sys.exit(2)


def resolve_irreps(config: RunConfig, group: Group) -> IrrepSet:
    if config.irrep_file:
        try:
            irrep = load_irrep(config.irrep_file, group)
        except (OSError, ValueError, KeyError) as exc:
            print(f"error: cannot load irrep file: {exc}", file=sys.stderr)
            sys.exit(3)
        report = validate(irrep)
        if not report.ok:
            print("error: irrep file fails validation:", file=sys.stderr)
            print(str(report), file=sys.stderr)
            sys.exit(3)
        return IrrepSet(group, (irrep,))
    if config.group_file:
        print("error: a group file needs --irrep-file for its irreps", file=sys.stderr)
        sys.exit(2)
    irrep_set = catalog_irreps(config.group)
    if config.irrep:
        try:
            return IrrepSet(group, (irrep_set.by_label(config.irrep),))
        except KeyError:
            labels = ", ".join(r.label for r in irrep_set.irreps)
            print(f"error: unknown irrep {config.irrep!r}; available: {labels}", file=sys.stderr)
            sys.exit(2)
    return irrep_set


# -- commands -----------------------------------------------------------------------


def cmd_list(args) -> int:
    for row in catalog_summary():
        degrees = ",".join(str(d) for d in row["degrees"])
        print(f"{row['name']:4} order {row['order']:3}  exponent {row['exponent']:3}  "
              f"classes {row['classes']:2}  irrep degrees [{degrees}]")
    return 0


def cmd_capelli(args) -> int:
    config = _config_from(args)
    group = resolve_group(config)
    irrep_set = resolve_irreps(config, group)
    payload = []
    for irrep in irrep_set.irreps:
        element = capelli_element(irrep)
        if config.at is not None:
            value = element.poly(Fraction(config.at))
            rendered = str(value)
            payload.append({"irrep": irrep.label, "at": str(config.at), "value": rendered})
        else:
            rendered = render_capelli(element.poly)
            payload.append({"irrep": irrep.label, "capelli": rendered})
        if config.fmt == "text":
            tag = f" at z={config.at}" if config.at is not None else "(z)"
            print(f"C^{irrep.label}{tag} = {rendered}")
    if config.fmt == "json":
        _emit({"tool": "capelli-lab", "version": __version__, "group": group.name,
               "elements": payload}, config.out)
    return 0


def cmd_verify(args) -> int:
    config = _config_from(args)
    requested = _parse_checks(config.checks)
    group = resolve_group(config)
    irrep_set = resolve_irreps(config, group)

    results = []
    complete = _is_complete(irrep_set)
    t_total = time.monotonic()
    for name in requested:
        started = time.monotonic()
        try:
            if name in NEEDS_COMPLETE_SET and not complete:
                entries = [_skip(name, "set", "needs the complete irrep set of the group")]
            else:
                entries = CHECKS[name](irrep_set).results
        except Exception as exc:  # a crash inside one check is a failure, not an abort
            from .reports import CheckResult

            entries = [CheckResult(name, "*", "fail", f"crashed: {exc!r}")]
        elapsed_ms = int((time.monotonic() - started) * 1000)
        for entry in entries:
            results.append({
                "name": name,
                "check": entry.check,
                "irrep": entry.irrep,
                "status": entry.status,
                "detail": entry.detail,
                "runtime_ms": elapsed_ms,
            })

    failed = [r for r in results if r["status"] == "fail"]
    payload = {
        "tool": "capelli-lab",
        "version": __version__,
        "group": group.name,
        "checks": requested,
        "results": sorted(results, key=lambda r: (r["name"], r["irrep"], r["check"])),
        "failures": len(failed),
        "runtime_ms": int((time.monotonic() - t_total) * 1000),
    }

    if config.fmt == "json" or config.out:
        _emit(payload, config.out)
    if config.fmt == "text":
        for r in payload["results"]:
            detail = f"  {r['detail']}" if r["detail"] else ""
            print(f"[{r['status']:>8}] {r['name']:14} {r['check']:24} ({r['irrep']}){detail}")
        print(f"{len(results)} results, {len(failed)} failures, {payload['runtime_ms']} ms")
    return 0 if not failed else 1


def _parse_checks(tokens) -> list[str]:
    names = []
    for token in tokens:
        names.extend(t.strip() for t in token.split(",") if t.strip())
    if not names or "all" in names:
        return list(CHECKS)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        print(f"error: unknown checks {unknown}; available: {', '.join(CHECKS)}", file=sys.stderr)
        sys.exit(2)
    return names


def _config_from(args) -> RunConfig:
    raw_limit = os.environ.get("CAPELLI_LAB_MAX_ORDER", "")
    try:
        max_order = int(raw_limit) if raw_limit else DEFAULT_ORDER_LIMIT
    except ValueError:
        print(f"error: CAPELLI_LAB_MAX_ORDER={raw_limit!r} is not an integer", file=sys.stderr)
        sys.exit(2)
    return RunConfig(
        group=getattr(args, "group", None),
        group_file=getattr(args, "group_file", None),
        irrep=getattr(args, "irrep", None),
        irrep_file=getattr(args, "irrep_file", None),
        checks=getattr(args, "checks", []) or [],
        at=getattr(args, "at", None),
        fmt=getattr(args, "format", "text"),
        out=getattr(args, "out", None),
        max_order=max_order,
    )


def _emit(payload, out_path):
    text = json.dumps(payload, indent=2)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="capelli-lab",
        description="Exact Capelli-element computations and identity checks over finite group algebras",
    )
    parser.add_argument("--version", action="version", version=f"capelli-lab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="list catalog groups with orders, class counts, irrep degrees")

    p_cap = sub.add_parser("capelli", help="print Capelli elements")
    p_cap.add_argument("--group", required=True, help="catalog group name")
    p_cap.add_argument("--irrep", help="irrep label (default: all irreps of the group)")
    p_cap.add_argument("--at", help="evaluate at z = K (rational, e.g. -1 or 3/2)")
    p_cap.add_argument("--format", choices=("text", "json"), default="text")
    p_cap.add_argument("--out", help="write JSON payload to this path")

    p_ver = sub.add_parser("verify", help="run verification checks and emit a report")
    src = p_ver.add_mutually_exclusive_group(required=True)
    src.add_argument("--group", help="catalog group name")
    src.add_argument("--group-file", help="path to a group JSON file")
    p_ver.add_argument("--irrep", help="restrict to one catalog irrep label")
    p_ver.add_argument("--irrep-file", help="path to an irrep JSON file (validated before use)")
    p_ver.add_argument("--checks", nargs="+", default=["all"],
                       help=f"comma/space separated from: {', '.join(CHECKS)}, or 'all'")
    p_ver.add_argument("--format", choices=("text", "json"), default="text")
    p_ver.add_argument("--out", help="write the JSON report to this path")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "list":
        return cmd_list(args)
    if args.command == "capelli":
        return cmd_capelli(args)
    return cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())
