"""Command line interface.

Exit status is 0 on success, 1 when a checked identity or claim fails, and 2
on malformed input (bad flags, schema violations, classes outside an
operation's domain).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .documents import load_surface, parse_class_vector
from .errors import StablePairsError
from .invariants import duality_check, euler_hilb, gw_series, gwpt_check, pt_generating
from .reproduce import reproduce_examples
from .series import DEFAULT_ORDER, bps_extract, u_transform
from .surface import SurfaceModel, numerical_invariants
from .swcalc import sw_elliptic


def _element_json(x) -> dict:
    return {"free": list(x.free_part), "torsion": list(x.torsion_part)}


def _numinv_json(S: SurfaceModel, beta) -> dict:
    inv = numerical_invariants(S, beta)
    out = {
        "beta_sq": inv.beta_sq,
        "beta_k": inv.beta_k,
        "k_sq": inv.k_sq,
        "h": inv.h,
        "chi_beta": inv.chi_beta,
        "m": inv.m,
    }
    if inv.alb_deg is not None:
        out["alb_deg"] = inv.alb_deg
    return out


def _surface_json(S: SurfaceModel) -> dict:
    g = S.h2
    out = {
        "name": S.name,
        "kind": S.metadata.get("kind"),
        "generators": list(g.names),
        "h2": {"free_rank": g.free_rank, "torsion_orders": list(g.torsion_orders), "structure": g.describe()},
        "generator_coords": {n: _element_json(c) for n, c in zip(g.names, g.gen_coords)},
        "intersection_form": [list(r) for r in S.intersection_form],
        "canonical": _element_json(S.canonical),
        "canonical_lift": list(g.lift(S.canonical)),
        "k_sq": S.pair(S.canonical, S.canonical),
        "hodge": {"q": S.hodge.q, "p_g": S.hodge.p_g, "chi_O": S.hodge.chi_O, "c2": S.hodge.c2},
    }
    if S.fibration is not None:
        out["fibration"] = {
            "base_genus": S.fibration.base_genus,
            "fiber": _element_json(S.fibration.fiber),
            "multiple_fibers": [{"m": m, "class": _element_json(f)} for m, f in S.fibration.multiple_fibers],
        }
    if S.albanese_degree is not None:
        out["albanese_degrees"] = list(S.albanese_degree)
    if "lattice_index" in S.metadata:
        out["lattice_index"] = S.metadata["lattice_index"]
    return out


def _human(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_human(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, dict):
                sub = _human(v, indent + 1)
                lines.append(f"{pad}- {sub[0].lstrip()}")
                lines.extend(sub[1:])
            else:
                lines.append(f"{pad}- {_inline(v)}")
    else:
        lines.append(f"{pad}{_inline(value)}")
    return lines


def _flat(v) -> bool:
    items = v.values() if isinstance(v, dict) else v
    return all(not isinstance(x, (dict, list)) or (isinstance(x, list) and _flat(x)) for x in items)


def _inline(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_inline(x)}" for k, x in v.items()) + "}"
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    return str(v)


def cmd_surface(args, S):
    return {"surface": _surface_json(S)}, True


def cmd_sw(args, S):
    beta = parse_class_vector(S, args.beta)
    res = sw_elliptic(S, beta)
    return {
        "beta": _element_json(beta),
        "sw": res.value,
        "representations": [list(s) for s in res.solutions],
        "numerical_invariants": _numinv_json(S, beta),
    }, True


def cmd_pt(args, S):
    beta = parse_class_vector(S, args.beta)
    P = pt_generating(S, beta)
    return {"beta": _element_json(beta), "series": str(P), "series_json": P.to_json(),
            "numerical_invariants": _numinv_json(S, beta)}, True


def cmd_bps(args, S):
    beta = parse_class_vector(S, args.beta)
    spec = bps_extract(pt_generating(S, beta))
    return {"beta": _element_json(beta), "bps": spec.to_json(),
            "numerical_invariants": _numinv_json(S, beta)}, True


def cmd_duality(args, S):
    beta = parse_class_vector(S, args.beta)
    rep = duality_check(S, beta)
    return {
        "beta": _element_json(beta),
        "branch": rep.branch,
        "lhs": None if rep.lhs is None else str(rep.lhs),
        "rhs": None if rep.rhs is None else str(rep.rhs),
        "holds": rep.holds,
        "details": rep.details,
    }, rep.holds


def cmd_gwpt(args, S):
    beta = parse_class_vector(S, args.beta)
    ok = gwpt_check(S, beta, args.order)
    pt = pt_generating(S, beta)
    return {
        "beta": _element_json(beta),
        "order": args.order,
        "pt_series": str(pt),
        "pt_transformed": str(u_transform(pt, args.order)),
        "gw_series": str(gw_series(S, beta, args.order)),
        "agree": ok,
    }, ok


def cmd_euler(args):
    if args.n_max < 0:
        raise argparse.ArgumentTypeError("--n-max must be nonnegative")
    vals = [euler_hilb(args.h, n) for n in range(args.n_max + 1)]
    return {"h": args.h, "euler_characteristics": vals}, True


def cmd_reproduce(args):
    rows = reproduce_examples(args.filter, args.order)
    failed = [r["id"] for r in rows if r["status"] != "PASS"]
    return {"rows": rows, "passed": len(rows) - len(failed), "failed": failed}, not failed


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one JSON document on stdout")
    common.add_argument("--order", type=int, default=argparse.SUPPRESS,
                        help=f"u-series truncation order (default {DEFAULT_ORDER})")

    p = argparse.ArgumentParser(prog="stablepairs", parents=[common],
                                description="Seiberg-Witten and stable pair invariants of surfaces")
    sub = p.add_subparsers(dest="command", required=True)

    surf = sub.add_parser("surface", help="surface documents")
    ssub = surf.add_subparsers(dest="surface_command", required=True)
    show = ssub.add_parser("show", parents=[common], help="print the numerical model of a surface")
    show.add_argument("file")
    show.set_defaults(func=cmd_surface, needs_surface=True)

    for name, func, hlp in [
        ("sw", cmd_sw, "Seiberg-Witten invariant of an elliptic fibration"),
        ("pt-series", cmd_pt, "stable pair generating series"),
        ("bps", cmd_bps, "BPS spectrum of the stable pair series"),
        ("duality-check", cmd_duality, "check the beta <-> k-beta duality identity"),
        ("gwpt-check", cmd_gwpt, "compare PT and GW series under -q = e^(iu)"),
    ]:
        sp = sub.add_parser(name, parents=[common], help=hlp)
        sp.add_argument("file")
        sp.add_argument("--beta", required=True, help="comma-separated coefficients over the generators")
        sp.set_defaults(func=func, needs_surface=True)

    eh = sub.add_parser("euler-hilb", parents=[common], help="Euler characteristics of C^[n]")
    eh.add_argument("--h", type=int, required=True, help="arithmetic genus")
    eh.add_argument("--n-max", type=int, required=True)
    eh.set_defaults(func=cmd_euler, needs_surface=False)

    rep = sub.add_parser("reproduce", parents=[common], help="check every claim of the worked examples")
    rep.add_argument("--filter", default=None, help="only claims whose id starts with this prefix")
    rep.set_defaults(func=cmd_reproduce, needs_surface=False)
    return p


def _render_human(args, report: dict) -> str:
    res = report["results"]
    if args.command == "reproduce":
        lines = []
        for r in res["rows"]:
            line = f"{r['status']}  {r['id']}"
            if r["status"] != "PASS":
                line += f"  expected={_inline(r['expected'])} computed={_inline(r['computed'])}"
            lines.append(line)
        lines.append(f"{res['passed']} passed, {len(res['failed'])} failed")
        return "\n".join(lines)
    if args.command == "sw":
        return "\n".join([f"SW = {res['sw']}"] + _human({k: v for k, v in res.items() if k != "sw"}))
    if args.command == "euler-hilb":
        return "\n".join(f"e(C^[{n}]) = {v}" for n, v in enumerate(res["euler_characteristics"]))
    return "\n".join(_human(res))


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.json = getattr(args, "json", False)
    args.order = getattr(args, "order", DEFAULT_ORDER)
    if args.order < 0:
        parser.error("--order must be nonnegative")
    try:
        if args.needs_surface:
            S = load_surface(args.file)
            results, ok = args.func(args, S)
        else:
            results, ok = args.func(args)
    except (StablePairsError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = {"command": argv, "results": results, "status": "PASS" if ok else "FAIL"}
    if args.json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print(_render_human(args, report))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
