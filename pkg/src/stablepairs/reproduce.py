"""Golden harness: every numeric claim about the worked examples, checked end to end."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterable

from .documents import builtin_surface
from .invariants import NEGATIVE_CASE, duality_check, gwpt_check, pt_generating
from .series import bps_extract
from .surface import canonical_class, numerical_invariants
from .swcalc import sw_elliptic, wall_crossing_delta

SPORADIC = {(0, 0): 1, (1, 0): 2, (2, 0): 4, (0, 1): 1}
GRID = [(n, e) for n in range(7) for e in range(3)]


@dataclass
class Claim:
    id: str
    expected: Any
    compute: Callable[[], Any]


def expected_sw(n: int, e: int) -> int:
    return SPORADIC.get((n, e), 3 * (n + e) - 3)


def build_claims(order: int = 24) -> list[Claim]:
    claims: list[Claim] = []
    add = lambda cid, exp, fn: claims.append(Claim(cid, exp, fn))  # noqa: E731

    rat = builtin_surface("rational_elliptic")
    add("ex31.rational.K", True, lambda: rat.canonical == -rat["F"])
    add("ex31.rational.sw6k", 0, lambda: sw_elliptic(rat, 6 * rat.canonical).value)

    dol = builtin_surface("dolgachev")
    dF, dF1, dF2 = dol["F"], dol["F1"], dol["F2"]
    bp = 6 * dol.canonical
    add("ex31.dolgachev.K", True,
        lambda: canonical_class(0, 1, dol.fibration) == -dF + dF1 + 2 * dF2)
    add("ex31.dolgachev.6k_is_F", True, lambda: bp == dF)
    add("ex31.dolgachev.sw6k", 1, lambda: sw_elliptic(dol, bp).value)
    add("ex31.dolgachev.sw_dual", 0, lambda: sw_elliptic(dol, dol.canonical - bp).value)
    add("ex31.dolgachev.chi", 1, lambda: numerical_invariants(dol, bp).chi_beta)
    add("ex31.dolgachev.wall", 1, lambda: wall_crossing_delta(dol, bp))
    add("ex31.dolgachev.wall_identity", True,
        lambda: sw_elliptic(dol, bp).value - sw_elliptic(dol, dol.canonical - bp).value
        == wall_crossing_delta(dol, bp))

    hyp = builtin_surface("hyperelliptic")
    for d in range(6):
        add(f"ex32.sw.d{d}", int(d == 0), lambda d=d: sw_elliptic(hyp, d * hyp["F"]).value)

    S = builtin_surface("example33")
    F, F1, F2, F3, F4 = (S[x] for x in ("F", "F1", "F2", "F3", "F4"))
    add("ex33.h2", [2, [3]], lambda: [S.h2.free_rank, list(S.h2.torsion_orders)])
    add("ex33.K", True, lambda: S.canonical == 2 * F1)
    add("ex33.rel.F", True, lambda: F == 3 * F1)
    add("ex33.rel.F4", True, lambda: F4 == F1)
    add("ex33.rel.F3", True, lambda: F3 == 2 * F1 - F2)
    add("ex33.EF", 9, lambda: S.metadata["lattice_index"])
    add("ex33.numbers", [0, 0, 0, 0], lambda: [
        S.pair(F1 + F2, F1 + F2), S.pair(F1 + F2, S.canonical),
        S.pair(S.canonical, S.canonical), S.hodge.c2,
    ])

    def beta(n, e):
        return n * F1 + e * F2

    for n, e in GRID:
        add(f"ex33.alb.n{n}e{e}", 3 * (n + e), lambda n=n, e=e: S.albanese(beta(n, e)))
    for n, e in GRID:
        add(f"ex33.sw.n{n}e{e}", expected_sw(n, e), lambda n=n, e=e: sw_elliptic(S, beta(n, e)).value)
    for n, e in GRID:
        add(f"ex33.duality.n{n}e{e}", True, lambda n=n, e=e: duality_check(S, beta(n, e)).holds)
    for n, e in GRID:
        add(f"ex33.exponents.n{n}e{e}", True,
            lambda n=n, e=e: duality_check(S, beta(n, e)).details["exponent_identity"])
    for n, e in GRID:
        sw = expected_sw(n, e)
        add(f"ex33.bps.n{n}e{e}", {"t_power": 0, "n": {"1": sw} if sw else {}},
            lambda n=n, e=e: bps_extract(pt_generating(S, beta(n, e))).to_json())
    for n, e in GRID:
        add(f"ex33.gwpt.n{n}e{e}", True, lambda n=n, e=e: gwpt_check(S, beta(n, e), order))

    neg = builtin_surface("negative_case")
    add("duality.negative_case", [NEGATIVE_CASE, True],
        lambda: (lambda r: [r.branch, r.holds and r.lhs.is_zero() and r.rhs.is_zero()])(
            duality_check(neg, 2 * neg["A"])))
    return claims


def run_claims(claims: Iterable[Claim], filter: str | None = None) -> list[dict]:
    rows = []
    for c in claims:
        if filter and not c.id.startswith(filter):
            continue
        try:
            computed = c.compute()
        except Exception as exc:  # report, do not abort the harness
            computed = f"error: {type(exc).__name__}: {exc}"
        rows.append({
            "id": c.id,
            "expected": c.expected,
            "computed": computed,
            "status": "PASS" if computed == c.expected else "FAIL",
        })
    return rows


def reproduce_examples(filter: str | None = None, order: int = 24) -> list[dict]:
    return run_claims(build_claims(order), filter)
