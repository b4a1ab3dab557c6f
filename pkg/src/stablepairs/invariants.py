"""Stable pair generating series, the duality identity, and the GW/PT comparison."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PreconditionError
from .fgab import GroupElement
from .series import DEFAULT_ORDER, QLaurent, ULaurent, sin_power, u_transform, x_power_expand
from .surface import SurfaceModel, numerical_invariants
from .swcalc import fm_binomial, half_albanese, sw_elliptic

NEGATIVE_CASE = "negative_case"
MAIN_CASE = "main_case"
HYPOTHESIS_FAILURE = "hypothesis_failure"


def pt_generating(S: SurfaceModel, beta: GroupElement) -> QLaurent:
    """``t^m SW(beta) x^(2h-2)`` at the canonical insertion count ``m = beta(beta-k)/2``."""
    inv = numerical_invariants(S, beta)
    if inv.h < 1:
        raise PreconditionError(f"arithmetic genus h = {inv.h} < 1 gives an infinite series")
    sw = sw_elliptic(S, beta).value
    return x_power_expand(2 * inv.h - 2).scale(sw).with_t_power(inv.m)


@dataclass(frozen=True)
class DualityReport:
    branch: str
    lhs: QLaurent | None
    rhs: QLaurent | None
    holds: bool
    details: dict = field(default_factory=dict)


def duality_check(S: SurfaceModel, beta: GroupElement) -> DualityReport:
    """Compare ``PT_beta`` with ``PT_(k-beta) x^(2k(2beta-k)) + [2beta-k]/2 x^(2beta^2)``.

    Only the degenerate regimes are decided: ``beta(beta-k) < 0`` where both
    series vanish, and ``beta(beta-k) = 0`` with ``q = 1`` where both sides are
    assembled from Seiberg-Witten values and Albanese degrees.
    """
    if S.hodge.p_g != 0:
        raise PreconditionError(f"duality needs p_g = 0, got p_g = {S.hodge.p_g}")
    k = S.canonical
    dual = k - beta
    inv = numerical_invariants(S, beta)
    bbk = inv.beta_sq - inv.beta_k
    details = {"beta_beta_minus_k": bbk, "q": S.hodge.q}

    if bbk < 0:
        zero = QLaurent()
        details["m"] = inv.m
        return DualityReport(NEGATIVE_CASE, zero, zero, True, details)
    if bbk > 0:
        details["reason"] = "beta(beta-k) > 0"
        return DualityReport(HYPOTHESIS_FAILURE, None, None, False, details)
    if S.hodge.q != 1:
        details["reason"] = f"beta(beta-k) = 0 requires q = 1, surface has q = {S.hodge.q}"
        return DualityReport(HYPOTHESIS_FAILURE, None, None, False, details)

    kb = S.pair(k, beta)
    kk = S.pair(k, k)
    dd = S.pair(dual, dual)
    lhs_exp = inv.beta_sq + inv.beta_k
    dual_exp = dd + S.pair(dual, k)
    shift_exp = 2 * (2 * kb - kk)
    corr_exp = 2 * inv.beta_sq
    details.update(
        lhs_exponent=lhs_exp,
        dual_exponent=dual_exp,
        shift_exponent=shift_exp,
        correction_exponent=corr_exp,
        exponent_identity=dual_exp + shift_exp == corr_exp == lhs_exp,
        m=inv.m,
        vanishing_for_positive_m=inv.m == 0,
    )
    if min(lhs_exp, dual_exp + shift_exp, corr_exp) < 0:
        details["reason"] = "negative power of q^(1/2) + q^(-1/2); series is infinite"
        return DualityReport(HYPOTHESIS_FAILURE, None, None, False, details)

    sw_b = sw_elliptic(S, beta).value
    sw_d = sw_elliptic(S, dual).value
    half = half_albanese(S, beta)
    details.update(sw_beta=sw_b, sw_k_minus_beta=sw_d, half_alb_2beta_minus_k=half)
    lhs = x_power_expand(lhs_exp).scale(sw_b)
    rhs = x_power_expand(dual_exp + shift_exp).scale(sw_d) + x_power_expand(corr_exp).scale(half)
    return DualityReport(MAIN_CASE, lhs, rhs, lhs == rhs and details["exponent_identity"], details)


def gw_series(S: SurfaceModel, beta: GroupElement, order: int = DEFAULT_ORDER) -> ULaurent:
    """``t^m SW(beta) (2 sin(u/2))^(2h-2)``."""
    inv = numerical_invariants(S, beta)
    sw = sw_elliptic(S, beta).value
    s = sin_power(2 * inv.h - 2, order).scale(sw)
    return ULaurent(s.coeffs, s.order, inv.m)


def gwpt_check(S: SurfaceModel, beta: GroupElement, order: int = DEFAULT_ORDER) -> bool:
    """Whether ``-q = e^(iu)`` carries the PT series onto the GW series through ``u^order``."""
    pt = pt_generating(S, beta)
    gw = gw_series(S, beta, order)
    lhs = u_transform(pt, order)
    return lhs == gw and lhs.t_power == gw.t_power


def euler_hilb(h: int, n: int) -> int:
    """Coefficient of ``q^n`` in ``(1 - q)^(2h-2)``: ``e(C^[n])`` for a smooth genus ``h`` curve."""
    if n < 0:
        raise PreconditionError(f"n = {n} must be nonnegative")
    return (-1) ** n * fm_binomial(2 * h - 2, n)
