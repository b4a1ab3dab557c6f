"""Seiberg-Witten invariants of elliptic fibrations and the scalar wall-crossing term."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .errors import ConsistencyError, PreconditionError
from .fgab import GroupElement, solve_fiber_representations
from .surface import SurfaceModel, numerical_invariants


def fm_binomial(a: int, b: int) -> int:
    """``a(a-1)...(a-b+1)/b!`` for any integer ``a`` and ``b >= 0``."""
    if b < 0:
        raise PreconditionError(f"lower index must be nonnegative, got {b}")
    num = 1
    for i in range(b):
        num *= a - i
    return num // factorial(b)


@dataclass(frozen=True)
class SwResult:
    value: int
    solutions: tuple[tuple[int, ...], ...]

    def __int__(self):
        return self.value


def sw_elliptic(S: SurfaceModel, beta: GroupElement) -> SwResult:
    """Signed count of the ways to write ``beta`` as ``d[F] + sum a_i[F_i]``.

    Each representation with ``d >= 0`` and ``0 <= a_i < m_i`` contributes
    ``(-1)^d * binom(2g - 2 + chi_O, d)``.  Only classes with
    ``beta^2 = beta.F = 0`` are accepted.
    """
    fib = S.fibration
    if fib is None:
        raise PreconditionError(f"surface {S.name!r} has no elliptic fibration")
    b2, bf = S.pair(beta, beta), S.pair(beta, fib.fiber)
    if b2 or bf:
        raise PreconditionError(f"need beta^2 = beta.F = 0, got beta^2 = {b2}, beta.F = {bf}")
    top = 2 * fib.base_genus - 2 + S.hodge.chi_O
    sols = solve_fiber_representations(S.h2, fib.fiber, fib.multiple_fibers, beta)
    value = sum((-1) ** s[0] * fm_binomial(top, s[0]) for s in sols)
    return SwResult(value, tuple(sols))


def half_albanese(S: SurfaceModel, beta: GroupElement) -> int:
    """``[2 beta - k] / 2``, the first Segre class of the pushed-forward Poincare bundle."""
    deg = S.albanese(2 * beta - S.canonical)
    if deg % 2:
        raise ConsistencyError(f"[2beta - k] = {deg} is odd")
    return deg // 2


def wall_crossing_delta(S: SurfaceModel, beta: GroupElement) -> int:
    """Degree-``2q`` part of ``P+(beta) - P-(beta)`` for ``p_g = 0`` and ``q <= 1``.

    With ``q = 0`` the Picard variety is a point and only ``s_0 = 1`` can
    survive; with ``q = 1`` only ``s_1 = [2 beta - k]/2`` can.  Either term is
    kept exactly when its index is at least ``1 - chi(beta)``.
    """
    if S.hodge.p_g != 0:
        raise PreconditionError(f"wall-crossing needs p_g = 0, got p_g = {S.hodge.p_g}")
    q = S.hodge.q
    if q >= 2:
        raise PreconditionError(f"wall-crossing is only implemented for q <= 1, got q = {q}")
    chi = numerical_invariants(S, beta).chi_beta
    if q == 0:
        return 1 if chi >= 1 else 0
    s1 = half_albanese(S, beta)
    return s1 if chi >= 0 else 0
