"""Exact series algebra.

:class:`QLaurent` is a finite Laurent polynomial in ``q^(1/2)`` carrying a
power of the equivariant parameter ``t``; exponents are stored doubled so
that half-integers stay integral.  :class:`ULaurent` is a Laurent series in
``u`` with rational coefficients known up to and including ``u^order``.

Throughout, ``x = q^(1/2) + q^(-1/2)``.  The change of variables ``-q = e^(iu)``
sends ``x^2 = q + 2 + q^(-1)`` to ``2 - 2 cos u = (2 sin(u/2))^2``; it is only
ever applied to even powers of ``x``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Mapping

from .errors import SeriesError

DEFAULT_ORDER = 24


def _fmt_frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class QLaurent:
    """``t^t_power * sum_a coeffs[a] q^(a/2)``."""

    __slots__ = ("_c", "t_power")

    def __init__(self, coeffs: Mapping[int, int] | None = None, t_power: int = 0):
        self._c = {int(a): int(v) for a, v in (coeffs or {}).items() if v}
        self.t_power = int(t_power)

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(sorted(self._c.items()))

    def coefficient(self, doubled_exponent: int) -> int:
        return self._c.get(doubled_exponent, 0)

    def is_zero(self) -> bool:
        return not self._c

    def is_palindromic(self) -> bool:
        return all(self._c.get(-a, 0) == v for a, v in self._c.items())

    def top(self) -> int | None:
        return max(self._c) if self._c else None

    def __eq__(self, other):
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self._c == other._c and (self.t_power == other.t_power or not self._c)

    def __hash__(self):
        return hash((tuple(sorted(self._c.items())), self.t_power if self._c else 0))

    def __add__(self, other: "QLaurent") -> "QLaurent":
        if self.t_power != other.t_power:
            raise SeriesError(f"cannot add series with t-powers {self.t_power} and {other.t_power}")
        out = dict(self._c)
        for a, v in other._c.items():
            out[a] = out.get(a, 0) + v
        return QLaurent(out, self.t_power)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        out: dict[int, int] = {}
        for a, v in self._c.items():
            for b, w in other._c.items():
                out[a + b] = out.get(a + b, 0) + v * w
        return QLaurent(out, self.t_power + other.t_power)

    __rmul__ = __mul__

    def scale(self, c: int) -> "QLaurent":
        return QLaurent({a: c * v for a, v in self._c.items()}, self.t_power)

    def with_t_power(self, m: int) -> "QLaurent":
        return QLaurent(self._c, m)

    def __repr__(self):
        return f"QLaurent({self.coeffs}, t_power={self.t_power})"

    def __str__(self):
        if not self._c:
            return "0"
        terms = []
        for a, v in sorted(self._c.items()):
            terms.append(f"{v}*q^({_fmt_frac(Fraction(a, 2))})")
        body = " + ".join(terms).replace("+ -", "- ")
        return f"t^{self.t_power}*({body})" if self.t_power else body

    def to_json(self) -> dict:
        return {"t_power": self.t_power, "coeffs": {str(a): v for a, v in sorted(self._c.items())}}


class ULaurent:
    """``t^t_power * sum_{k <= order} c_k u^k + O(u^(order+1))``."""

    __slots__ = ("_c", "order", "t_power")

    def __init__(self, coeffs: Mapping[int, Fraction | int], order: int, t_power: int = 0):
        self.order = int(order)
        self._c = {int(k): Fraction(v) for k, v in coeffs.items() if v and k <= self.order}
        self.t_power = int(t_power)

    @classmethod
    def constant(cls, c, order: int = DEFAULT_ORDER, t_power: int = 0) -> "ULaurent":
        return cls({0: c}, order, t_power)

    @property
    def min_order(self) -> int:
        return min(self._c) if self._c else self.order + 1

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(sorted(self._c.items()))

    def coefficient(self, k: int) -> Fraction:
        if k > self.order:
            raise SeriesError(f"coefficient of u^{k} is beyond the known order {self.order}")
        return self._c.get(k, Fraction(0))

    def truncate(self, order: int) -> "ULaurent":
        if order > self.order:
            raise SeriesError(f"cannot extend a series known to order {self.order} to {order}")
        return ULaurent(self._c, order, self.t_power)

    def is_zero(self) -> bool:
        return not self._c

    def __eq__(self, other):
        if not isinstance(other, ULaurent):
            return NotImplemented
        return self.order == other.order and self._c == other._c and (
            self.t_power == other.t_power or not self._c
        )

    def __hash__(self):
        return hash((self.order, tuple(sorted(self._c.items()))))

    def __add__(self, other: "ULaurent") -> "ULaurent":
        if self.t_power != other.t_power and self._c and other._c:
            raise SeriesError(f"cannot add series with t-powers {self.t_power} and {other.t_power}")
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return ULaurent(out, min(self.order, other.order), self.t_power if self._c else other.t_power)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, ULaurent):
            return self.scale(other)
        order = min(self.order + other.min_order, other.order + self.min_order)
        out: dict[int, Fraction] = {}
        for a, v in self._c.items():
            for b, w in other._c.items():
                if a + b <= order:
                    out[a + b] = out.get(a + b, 0) + v * w
        return ULaurent(out, order, self.t_power + other.t_power)

    def __rmul__(self, c):
        return self.scale(c)

    def scale(self, c) -> "ULaurent":
        c = Fraction(c)
        return ULaurent({k: c * v for k, v in self._c.items()}, self.order, self.t_power)

    def shift(self, k: int) -> "ULaurent":
        """Multiply by ``u^k``."""
        return ULaurent({a + k: v for a, v in self._c.items()}, self.order + k, self.t_power)

    def inverse(self) -> "ULaurent":
        """Multiplicative inverse; the leading coefficient must be nonzero."""
        if not self._c:
            raise SeriesError("cannot invert the zero series")
        v = self.min_order
        rel = self.order - v  # relative precision of the unit part
        a = [self._c.get(v + i, Fraction(0)) for i in range(rel + 1)]
        b = [Fraction(0)] * (rel + 1)
        b[0] = 1 / a[0]
        for n in range(1, rel + 1):
            b[n] = -sum(a[i] * b[n - i] for i in range(1, n + 1)) / a[0]
        return ULaurent({i - v: c for i, c in enumerate(b)}, rel - v, -self.t_power)

    def __pow__(self, e: int) -> "ULaurent":
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return ULaurent({0: 1}, self.order - self.min_order)
        out = None
        base = self
        while e:
            if e & 1:
                out = base if out is None else out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def agrees_with(self, other: "ULaurent", order: int) -> bool:
        return self.truncate(order) == other.truncate(order)

    def __repr__(self):
        return f"ULaurent({self.coeffs}, order={self.order}, t_power={self.t_power})"

    def __str__(self):
        terms = [f"{_fmt_frac(v)}*u^{k}" for k, v in sorted(self._c.items())]
        terms.append(f"O(u^{self.order + 1})")
        body = " + ".join(terms).replace("+ -", "- ")
        return f"t^{self.t_power}*({body})" if self.t_power else body

    def to_json(self) -> dict:
        return {
            "t_power": self.t_power,
            "order": self.order,
            "coeffs": {str(k): _fmt_frac(v) for k, v in sorted(self._c.items())},
        }


class BpsSpectrum:
    """Numbers ``n_g`` with ``P = t^t_power * sum_g n_g x^(2g-2)``."""

    __slots__ = ("entries", "t_power")

    def __init__(self, entries: Mapping[int, int], t_power: int = 0):
        self.entries = {int(g): int(n) for g, n in sorted(entries.items()) if n}
        self.t_power = int(t_power)

    def __eq__(self, other):
        if not isinstance(other, BpsSpectrum):
            return NotImplemented
        return self.entries == other.entries and (self.t_power == other.t_power or not self.entries)

    def __repr__(self):
        return f"BpsSpectrum({self.entries}, t_power={self.t_power})"

    def to_json(self) -> dict:
        return {"t_power": self.t_power, "n": {str(g): n for g, n in self.entries.items()}}


def x_power_expand(e: int) -> QLaurent:
    """``(q^(1/2) + q^(-1/2))^e`` for ``e >= 0``."""
    if e < 0:
        raise SeriesError(f"x^{e} is not a Laurent polynomial")
    return QLaurent({2 * j - e: comb(e, j) for j in range(e + 1)})


def _even_x_decomposition(P: QLaurent) -> dict[int, int]:
    """Coefficients ``c_j`` with ``P = sum_j c_j x^(2j)``, ``j >= 0``, by peeling the top term."""
    if not P.is_palindromic():
        raise SeriesError("series is not invariant under q <-> 1/q")
    rest = dict(P.coeffs)
    out: dict[int, int] = {}
    while rest:
        top = max(rest)
        if top % 2:
            raise SeriesError(f"top exponent {top}/2 is not an integer; not a combination of even x-powers")
        j = top // 2
        c = rest[top]
        out[j] = c
        for a, v in x_power_expand(2 * j).coeffs.items():
            nv = rest.get(a, 0) - c * v
            if nv:
                rest[a] = nv
            else:
                rest.pop(a, None)
    return out


def bps_extract(P: QLaurent) -> BpsSpectrum:
    """The BPS numbers of a finite palindromic series, ``n_g`` for ``g >= 1``."""
    return BpsSpectrum({j + 1: c for j, c in _even_x_decomposition(P).items()}, P.t_power)


def bps_reconstruct(spec: BpsSpectrum) -> QLaurent:
    out = QLaurent({}, spec.t_power)
    for g, n in spec.entries.items():
        if g < 1:
            raise SeriesError(f"genus {g} gives an infinite series x^{2 * g - 2}")
        out = out + x_power_expand(2 * g - 2).scale(n).with_t_power(spec.t_power)
    return out


def two_minus_two_cos(order: int) -> ULaurent:
    """``2 - 2 cos u = sum_{k >= 1} 2 (-1)^(k+1) u^(2k) / (2k)!``."""
    return ULaurent(
        {2 * k: Fraction(2 * (-1) ** (k + 1), factorial(2 * k)) for k in range(1, order // 2 + 1)},
        order,
    )


def u_transform(P: QLaurent, order: int = DEFAULT_ORDER) -> ULaurent:
    """Substitute ``-q = e^(iu)`` into a combination of even powers of ``x``."""
    parts = _even_x_decomposition(P)
    x2 = two_minus_two_cos(order)
    out = ULaurent({}, order)
    power = ULaurent({0: 1}, order)
    for j in range(max(parts, default=-1) + 1):
        if j:
            power = (power * x2).truncate(order)
        if parts.get(j):
            out = out + power.scale(parts[j])
    return ULaurent(out.coeffs, order, P.t_power)


def sin_power(e: int, order: int = DEFAULT_ORDER) -> ULaurent:
    """``(2 sin(u/2))^e`` for even ``e`` (negative allowed), known through ``u^order``."""
    if e % 2:
        raise SeriesError(f"exponent {e} is odd")
    rel = order - e
    if rel < 0:
        return ULaurent({}, order)
    # (2 - 2cos u)/u^2 = sum_k 2 (-1)^k u^(2k) / (2k+2)!
    unit = ULaurent(
        {2 * k: Fraction(2 * (-1) ** k, factorial(2 * k + 2)) for k in range(rel // 2 + 1)},
        rel,
    )
    return ((unit ** (e // 2)).truncate(rel)).shift(e)


def series_add(a, b):
    return a + b


def series_mul(a, b):
    return a * b


def series_scale(a, c):
    return a.scale(c)
