"""Numerical models of algebraic surfaces.

A :class:`SurfaceModel` records just enough of a surface to evaluate the
invariants in this package: the group ``H^2(S, Z)`` (or a sublattice carrying
the classes of interest), the intersection pairing on its free quotient, the
canonical class, Hodge numbers, an optional elliptic fibration and, when
``q = 1``, the degree of a class along the Albanese fibre.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import ConsistencyError, NonProjectiveError, PreconditionError
from .fgab import FgAbGroup, GroupElement, lattice_index, present_group


@dataclass(frozen=True)
class Hodge:
    q: int
    p_g: int
    chi_O: int
    c2: int

    def __post_init__(self):
        if self.chi_O != 1 - self.q + self.p_g:
            raise PreconditionError(
                f"chi_O = {self.chi_O} but 1 - q + p_g = {1 - self.q + self.p_g}"
            )
        if self.q < 0 or self.p_g < 0:
            raise PreconditionError("Hodge numbers q and p_g must be nonnegative")


@dataclass(frozen=True)
class FibrationData:
    base_genus: int
    fiber: GroupElement
    multiple_fibers: tuple[tuple[int, GroupElement], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "multiple_fibers", tuple((int(m), f) for m, f in self.multiple_fibers))
        if self.base_genus < 0:
            raise PreconditionError("base genus must be nonnegative")
        for i, (m, f) in enumerate(self.multiple_fibers, 1):
            if m < 2:
                raise PreconditionError(f"multiple fibre {i} has multiplicity {m} < 2")
            if m * f != self.fiber:
                raise ConsistencyError(f"multiple fibre {i}: {m}*F_{i} is not the fibre class")


@dataclass(frozen=True)
class NumInv:
    beta_sq: int
    beta_k: int
    k_sq: int
    h: int
    chi_beta: int
    m: int
    alb_deg: int | None = None

    @property
    def beta_beta_minus_k(self) -> int:
        return self.beta_sq - self.beta_k


@dataclass(frozen=True)
class SurfaceModel:
    name: str
    h2: FgAbGroup
    intersection_form: tuple[tuple[int, ...], ...]
    canonical: GroupElement
    hodge: Hodge
    fibration: FibrationData | None = None
    albanese_degree: tuple[int, ...] | None = None
    metadata: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        r = self.h2.free_rank
        Q = self.intersection_form
        if len(Q) != r or any(len(row) != r for row in Q):
            raise PreconditionError(f"intersection form must be {r}x{r} on the free quotient")
        if any(Q[i][j] != Q[j][i] for i in range(r) for j in range(r)):
            raise PreconditionError("intersection form is not symmetric")
        if self.canonical.group != self.h2:
            raise PreconditionError("canonical class does not lie in H^2")
        if self.fibration is not None and self.fibration.fiber.group != self.h2:
            raise PreconditionError("fibration classes do not lie in H^2")
        if self.albanese_degree is not None:
            if len(self.albanese_degree) != self.h2.num_generators:
                raise PreconditionError("albanese degrees need one entry per generator")
            for rel in self.h2.relations:
                if sum(a * b for a, b in zip(rel, self.albanese_degree)):
                    raise ConsistencyError(f"albanese degree does not vanish on relation {list(rel)}")
        elif self.hodge.q == 1:
            raise PreconditionError("albanese degrees are required when q = 1")
        k_sq = self.pair(self.canonical, self.canonical)
        if k_sq + self.hodge.c2 != 12 * self.hodge.chi_O:
            raise ConsistencyError(
                f"Noether's formula fails: K^2 + c2 = {k_sq} + {self.hodge.c2} but 12 chi(O) = {12 * self.hodge.chi_O}"
            )

    def pair(self, a: GroupElement, b: GroupElement) -> int:
        """Intersection number; torsion parts pair to zero."""
        Q = self.intersection_form
        x, y = a.free_part, b.free_part
        return sum(x[i] * Q[i][j] * y[j] for i in range(len(x)) for j in range(len(y)) if x[i] and y[j])

    def albanese(self, a: GroupElement) -> int:
        if self.albanese_degree is None:
            raise PreconditionError(f"surface {self.name!r} has no albanese degree form")
        return sum(c * w for c, w in zip(self.h2.lift(a), self.albanese_degree))

    def element(self, coeffs: Sequence[int]) -> GroupElement:
        return self.h2.element(coeffs)

    def __getitem__(self, name: str) -> GroupElement:
        return self.h2.generator(name)


def canonical_class(g: int, chi_O: int, fibration: FibrationData) -> GroupElement:
    """``K = (2g - 2 + chi_O) F + sum (m_i - 1) F_i`` for an elliptic fibration over a genus ``g`` curve."""
    k = (2 * g - 2 + chi_O) * fibration.fiber
    for m, f in fibration.multiple_fibers:
        k = k + (m - 1) * f
    return k


def form_on_free_quotient(group: FgAbGroup, gram: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Transport a Gram matrix on generators to free canonical coordinates.

    Raises ConsistencyError unless the Gram matrix descends, i.e. pairs every
    relation and every torsion class to zero.
    """
    n = group.num_generators
    if len(gram) != n or any(len(row) != n for row in gram):
        raise PreconditionError(f"intersection form must be {n}x{n} on the generators")
    gram = [[int(v) for v in row] for row in gram]
    if any(gram[i][j] != gram[j][i] for i in range(n) for j in range(n)):
        raise PreconditionError("intersection form is not symmetric")
    r = group.free_rank
    basis = []
    for i in range(r):
        e = GroupElement(group, tuple(int(i == j) for j in range(r)), group.zero().torsion_part)
        basis.append(group.lift(e))
    M = tuple(
        tuple(sum(basis[a][i] * gram[i][j] * basis[b][j] for i in range(n) for j in range(n)) for b in range(r))
        for a in range(r)
    )
    coords = [g.free_part for g in group.gen_coords]
    for i in range(n):
        for j in range(n):
            val = sum(coords[i][a] * M[a][b] * coords[j][b] for a in range(r) for b in range(r))
            if val != gram[i][j]:
                raise ConsistencyError(
                    f"intersection form does not descend to H^2: entry ({i},{j}) is {gram[i][j]}, "
                    f"free-quotient value {val}"
                )
    return M


def numerical_invariants(S: SurfaceModel, beta: GroupElement) -> NumInv:
    if beta.group != S.h2:
        raise PreconditionError("beta does not lie in H^2 of the surface")
    k = S.canonical
    bb, bk, kk = S.pair(beta, beta), S.pair(beta, k), S.pair(k, k)
    if (bb + bk) % 2:
        raise ConsistencyError(f"beta^2 + beta.k = {bb + bk} is odd; intersection form is not characteristic")
    chi2 = bb - bk + 2 * S.hodge.chi_O
    alb = S.albanese(beta) if S.hodge.q == 1 else None
    return NumInv(
        beta_sq=bb,
        beta_k=bk,
        k_sq=kk,
        h=(bb + bk) // 2 + 1,
        chi_beta=chi2 // 2,
        m=(bb - bk) // 2,
        alb_deg=alb,
    )


@dataclass(frozen=True)
class LogTransformInput:
    zetas: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "zetas", tuple(tuple(int(v) for v in z) for z in self.zetas))
        for i, (m, u, v) in enumerate(self.zetas, 1):
            if m < 1:
                raise PreconditionError(f"zeta_{i}: order m = {m} must be >= 1")
            if gcd(gcd(m, u), v) != 1:
                raise PreconditionError(f"zeta_{i}: gcd(m, u, v) = gcd({m}, {u}, {v}) != 1")

    def points(self) -> list[tuple[Fraction, Fraction]]:
        """Each torsion point ``(u + v*omega)/m`` in the basis ``1, omega``."""
        return [(Fraction(u, m), Fraction(v, m)) for m, u, v in self.zetas]


def build_log_transform(
    data: LogTransformInput | Sequence[tuple[int, int, int]], name: str = "log_transform"
) -> SurfaceModel:
    """Logarithmic transforms of ``P^1 x F`` at torsion points of ``F = C/<1, omega>``.

    ``H^2 = Z + G`` where ``G`` is generated by ``F, F_1, ..., F_r`` modulo
    ``m_i F_i = F``, ``sum u_i F_i = 0`` and ``sum v_i F_i = 0``.  The extra
    summand is generated by a class ``X`` dual to the primitive fibre class;
    it is chosen with ``X.X`` equal to the parity of ``k.X`` so the form stays
    unimodular and characteristic on the free quotient.
    """
    if not isinstance(data, LogTransformInput):
        data = LogTransformInput(tuple(data))
    r = len(data.zetas)
    pts = data.points()
    total = (sum(p[0] for p in pts), sum(p[1] for p in pts))
    if total != (0, 0):
        raise NonProjectiveError(
            "logarithmic transform is not projective: projectivity requires the torsion points "
            f"to sum to zero, got {total[0]} + ({total[1]})*omega"
        )

    fiber_names = ["F"] + [f"F{i}" for i in range(1, r + 1)]
    rels = []
    for i, (m, _, _) in enumerate(data.zetas, 1):
        row = [0] * (r + 1)
        row[0], row[i] = -1, m
        rels.append(row)
    rels.append([0] + [u for _, u, _ in data.zetas])
    rels.append([0] + [v for _, _, v in data.zetas])
    G = present_group(r + 1, rels, fiber_names)
    if G.free_rank != 1:
        raise ConsistencyError(f"fibre group has rank {G.free_rank}, expected 1")

    index = lattice_index([(1, 0), (0, 1)], pts)
    alb = [index]
    for i, (m, _, _) in enumerate(data.zetas, 1):
        if index % m:
            raise ConsistencyError(f"albanese degree of F{i} is {index}/{m}, not an integer")
        alb.append(index // m)

    # orient the primitive fibre class f0 so that F = c*f0 with c > 0
    c = G.gen_coords[0].free_part[0]
    sgn = 1 if c > 0 else -1
    mult = [(m, G.gen_coords[i]) for i, (m, _, _) in enumerate(data.zetas, 1) if m >= 2]
    fib_proto = FibrationData(0, G.gen_coords[0], mult)
    kappa = sgn * canonical_class(0, 0, fib_proto).free_part[0]
    x_sq = kappa % 2
    # E = a*X + b*f0 with E.f0 = a, E.E = 0
    a, rem = divmod(index, abs(c))
    if rem or (a * x_sq) % 2:
        raise ConsistencyError("albanese fibre class is not integral")
    alb.append(a * x_sq // 2)

    names = fiber_names + ["X"]
    n = r + 2
    gram = [[0] * n for _ in range(n)]
    for j in range(r + 1):
        gram[j][n - 1] = gram[n - 1][j] = sgn * G.gen_coords[j].free_part[0]
    gram[n - 1][n - 1] = x_sq
    h2 = present_group(n, [row + [0] for row in rels], names)
    form = form_on_free_quotient(h2, gram)

    fib = FibrationData(
        base_genus=0,
        fiber=h2.generator("F"),
        multiple_fibers=[(m, h2.generator(f"F{i}")) for i, (m, _, _) in enumerate(data.zetas, 1) if m >= 2],
    )
    hodge = Hodge(q=1, p_g=0, chi_O=0, c2=0)
    return SurfaceModel(
        name=name,
        h2=h2,
        intersection_form=form,
        canonical=canonical_class(fib.base_genus, hodge.chi_O, fib),
        hodge=hodge,
        fibration=fib,
        albanese_degree=tuple(alb),
        metadata={"lattice_index": index, "zetas": data.zetas, "fiber_group": G},
    )


def build_explicit(
    name: str,
    generators: Sequence[str],
    relations: Sequence[Sequence[int]],
    canonical: Sequence[int],
    gram: Sequence[Sequence[int]],
    hodge: Hodge,
    fibration: dict | None = None,
    albanese_degrees: Sequence[int] | None = None,
) -> SurfaceModel:
    """A surface given directly by a presentation of (part of) its ``H^2``.

    ``gram`` is the intersection matrix on the listed generators.  With a
    fibration (``base_genus``, ``fiber`` vector, ``multiple_fibers`` as
    ``(m, vector)`` pairs) the canonical class must agree with the fibration
    formula for ``K``.
    """
    h2 = present_group(len(generators), [list(r) for r in relations], generators)
    form = form_on_free_quotient(h2, gram)
    k = h2.element(canonical)
    fib = None
    if fibration is not None:
        fib = FibrationData(
            base_genus=fibration["base_genus"],
            fiber=h2.element(fibration["fiber"]),
            multiple_fibers=[(m, h2.element(v)) for m, v in fibration.get("multiple_fibers", ())],
        )
        expected = canonical_class(fib.base_genus, hodge.chi_O, fib)
        if expected != k:
            raise ConsistencyError("canonical class disagrees with the fibration formula for K")
    return SurfaceModel(
        name=name,
        h2=h2,
        intersection_form=form,
        canonical=k,
        hodge=hodge,
        fibration=fib,
        albanese_degree=tuple(albanese_degrees) if albanese_degrees is not None else None,
    )
