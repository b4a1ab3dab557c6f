"""Exact linear algebra over the integers.

Smith normal form, finitely generated abelian groups given by generators and
relations, and the index of a sublattice of a rational vector space.

Conventions
-----------
Relations are the *rows* of an integer matrix ``A`` whose columns are indexed
by the generators.  With ``U @ A @ V == D`` the canonical coordinates of a
generator vector ``x`` are ``V.T @ x``; in particular generator ``j`` has
canonical coordinates equal to row ``j`` of ``V``.  Coordinates sitting on a
diagonal entry 1 are dropped, entries ``d >= 2`` give torsion residues modulo
``d``, and zero diagonal entries (or columns past the last relation) give free
coordinates.  A canonical coordinate vector lifts back to generators through
the rows of ``V^{-1}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import GroupMismatchError, PreconditionError


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry count does not match rows x cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [tuple(int(v) for v in r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols is required for a matrix with no rows")
            cols = len(rows[0])
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntMatrix(
            self.rows,
            other.cols,
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.entries),
        )

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols, self.rows, tuple(tuple(r[j] for r in self.entries) for j in range(self.cols))
        )

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(r) for r in self.entries]
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular and ``D`` in Smith form."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    V_inv: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.rows, self.D.cols)))


def smith_normal_form(A: IntMatrix | Sequence[Sequence[int]], cols: int | None = None) -> SmithDecomposition:
    """Smith normal form of an integer matrix.

    The pivot is always a nonzero entry of minimal absolute value in the
    remaining block; rows and columns are reduced by division with remainder
    until the pivot is isolated and divides every entry of the remaining block.
    """
    if not isinstance(A, IntMatrix):
        A = IntMatrix.from_rows(A, cols)
    m, n = A.rows, A.cols
    a = [list(r) for r in A.entries]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    Vi = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        # col_dst += q * col_src; the inverse acts on rows of V^{-1}
        for row in a:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]
        Vi[src] = [x - q * y for x, y in zip(Vi[src], Vi[dst])]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    v = a[i][j]
                    if v and (best is None or abs(v) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            if best[0] != t:
                swap_rows(t, best[0])
            if best[1] != t:
                swap_cols(t, best[1])
            p = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            if any(a[i][t] for i in range(t + 1, m)) or any(a[t][j] for j in range(t + 1, n)):
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < m and a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
        if best is None:
            break

    return SmithDecomposition(
        U=IntMatrix.from_rows(U, m),
        D=IntMatrix.from_rows(a, n),
        V=IntMatrix.from_rows(V, n),
        V_inv=IntMatrix.from_rows(Vi, n),
    )


@dataclass(frozen=True, eq=False)
class FgAbGroup:
    """The group ``Z^free_rank + sum Z/d_i`` with coordinates for its generators."""

    free_rank: int
    torsion_orders: tuple[int, ...]
    gen_coords: tuple["GroupElement", ...] = field(repr=False)
    names: tuple[str, ...]
    relations: tuple[tuple[int, ...], ...] = field(repr=False)
    # rows of V^{-1} for the kept (torsion, then free) coordinates
    _lifts: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def num_generators(self) -> int:
        return len(self.names)

    def invariants(self) -> tuple[int, tuple[int, ...]]:
        return self.free_rank, self.torsion_orders

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.free_rank, (0,) * len(self.torsion_orders))

    def generator(self, name_or_index: str | int) -> "GroupElement":
        idx = self.names.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        return self.gen_coords[idx]

    def element(self, coeffs: Sequence[int]) -> "GroupElement":
        """The element ``sum coeffs[j] * generator_j``."""
        if len(coeffs) != self.num_generators:
            raise PreconditionError(
                f"class vector has length {len(coeffs)}, expected {self.num_generators}"
            )
        out = self.zero()
        for c, g in zip(coeffs, self.gen_coords):
            if c:
                out = out + c * g
        return out

    def lift(self, x: "GroupElement") -> tuple[int, ...]:
        """A generator coefficient vector representing ``x``."""
        coords = tuple(x.torsion_part) + tuple(x.free_part)
        n = self.num_generators
        return tuple(sum(c * row[j] for c, row in zip(coords, self._lifts)) for j in range(n))

    def describe(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion_orders)
        return " + ".join(parts) if parts else "0"

    def __eq__(self, other):
        if not isinstance(other, FgAbGroup):
            return NotImplemented
        return (
            self is other
            or (
                self.free_rank == other.free_rank
                and self.torsion_orders == other.torsion_orders
                and self.names == other.names
                and self.relations == other.relations
            )
        )

    def __hash__(self):
        return hash((self.free_rank, self.torsion_orders, self.names, self.relations))


@dataclass(frozen=True, eq=False)
class GroupElement:
    group: FgAbGroup = field(repr=False)
    free_part: tuple[int, ...]
    torsion_part: tuple[int, ...]

    def _check(self, other: "GroupElement"):
        if not isinstance(other, GroupElement):
            raise TypeError(f"expected GroupElement, got {type(other).__name__}")
        if other.group is not self.group and other.group != self.group:
            raise GroupMismatchError("elements belong to different groups")

    def _make(self, free, tors):
        orders = self.group.torsion_orders
        return GroupElement(self.group, tuple(free), tuple(t % d for t, d in zip(tors, orders)))

    def __add__(self, other):
        self._check(other)
        return self._make(
            (a + b for a, b in zip(self.free_part, other.free_part)),
            (a + b for a, b in zip(self.torsion_part, other.torsion_part)),
        )

    def __neg__(self):
        return self._make((-a for a in self.free_part), (-a for a in self.torsion_part))

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        k = int(k)
        return self._make((k * a for a in self.free_part), (k * a for a in self.torsion_part))

    __mul__ = __rmul__

    def is_zero(self) -> bool:
        return not any(self.free_part) and not any(self.torsion_part)

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return elements_equal(self, other)

    def __hash__(self):
        return hash((self.free_part, self.torsion_part))

    def __repr__(self):
        return f"GroupElement(free={list(self.free_part)}, torsion={list(self.torsion_part)})"


def present_group(
    num_generators: int,
    relations: IntMatrix | Sequence[Sequence[int]],
    names: Sequence[str] | None = None,
) -> FgAbGroup:
    """Canonical form of the abelian group on ``num_generators`` generators
    modulo the rows of ``relations``."""
    if not isinstance(relations, IntMatrix):
        relations = IntMatrix.from_rows(relations, num_generators)
    if relations.cols != num_generators:
        raise PreconditionError(
            f"relations have {relations.cols} columns, expected {num_generators}"
        )
    if names is None:
        names = tuple(f"g{j}" for j in range(num_generators))
    names = tuple(names)
    if len(names) != num_generators or len(set(names)) != num_generators:
        raise PreconditionError("generator names must be distinct, one per generator")

    snf = smith_normal_form(relations)
    diag = list(snf.diagonal) + [0] * (num_generators - len(snf.diagonal))
    torsion_idx = [i for i, d in enumerate(diag) if d >= 2]
    free_idx = [i for i, d in enumerate(diag) if d == 0]
    orders = tuple(diag[i] for i in torsion_idx)
    # free basis orientation: first generator with a nonzero coordinate is positive
    sign = {}
    for i in free_idx:
        first = next((snf.V[j, i] for j in range(num_generators) if snf.V[j, i]), 1)
        sign[i] = -1 if first < 0 else 1
    lifts = tuple(snf.V_inv.entries[i] for i in torsion_idx) + tuple(
        tuple(sign[i] * v for v in snf.V_inv.entries[i]) for i in free_idx
    )

    group = FgAbGroup(
        free_rank=len(free_idx),
        torsion_orders=orders,
        gen_coords=(),
        names=names,
        relations=relations.entries,
        _lifts=lifts,
    )
    coords = tuple(
        GroupElement(
            group,
            tuple(sign[i] * snf.V[j, i] for i in free_idx),
            tuple(snf.V[j, i] % diag[i] for i in torsion_idx),
        )
        for j in range(num_generators)
    )
    object.__setattr__(group, "gen_coords", coords)
    return group


def elements_equal(a: GroupElement, b: GroupElement) -> bool:
    a._check(b)
    return a.free_part == b.free_part and a.torsion_part == b.torsion_part


def solve_fiber_representations(
    group: FgAbGroup,
    fiber: GroupElement,
    multiple_fibers: Sequence[tuple[int, GroupElement]],
    target: GroupElement,
) -> list[tuple[int, ...]]:
    """All ``(d, a_1, ..., a_r)`` with ``d >= 0``, ``0 <= a_i < m_i`` and
    ``d*fiber + sum a_i*F_i == target``.

    Residue tuples are visited in lexicographic order; for each the multiple
    ``d`` is pinned down by the free coordinates of ``fiber``.
    """
    for el in (fiber, target, *(f for _, f in multiple_fibers)):
        if el.group != group:
            raise GroupMismatchError("all classes must lie in the given group")
    if not any(fiber.free_part):
        raise PreconditionError("fiber class has finite order; representations are not finite")
    pivot = next(i for i, v in enumerate(fiber.free_part) if v)
    out = []
    for residues in itertools.product(*(range(m) for m, _ in multiple_fibers)):
        rest = target
        for a, (_, f) in zip(residues, multiple_fibers):
            if a:
                rest = rest - a * f
        q, r = divmod(rest.free_part[pivot], fiber.free_part[pivot])
        if r or q < 0:
            continue
        if rest == q * fiber:
            out.append((q, *residues))
    return out


def _solve_in_span(base: list[list[Fraction]], v: list[Fraction]) -> list[Fraction] | None:
    """Coefficients of ``v`` in the span of the (independent) ``base``, or None."""
    k, dim = len(base), len(v)
    # augmented system: columns are base vectors, last column is v
    rows = [[base[c][r] for c in range(k)] + [v[r]] for r in range(dim)]
    piv_rows = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, dim) if rows[i][c] != 0), None)
        if p is None:
            raise PreconditionError("base vectors are linearly dependent")
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(dim):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_rows.append(r)
        r += 1
    if any(rows[i][k] != 0 for i in range(r, dim)):
        return None
    return [rows[i][k] for i in piv_rows]


def lattice_index(
    base: Sequence[Sequence[Fraction | int]],
    extra_generators: Iterable[Sequence[Fraction | int]] = (),
) -> int:
    """Index of the lattice spanned by ``base`` inside the lattice spanned by
    ``base`` together with ``extra_generators``.

    Extras are written in base coordinates, denominators are cleared, and the
    index is read off from the Smith form of the resulting generator matrix.
    """
    base = [[Fraction(x) for x in b] for b in base]
    if not base:
        raise PreconditionError("empty base")
    dim = len(base[0])
    if any(len(b) != dim for b in base) or len(base) > dim:
        raise PreconditionError("base vectors must share a dimension and be independent")
    rows = [[Fraction(int(i == j)) for j in range(len(base))] for i in range(len(base))]
    for e in extra_generators:
        e = [Fraction(x) for x in e]
        if len(e) != dim:
            raise PreconditionError("extra generator has the wrong dimension")
        coeffs = _solve_in_span(base, e)
        if coeffs is None:
            raise PreconditionError(f"extra generator {e} is not in the rational span of the base")
        rows.append(coeffs)
    if len(rows) == len(base):
        _solve_in_span(base, [Fraction(0)] * dim)  # independence check
        return 1
    den = 1
    for row in rows:
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
    scaled = [[int(x * den) for x in row] for row in rows]
    diag = smith_normal_form(scaled).diagonal
    covol = 1
    for d in diag:
        covol *= d
    k = len(base)
    index, rem = divmod(den**k, covol)
    assert rem == 0
    return index
