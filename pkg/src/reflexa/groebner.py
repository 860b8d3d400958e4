"""Groebner bases of submodules of free modules over quotient rings.

Submodules of ``Lambda^n`` with ``Lambda = P/I`` are computed in ``P^n`` after
adjoining ``f*e_i`` for every basis element ``f`` of ``I``.  Terms are ordered
position-over-term and a smaller position index is the bigger term, so
positions act as an elimination order; this is what makes syzygies and lifts
fall out of a single tracked Buchberger run.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import _engine
from .ring_core import DimensionError, Polynomial, QuotientRing, RingMismatchError


class FreeVector:
    """Element of ``Lambda^n`` with coordinates in normal form."""

    __slots__ = ("ring", "coords", "_hash")

    def __init__(self, ring: QuotientRing, coords: Iterable):
        self.ring = ring
        self.coords = tuple(ring(c) for c in coords)
        self._hash = None

    @classmethod
    def zero(cls, ring: QuotientRing, n: int) -> "FreeVector":
        return cls(ring, [0] * n)

    @classmethod
    def unit(cls, ring: QuotientRing, n: int, i: int) -> "FreeVector":
        return cls(ring, [1 if j == i else 0 for j in range(n)])

    @classmethod
    def from_raw(cls, ring: QuotientRing, n: int, raw: dict) -> "FreeVector":
        parts = [{} for _ in range(n)]
        for (p, m), c in raw.items():
            if p >= n:
                raise DimensionError(f"position {p} outside rank {n}")
            parts[p][m] = c
        return cls(ring, [ring.element(t) for t in parts])

    @property
    def rank(self) -> int:
        return len(self.coords)

    def raw(self) -> dict:
        out = {}
        for i, c in enumerate(self.coords):
            for m, x in c._terms.items():
                out[(i, m)] = x
        return out

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _check(self, other: "FreeVector") -> None:
        if other.ring != self.ring:
            raise RingMismatchError("vectors over different rings")
        if other.rank != self.rank:
            raise DimensionError(f"rank {self.rank} vs {other.rank}")

    def __add__(self, other):
        self._check(other)
        return FreeVector(self.ring, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return FreeVector(self.ring, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return FreeVector(self.ring, [-a for a in self.coords])

    def __rmul__(self, scalar):
        s = self.ring(scalar)
        return FreeVector(self.ring, [s * a for a in self.coords])

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __eq__(self, other):
        if not isinstance(other, FreeVector):
            return NotImplemented
        return self.ring == other.ring and self.coords == other.coords

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coords)
        return self._hash

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    __repr__ = __str__


class Matrix:
    """Dense matrix over a ring; columns are the images of basis vectors."""

    __slots__ = ("ring", "nrows", "ncols", "rows")

    def __init__(self, ring: QuotientRing, rows: Sequence[Sequence], ncols: int | None = None):
        self.ring = ring
        self.rows = tuple(tuple(ring(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        if any(len(r) != ncols for r in self.rows):
            raise DimensionError("ragged matrix")

    @classmethod
    def from_columns(cls, ring: QuotientRing, nrows: int, columns: Sequence) -> "Matrix":
        cols = [tuple(c) for c in columns]
        for c in cols:
            if len(c) != nrows:
                raise DimensionError(f"column of length {len(c)}, expected {nrows}")
        rows = [[c[i] for c in cols] for i in range(nrows)]
        return cls(ring, rows, len(cols))

    @classmethod
    def identity(cls, ring: QuotientRing, n: int) -> "Matrix":
        return cls(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zero(cls, ring: QuotientRing, m: int, n: int) -> "Matrix":
        return cls(ring, [[0] * n for _ in range(m)], n)

    def column(self, j: int) -> FreeVector:
        return FreeVector(self.ring, [r[j] for r in self.rows])

    def columns(self) -> list[FreeVector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix(self.ring, [[r[j] for r in self.rows] for j in range(self.ncols)], self.nrows)

    def apply(self, v: FreeVector) -> FreeVector:
        if v.rank != self.ncols:
            raise DimensionError(f"matrix with {self.ncols} columns applied to rank {v.rank}")
        zero = self.ring.zero
        out = []
        for r in self.rows:
            acc = zero
            for a, b in zip(r, v.coords):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return FreeVector(self.ring, out)

    def __matmul__(self, other):
        if isinstance(other, FreeVector):
            return self.apply(other)
        if other.ring != self.ring:
            raise RingMismatchError("matrices over different rings")
        if self.ncols != other.nrows:
            raise DimensionError(f"{self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        cols = [self.apply(c).coords for c in other.columns()]
        return Matrix.from_columns(self.ring, self.nrows, cols)

    def __add__(self, other):
        self._same_shape(other)
        return Matrix(self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.ncols)

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix(self.ring, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.ncols)

    def __neg__(self):
        return Matrix(self.ring, [[-a for a in r] for r in self.rows], self.ncols)

    def _same_shape(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionError("shape mismatch")

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.ring == other.ring and self.nrows == other.nrows
                and self.ncols == other.ncols and self.rows == other.rows)

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.rows))

    def __str__(self):
        if not self.rows:
            return f"<0x{self.ncols}>"
        return "[" + "; ".join(", ".join(str(x) for x in r) for r in self.rows) + "]"

    __repr__ = __str__


class ModuleOrder:
    """Position-over-term order; the lower position index is the larger term."""

    def __init__(self, base):
        self.base = base

    def term_key(self, t):
        return (-t[0], self.base.key(t[1]))

    def compare(self, a, b) -> int:
        ka, kb = self.term_key(a), self.term_key(b)
        return (ka > kb) - (ka < kb)


class GroebnerBasis:
    """Reduced Groebner basis of a submodule of ``Lambda^rank`` (computed in ``P^rank``)."""

    def __init__(self, ring: QuotientRing, rank: int, result: _engine.GBResult):
        self.ring = ring
        self.rank = rank
        self.order = ModuleOrder(ring.order)
        self.reduced = True
        self._result = result

    @property
    def elements(self) -> list[FreeVector]:
        """Basis elements as vectors over the ambient polynomial ring."""
        amb = self.ring.ambient
        return [FreeVector.from_raw(amb, self.rank, _strip(g, self.rank)) for g in self._result.basis]

    @property
    def generators(self) -> list[FreeVector]:
        """Images in ``Lambda^rank`` of the basis elements not led by the ring ideal.

        An element whose leading monomial leads some element of the ring's ideal
        basis is redundant modulo the ring ideal, so it is skipped.
        """
        ring_lms = [max(g, key=self.ring.order.key) for g in self.ring._ideal_gb]
        out = []
        for g in self._result.basis:
            pos, m = _engine.lead(_strip(g, self.rank), self.ring.term_key)
            if any(_engine.mono_divides(l, m) for l in ring_lms):
                continue
            v = FreeVector.from_raw(self.ring, self.rank, _strip(g, self.rank))
            if not v.is_zero():
                out.append(v)
        return out

    @property
    def leading_terms(self) -> list[tuple[int, tuple]]:
        return list(self._result.lts)

    def __len__(self):
        return len(self._result.basis)


def _strip(raw: dict, rank: int) -> dict:
    return {t: c for t, c in raw.items() if t[0] < rank}


def _raw_key(raws) -> tuple:
    return tuple(frozenset(r.items()) for r in raws)


def _compute(ring: QuotientRing, rank: int, raws: Sequence[dict], track: bool) -> _engine.GBResult:
    key = (rank, track, _raw_key(raws))
    hit = ring._gb_cache.get(key)
    if hit is not None:
        return hit
    gens = []
    for g in ring._ideal_gb:
        for i in range(rank):
            gens.append({(i, m): c for m, c in g.items()})
    for j, r in enumerate(raws):
        v = dict(r)
        if track:
            v[(rank + j, ring._zero_mono)] = ring.field(1)
        gens.append(v)
    res = _engine.groebner(gens, ring.field, ring.term_key, rank, track=track)
    ring._gb_cache[key] = res
    return res


def _common(gens: Sequence[FreeVector], ring: QuotientRing | None, rank: int | None):
    if gens:
        ring = ring or gens[0].ring
        rank = gens[0].rank if rank is None else rank
    if ring is None or rank is None:
        raise ValueError("ring and rank are needed when there are no generators")
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError("generators over different rings")
        if g.rank != rank:
            raise DimensionError(f"generator of rank {g.rank}, expected {rank}")
    return ring, rank


def buchberger(gens: Sequence[FreeVector], ring: QuotientRing | None = None,
               rank: int | None = None) -> GroebnerBasis:
    ring, rank = _common(gens, ring, rank)
    res = _compute(ring, rank, [g.raw() for g in gens], False)
    return GroebnerBasis(ring, rank, res)


def normal_form(v: FreeVector, G: GroebnerBasis) -> FreeVector:
    if v.ring != G.ring:
        raise RingMismatchError("vector and basis over different rings")
    if v.rank != G.rank:
        raise DimensionError(f"rank {v.rank} vs basis rank {G.rank}")
    r = _engine.reduce_vec(v.raw(), G._result.reducer, G.ring.field, G.ring.term_key)
    return FreeVector.from_raw(G.ring, G.rank, r)


def s_vector(G: GroebnerBasis, i: int, j: int) -> FreeVector | None:
    """S-vector of basis elements ``i`` and ``j`` over the ambient ring, or None
    when their leading terms sit at different positions."""
    res = G._result
    (pi, mi), (pj, mj) = res.lts[i], res.lts[j]
    if pi != pj:
        return None
    f = G.ring.field
    l = _engine.mono_lcm(mi, mj)
    s = _engine.scale_shift(res.basis[i], f.inv(res.basis[i][res.lts[i]]), _engine.mono_div(l, mi), f)
    _engine.add_into(s, res.basis[j], -f.inv(res.basis[j][res.lts[j]]), f, _engine.mono_div(l, mj))
    return FreeVector.from_raw(G.ring.ambient, G.rank, _strip(s, G.rank))


def ambient_normal_form(v: FreeVector, G: GroebnerBasis) -> FreeVector:
    """Normal form of an ambient-ring vector with respect to the raw basis."""
    r = _engine.reduce_vec(v.raw(), G._result.reducer, G.ring.field, G.ring.term_key)
    return FreeVector.from_raw(G.ring.ambient, G.rank, r)


def submodule_membership(v: FreeVector, gens: Sequence[FreeVector]):
    """Return ``(True, coefficients)`` when ``v`` is in the span, else ``(False, None)``."""
    ring, rank = _common(list(gens) + [v], None, None)
    m = len(gens)
    if v.is_zero():
        return True, FreeVector.zero(ring, m)
    if m == 0:
        return False, None
    res = _compute(ring, rank, [g.raw() for g in gens], True)
    r = _engine.reduce_vec(v.raw(), res.reducer, ring.field, ring.term_key, limit=rank)
    if any(p < rank for p, _ in r):
        return False, None
    norm = ring.field.normalize
    coeffs = {(p - rank, mono): norm(-c) for (p, mono), c in r.items()}
    return True, FreeVector.from_raw(ring, m, coeffs)


def contains(v: FreeVector, gens: Sequence[FreeVector]) -> bool:
    """Membership without a lift (cheaper: no tracking)."""
    if v.is_zero():
        return True
    if not gens:
        return False
    G = buchberger(gens)
    return normal_form(v, G).is_zero()


def syzygy_basis(gens: Sequence[FreeVector], minimal: bool = True) -> list[FreeVector]:
    """Generators of ``{s : sum s_i gens_i = 0}`` in ``Lambda^len(gens)``.

    With ``minimal`` the raw Schreyer syzygies are pruned to an irredundant
    set (a minimal one for homogeneous input).
    """
    if not gens:
        return []
    ring, rank = _common(gens, None, None)
    m = len(gens)
    res = _compute(ring, rank, [g.raw() for g in gens], True)
    cands = []
    seen = set()
    for s in res.syzygies:
        v = FreeVector.from_raw(ring, m, s)
        if not v.is_zero() and v not in seen:
            seen.add(v)
            cands.append(v)
    # zero generators give unit syzygies that Buchberger never sees
    for j, g in enumerate(gens):
        if g.is_zero():
            u = FreeVector.unit(ring, m, j)
            if u not in seen:
                seen.add(u)
                cands.append(u)
    if not minimal:
        return [_monic(v) for v in sorted(cands, key=_vec_sort_key)]
    return [_monic(v) for v in prune(cands)]


def _monic(v: FreeVector) -> FreeVector:
    """Scale so the first nonzero coordinate has leading coefficient 1."""
    c = next(c for c in v.coords if c)
    lc = c.leading_coefficient()
    if lc == 1:
        return v
    return v.ring(v.ring.field.inv(lc)) * v


def _vec_sort_key(v: FreeVector):
    degs = [c.degree() for c in v.coords]
    first = next(i for i, c in enumerate(v.coords) if c)
    return (max(degs), first, tuple(str(c) for c in v.coords))


def prune(vectors: Sequence[FreeVector]) -> list[FreeVector]:
    """Drop vectors lying in the span of those kept before them (lowest degree first)."""
    kept: list[FreeVector] = []
    for v in sorted(vectors, key=_vec_sort_key):
        if v.is_zero():
            continue
        if kept and contains(v, kept):
            continue
        kept.append(v)
    return kept


def kernel_of_matrix(A: Matrix, minimal: bool = True) -> list[FreeVector]:
    """Generators of ``{v in Lambda^ncols : A v = 0}``."""
    if A.ncols == 0:
        return []
    if A.nrows == 0:
        return [FreeVector.unit(A.ring, A.ncols, j) for j in range(A.ncols)]
    return syzygy_basis(A.columns(), minimal=minimal)


# ---------------------------------------------------------------- ideals


class Ideal:
    """Ideal of a quotient ring given by generators in normal form."""

    def __init__(self, ring: QuotientRing, gens: Iterable = ()):
        self.ring = ring
        self.gens = tuple(g for g in (ring(x) for x in gens) if g)

    def vectors(self) -> list[FreeVector]:
        return [FreeVector(self.ring, [g]) for g in self.gens]

    def groebner(self) -> GroebnerBasis:
        return buchberger(self.vectors(), self.ring, 1)

    def reduced_basis(self) -> list[Polynomial]:
        gens = [v[0] for v in self.groebner().generators]
        return sorted(gens, key=lambda g: self.ring.order.key(g.leading_monomial()), reverse=True)

    def contains(self, f) -> bool:
        f = self.ring(f)
        return normal_form(FreeVector(self.ring, [f]), self.groebner()).is_zero()

    def is_unit(self) -> bool:
        return self.contains(1)

    def is_zero(self) -> bool:
        return not self.gens

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    __repr__ = __str__


def _as_ideal(x, ring=None) -> Ideal:
    if isinstance(x, Ideal):
        return x
    return Ideal(ring, x)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    if I.ring != J.ring:
        raise RingMismatchError("ideals in different rings")
    a = {frozenset(g.items()) for g in I.groebner()._result.basis}
    b = {frozenset(g.items()) for g in J.groebner()._result.basis}
    return a == b


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """J subset of I."""
    G = I.groebner()
    return all(normal_form(FreeVector(I.ring, [g]), G).is_zero() for g in J.gens)


def colon_ideal(I: Ideal, J: Ideal) -> Ideal:
    """``(I : J) = {f : f J in I}``; with ``I = 0`` this is the annihilator of ``J``."""
    if I.ring != J.ring:
        raise RingMismatchError("ideals in different rings")
    ring = I.ring
    s, r = len(J.gens), len(I.gens)
    if s == 0:
        return Ideal(ring, [1])
    rows = []
    for l, j in enumerate(J.gens):
        row = [j] + [0] * (r * s)
        for k, i in enumerate(I.gens):
            row[1 + l * r + k] = -i
        rows.append(row)
    A = Matrix(ring, rows, 1 + r * s)
    ker = kernel_of_matrix(A)
    return Ideal(ring, [v[0] for v in ker])


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise RingMismatchError("ideals in different rings")
    ring = I.ring
    if not I.gens or not J.gens:
        return Ideal(ring, [])
    row = list(I.gens) + [-g for g in J.gens]
    ker = kernel_of_matrix(Matrix(ring, [row], len(row)))
    out = []
    for v in ker:
        f = ring.zero
        for c, g in zip(v.coords, I.gens):
            f = f + c * g
        out.append(f)
    return Ideal(ring, out)


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    return Ideal(I.ring, I.gens + J.gens)
