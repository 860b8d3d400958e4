"""Finitely generated modules as cokernels of relation matrices.

``PresentedModule(ring, g, relations)`` is ``Lambda^g`` modulo the span of the
relation vectors (the columns of its relation matrix).
"""

from __future__ import annotations

import itertools
from typing import Sequence

from . import _engine
from .groebner import (FreeVector, GroebnerBasis, Ideal, Matrix, buchberger, kernel_of_matrix,
                       normal_form, submodule_membership, syzygy_basis)
from .ring_core import DimensionError, QuotientRing, ReflexaError, RingMismatchError

INFINITE = float("inf")


class NotWellDefinedError(ReflexaError):
    """A matrix does not send relations of the source into relations of the target."""


class PresentedModule:
    """``Lambda^rank / span(relations)``."""

    def __init__(self, ring: QuotientRing, rank: int, relations: Sequence = ()):
        if rank < 0:
            raise DimensionError("negative rank")
        self.ring = ring
        self.rank = rank
        rels = []
        seen = set()
        for r in relations:
            v = r if isinstance(r, FreeVector) else FreeVector(ring, r)
            if v.ring != ring:
                raise RingMismatchError("relation over another ring")
            if v.rank != rank:
                raise DimensionError(f"relation of rank {v.rank}, module rank {rank}")
            if not v.is_zero() and v not in seen:
                seen.add(v)
                rels.append(v)
        self.relations = tuple(rels)
        self._cache: dict = {}

    @property
    def relation_matrix(self) -> Matrix:
        return Matrix.from_columns(self.ring, self.rank, [r.coords for r in self.relations])

    def relation_gb(self) -> GroebnerBasis:
        gb = self._cache.get("gb")
        if gb is None:
            gb = buchberger(list(self.relations), self.ring, self.rank)
            self._cache["gb"] = gb
        return gb

    def reduce(self, v: FreeVector) -> FreeVector:
        """Canonical representative of the class of ``v``."""
        return normal_form(v, self.relation_gb())

    def is_zero_element(self, v: FreeVector) -> bool:
        return self.reduce(v).is_zero()

    def vector(self, coords) -> FreeVector:
        v = FreeVector(self.ring, coords)
        if v.rank != self.rank:
            raise DimensionError(f"element of rank {v.rank} in module of rank {self.rank}")
        return v

    def __repr__(self):
        rels = ", ".join(str(r) for r in self.relations)
        return f"coker({self.ring!r}, {self.rank}, [{rels}])"


def make_presented(ring: QuotientRing, rank: int, relations: Sequence = ()) -> PresentedModule:
    """Cyclic ``Lambda/I`` is ``make_presented(ring, 1, gens(I))``; bare polynomials are accepted for rank 1."""
    rels = []
    for r in relations:
        if isinstance(r, FreeVector):
            rels.append(r)
        elif rank == 1 and not isinstance(r, (list, tuple)):
            rels.append(FreeVector(ring, [r]))
        else:
            rels.append(FreeVector(ring, r))
    return PresentedModule(ring, rank, rels)


def free_module(ring: QuotientRing, n: int) -> PresentedModule:
    return PresentedModule(ring, n, [])


def cyclic_module(ring: QuotientRing, ideal) -> PresentedModule:
    gens = ideal.gens if isinstance(ideal, Ideal) else ideal
    return make_presented(ring, 1, [FreeVector(ring, [g]) for g in gens])


# ---------------------------------------------------------------- homomorphisms


class ModuleHomomorphism:
    """A matrix ``target.rank x source.rank`` inducing ``source -> target``."""

    def __init__(self, source: PresentedModule, target: PresentedModule, matrix, check: bool = True):
        if source.ring != target.ring:
            raise RingMismatchError("source and target over different rings")
        if not isinstance(matrix, Matrix):
            matrix = Matrix(source.ring, matrix, source.rank)
        if (matrix.nrows, matrix.ncols) != (target.rank, source.rank):
            raise DimensionError(
                f"matrix is {matrix.nrows}x{matrix.ncols}, need {target.rank}x{source.rank}")
        self.source = source
        self.target = target
        self.matrix = matrix
        if check and not self.is_well_defined():
            raise NotWellDefinedError("relations of the source are not sent to relations of the target")

    @property
    def ring(self) -> QuotientRing:
        return self.source.ring

    def is_well_defined(self) -> bool:
        return all(self.target.is_zero_element(self.matrix.apply(r)) for r in self.source.relations)

    def __call__(self, v: FreeVector) -> FreeVector:
        return self.matrix.apply(v)

    def __matmul__(self, other: "ModuleHomomorphism") -> "ModuleHomomorphism":
        if other.target is not self.source and not same_presentation(other.target, self.source):
            raise DimensionError("maps do not compose")
        return ModuleHomomorphism(other.source, self.target, self.matrix @ other.matrix, check=False)

    def is_zero(self) -> bool:
        return all(self.target.is_zero_element(c) for c in self.matrix.columns())

    def equals(self, other: "ModuleHomomorphism") -> bool:
        """Equal as maps: the difference sends every generator into the target's relations."""
        if self.matrix.nrows != other.matrix.nrows or self.matrix.ncols != other.matrix.ncols:
            return False
        return all(self.target.is_zero_element(c) for c in (self.matrix - other.matrix).columns())

    def __repr__(self):
        return f"ModuleHomomorphism({self.matrix})"


def same_presentation(M: PresentedModule, N: PresentedModule) -> bool:
    return M.ring == N.ring and M.rank == N.rank and set(M.relations) == set(N.relations)


def identity_map(M: PresentedModule) -> ModuleHomomorphism:
    return ModuleHomomorphism(M, M, Matrix.identity(M.ring, M.rank), check=False)


def zero_map(M: PresentedModule, N: PresentedModule) -> ModuleHomomorphism:
    return ModuleHomomorphism(M, N, Matrix.zero(M.ring, N.rank, M.rank), check=False)


def multiplication_map(M: PresentedModule, f) -> ModuleHomomorphism:
    f = M.ring(f)
    rows = [[f if i == j else 0 for j in range(M.rank)] for i in range(M.rank)]
    return ModuleHomomorphism(M, M, Matrix(M.ring, rows, M.rank), check=False)


# ---------------------------------------------------------------- minimization


def minimize_relations(ring: QuotientRing, rank: int, relations: Sequence[FreeVector]):
    """Eliminate generators by pivoting on unit (nonzero constant) relation entries.

    Returns ``(new_rank, new_relations, projection, kept)`` where ``projection``
    is the ``new_rank x rank`` matrix taking old coordinates to new ones and
    ``kept[k]`` is the old index of new generator ``k``.
    """
    field = ring.field
    rels = [list(r.coords) for r in relations if not r.is_zero()]
    proj = [[ring.one if i == j else ring.zero for j in range(rank)] for i in range(rank)]
    kept = list(range(rank))
    while True:
        pivot = None
        for c, r in enumerate(rels):
            for i, x in enumerate(r):
                if x and x.is_constant():
                    pivot = (c, i)
                    break
            if pivot:
                break
        if pivot is None:
            break
        c, i = pivot
        r = rels.pop(c)
        inv = field.inv(r[i].constant_coefficient())
        for s in rels:
            if s[i]:
                f = s[i].scale(inv)
                for k in range(len(s)):
                    if r[k]:
                        s[k] = s[k] - f * r[k]
        for k in range(len(proj)):
            if k != i and r[k]:
                f = r[k].scale(inv)
                proj[k] = [a - f * b for a, b in zip(proj[k], proj[i])]
        del proj[i]
        del kept[i]
        for s in rels:
            del s[i]
        rels = [s for s in rels if any(s)]
    new_rank = len(kept)
    new_rels = [FreeVector(ring, s) for s in rels]
    P = Matrix(ring, proj, rank)
    return new_rank, new_rels, P, kept


def minimize(M: PresentedModule):
    """Return ``(M', to_new, to_old)`` with ``M'`` a pruned presentation of ``M``."""
    n, rels, P, kept = minimize_relations(M.ring, M.rank, M.relations)
    Mp = PresentedModule(M.ring, n, rels)
    back = Matrix(M.ring, [[1 if kept[k] == i else 0 for k in range(n)] for i in range(M.rank)], n)
    return Mp, ModuleHomomorphism(M, Mp, P, check=False), ModuleHomomorphism(Mp, M, back, check=False)


class Subquotient(PresentedModule):
    """``(span U + span V) / span V`` inside ``Lambda^ambient_rank``, generated by (a subset of) ``U``.

    ``generators[k]`` is the ambient vector represented by generator ``k``;
    ``coordinates(v)`` expresses an ambient vector of ``U + V`` in those generators.
    """

    def __init__(self, ring: QuotientRing, ambient_rank: int, U: Sequence[FreeVector],
                 V: Sequence[FreeVector] = (), minimal: bool = True):
        U = list(U)
        V = [v for v in V if not v.is_zero()]
        for v in U + V:
            if v.rank != ambient_rank:
                raise DimensionError(f"vector of rank {v.rank} in ambient rank {ambient_rank}")
        u = len(U)
        syz = syzygy_basis(U + V) if U else []
        rels = [FreeVector(ring, s.coords[:u]) for s in syz]
        if minimal:
            n, rels, P, kept = minimize_relations(ring, u, rels)
        else:
            n, P, kept = u, Matrix.identity(ring, u), list(range(u))
        super().__init__(ring, n, rels)
        self.ambient_rank = ambient_rank
        self.U = tuple(U)
        self.V = tuple(V)
        self.generators = [U[i] for i in kept]
        self.projection = P

    def coordinates(self, v: FreeVector) -> FreeVector:
        if not self.U:
            return FreeVector.zero(self.ring, 0)
        ok, c = submodule_membership(v, list(self.U) + list(self.V))
        if not ok:
            raise ValueError("vector does not lie in the subquotient")
        cu = FreeVector(self.ring, c.coords[:len(self.U)])
        return self.projection.apply(cu)

    def ambient_element(self, coords) -> FreeVector:
        acc = FreeVector.zero(self.ring, self.ambient_rank)
        for c, g in zip(coords, self.generators):
            if c:
                acc = acc + c * g
        return acc


def subquotient_presentation(U: Sequence[FreeVector], V: Sequence[FreeVector] = (),
                             ring: QuotientRing | None = None, ambient_rank: int | None = None,
                             minimal: bool = True) -> Subquotient:
    vs = list(U) + list(V)
    if vs:
        ring = ring or vs[0].ring
        ambient_rank = vs[0].rank if ambient_rank is None else ambient_rank
    if ring is None or ambient_rank is None:
        raise ValueError("ring and ambient rank needed for an empty subquotient")
    return Subquotient(ring, ambient_rank, U, V, minimal=minimal)


def ideal_module(I: Ideal) -> Subquotient:
    """The ideal ``I`` as a module, presented by the syzygies of its generators."""
    return Subquotient(I.ring, 1, I.vectors(), [])


# ---------------------------------------------------------------- constructions


def direct_sum(M: PresentedModule, N: PresentedModule) -> PresentedModule:
    if M.ring != N.ring:
        raise RingMismatchError("direct sum over different rings")
    ring = M.ring
    z = ring.zero
    rels = [FreeVector(ring, list(r.coords) + [z] * N.rank) for r in M.relations]
    rels += [FreeVector(ring, [z] * M.rank + list(r.coords)) for r in N.relations]
    return PresentedModule(ring, M.rank + N.rank, rels)


def direct_sum_maps(M: PresentedModule, N: PresentedModule, S: PresentedModule | None = None):
    """Inclusions and projections ``(i_M, i_N, p_M, p_N)`` for ``S = M (+) N``."""
    S = S or direct_sum(M, N)
    ring, m, n = M.ring, M.rank, N.rank
    eye = lambda a, b, off: [[1 if j == i + off else 0 for j in range(b)] for i in range(a)]
    iM = ModuleHomomorphism(M, S, Matrix(ring, [[1 if i == j else 0 for j in range(m)] for i in range(m + n)], m))
    iN = ModuleHomomorphism(N, S, Matrix(ring, [[1 if i == j + m else 0 for j in range(n)] for i in range(m + n)], n))
    pM = ModuleHomomorphism(S, M, Matrix(ring, eye(m, m + n, 0), m + n))
    pN = ModuleHomomorphism(S, N, Matrix(ring, eye(n, m + n, m), m + n))
    return iM, iN, pM, pN


def kernel(phi: ModuleHomomorphism):
    """Return ``(K, iota)`` with ``iota: K -> source`` onto the kernel of ``phi``."""
    M, N = phi.source, phi.target
    ring = M.ring
    g = M.rank
    if g == 0:
        K = Subquotient(ring, 0, [], [])
        return K, ModuleHomomorphism(K, M, Matrix.zero(ring, 0, 0), check=False)
    cols = [c.coords for c in phi.matrix.columns()] + [r.coords for r in N.relations]
    A = Matrix.from_columns(ring, N.rank, cols)
    ker = kernel_of_matrix(A)
    U = [FreeVector(ring, v.coords[:g]) for v in ker]
    U = [u for u in U if not u.is_zero()]
    K = Subquotient(ring, g, U, list(M.relations))
    iota = ModuleHomomorphism(K, M, Matrix.from_columns(ring, g, [v.coords for v in K.generators]),
                              check=False)
    return K, iota


def cokernel(phi: ModuleHomomorphism) -> PresentedModule:
    N = phi.target
    return PresentedModule(N.ring, N.rank, list(N.relations) + phi.matrix.columns())


def image(phi: ModuleHomomorphism) -> Subquotient:
    """Image of ``phi`` as a subquotient of the target's ambient free module."""
    N = phi.target
    return Subquotient(N.ring, N.rank, phi.matrix.columns(), list(N.relations))


def is_zero_module(M: PresentedModule) -> bool:
    if M.rank == 0:
        return True
    return all(M.is_zero_element(FreeVector.unit(M.ring, M.rank, i)) for i in range(M.rank))


def is_injective(phi: ModuleHomomorphism) -> bool:
    return is_zero_module(kernel(phi)[0])


def is_surjective(phi: ModuleHomomorphism) -> bool:
    return is_zero_module(cokernel(phi))


def is_isomorphism(phi: ModuleHomomorphism) -> bool:
    return is_surjective(phi) and is_injective(phi)


def annihilator(M: PresentedModule) -> Ideal:
    """``{f : f M = 0}``."""
    ring = M.ring
    g, rels = M.rank, list(M.relations)
    if g == 0:
        return Ideal(ring, [1])
    if not rels:
        return Ideal(ring, [])
    a = len(rels)
    # unknowns: f, then one coefficient block per generator: f*e_i = sum_k y_ik rel_k
    ncols = 1 + g * a
    rows = []
    for i in range(g):
        for r in range(g):
            row = [ring.zero] * ncols
            if r == i:
                row[0] = ring.one
            for k, rel in enumerate(rels):
                row[1 + i * a + k] = -rel.coords[r]
            rows.append(row)
    ker = kernel_of_matrix(Matrix(ring, rows, ncols))
    return Ideal(ring, [v[0] for v in ker])


def k_dimension(M: PresentedModule):
    """Dimension over the coefficient field, or ``INFINITE``."""
    if M.rank == 0:
        return 0
    gb = M.relation_gb()
    n = M.ring.nvars
    by_pos: dict = {i: [] for i in range(M.rank)}
    for p, m in gb.leading_terms:
        by_pos[p].append(m)
    total = 0
    for p in range(M.rank):
        lms = by_pos[p]
        if any(not any(m) for m in lms):
            continue
        bounds = []
        for v in range(n):
            pure = [m[v] for m in lms if m[v] and all(e == 0 for j, e in enumerate(m) if j != v)]
            if not pure:
                return INFINITE
            bounds.append(min(pure))
        for e in itertools.product(*(range(b) for b in bounds)):
            if not any(_engine.mono_divides(l, e) for l in lms):
                total += 1
    return total


def standard_basis(M: PresentedModule) -> list[tuple[int, tuple]]:
    """(position, monomial) pairs forming a field basis of a finite-dimensional module."""
    if k_dimension(M) == INFINITE:
        raise ValueError("module is not finite dimensional")
    gb = M.relation_gb()
    n = M.ring.nvars
    out = []
    for p in range(M.rank):
        lms = [m for q, m in gb.leading_terms if q == p]
        if any(not any(m) for m in lms):
            continue
        bounds = []
        for v in range(n):
            bounds.append(min(m[v] for m in lms
                              if m[v] and all(e == 0 for j, e in enumerate(m) if j != v)))
        for e in itertools.product(*(range(b) for b in bounds)):
            if not any(_engine.mono_divides(l, e) for l in lms):
                out.append((p, e))
    key = M.ring.term_key
    out.sort(key=key, reverse=True)
    return out
