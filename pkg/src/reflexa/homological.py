"""Free resolutions, Hom and Ext, duals, the evaluation map and reflexivity.

Hom generators are kept as explicit matrices so the evaluation map ``h_M``,
dual maps and the composite ``(h_N)^* h_{N^*}`` can be built constructively.
A homomorphism ``M -> N`` given by an ``N.rank x M.rank`` matrix ``phi`` is
stored in ``Lambda^(N.rank * M.rank)`` as ``vec(phi)`` (row-major).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groebner import FreeVector, Matrix, kernel_of_matrix, syzygy_basis
from .modules import (INFINITE, ModuleHomomorphism, PresentedModule, Subquotient, cokernel,
                      free_module, identity_map, is_zero_module, k_dimension, kernel)
from .ring_core import QuotientRing, RingMismatchError

DEFAULT_LENGTH = 6


@dataclass
class FreeResolution:
    """``... -> F_2 -d_2-> F_1 -d_1-> F_0 -> M -> 0`` truncated after ``len(maps)`` steps."""

    module: PresentedModule
    maps: list[Matrix] = field(default_factory=list)

    @property
    def ranks(self) -> list[int]:
        out = [self.module.rank]
        for d in self.maps:
            out.append(d.ncols)
        return out

    def differential(self, i: int) -> Matrix:
        """``d_i : F_i -> F_{i-1}`` for ``i >= 1``; zero past the computed range."""
        if 1 <= i <= len(self.maps):
            return self.maps[i - 1]
        ring = self.module.ring
        ranks = self.ranks
        src = ranks[i] if i < len(ranks) else 0
        tgt = ranks[i - 1] if 0 <= i - 1 < len(ranks) else 0
        return Matrix.zero(ring, tgt, src)

    def is_complex(self) -> bool:
        return all((a @ b).is_zero() for a, b in zip(self.maps, self.maps[1:]))

    def is_exact(self) -> bool:
        """Syzygies of each ``d_i`` lie in the column span of ``d_{i+1}``."""
        from .groebner import contains
        for a, b in zip(self.maps, self.maps[1:]):
            span = b.columns()
            for s in syzygy_basis(a.columns()):
                if not contains(s, span):
                    return False
        return True


def free_resolution(M: PresentedModule, length: int = DEFAULT_LENGTH, minimal: bool = True) -> FreeResolution:
    if length < 1:
        raise ValueError("resolution length must be at least 1")
    ring = M.ring
    d = M.relation_matrix
    maps = [d]
    while len(maps) < length and d.ncols:
        syz = syzygy_basis(d.columns(), minimal=minimal)
        d = Matrix.from_columns(ring, d.ncols, [s.coords for s in syz])
        maps.append(d)
    return FreeResolution(M, maps)


# ---------------------------------------------------------------- Hom


class HomPresentation(Subquotient):
    """``Hom(source, target)`` with each generator tracked as a matrix."""

    def __init__(self, source: PresentedModule, target: PresentedModule, U, V):
        super().__init__(source.ring, target.rank * source.rank, U, V)
        self.source = source
        self.target = target
        self.matrices = [self.to_matrix(v) for v in self.generators]

    def to_matrix(self, v: FreeVector) -> Matrix:
        g, h = self.source.rank, self.target.rank
        return Matrix(self.ring, [[v.coords[r * g + c] for c in range(g)] for r in range(h)], g)

    def from_matrix(self, A: Matrix) -> FreeVector:
        return FreeVector(self.ring, [x for row in A.rows for x in row])

    def coordinates_of_map(self, A: Matrix) -> FreeVector:
        """Coordinates of the homomorphism ``A`` in this module's generators."""
        return self.coordinates(self.from_matrix(A))

    def map_of(self, coords) -> Matrix:
        """Matrix of the homomorphism with the given coordinates."""
        return self.to_matrix(self.ambient_element(coords))

    def evaluate(self, coords, m: FreeVector) -> FreeVector:
        """``ev(h, m)``: apply the homomorphism with coordinates ``coords`` to ``m``."""
        return self.map_of(coords).apply(m)


def _cochain_data(ring: QuotientRing, N: PresentedModule, r: int, d_next: Matrix | None,
                  d_prev: Matrix | None):
    """Cycles and boundaries of ``Hom(F, N)`` at a free module of rank ``r``.

    Cycles: ``f`` (``h x r``) with ``f d_next`` landing in the relations of ``N``.
    Boundaries: ``g d_prev`` plus maps with values in the relations of ``N``.
    """
    h = N.rank
    B = [rel.coords for rel in N.relations]
    b = len(B)
    n = h * r
    if d_next is None or d_next.ncols == 0:
        U = [FreeVector.unit(ring, n, k) for k in range(n)]
    else:
        a = d_next.ncols
        ncols = n + b * a
        rows = []
        for row_i in range(h):
            for j in range(a):
                row = [ring.zero] * ncols
                for c in range(r):
                    row[row_i * r + c] = d_next.rows[c][j]
                for l in range(b):
                    row[n + l * a + j] = -B[l][row_i]
                rows.append(row)
        ker = kernel_of_matrix(Matrix(ring, rows, ncols))
        U = [FreeVector(ring, v.coords[:n]) for v in ker]
        U = [u for u in U if not u.is_zero()]
    V = []
    if d_prev is not None:
        for row_i in range(h):
            for cp in range(d_prev.nrows):
                vec = [ring.zero] * n
                for c in range(r):
                    vec[row_i * r + c] = d_prev.rows[cp][c]
                V.append(FreeVector(ring, vec))
    for l in range(b):
        for c in range(r):
            vec = [ring.zero] * n
            for row_i in range(h):
                vec[row_i * r + c] = B[l][row_i]
            V.append(FreeVector(ring, vec))
    return U, V


def hom_module(M: PresentedModule, N: PresentedModule) -> HomPresentation:
    if M.ring != N.ring:
        raise RingMismatchError("Hom between modules over different rings")
    U, V = _cochain_data(M.ring, N, M.rank, M.relation_matrix, None)
    return HomPresentation(M, N, U, V)


def dual_module(M: PresentedModule) -> HomPresentation:
    """``M^* = Hom(M, Lambda)``; cached on ``M`` so repeated duals are the same object."""
    D = M._cache.get("dual")
    if D is None:
        D = hom_module(M, free_module(M.ring, 1))
        M._cache["dual"] = D
    return D


def bidual_module(M: PresentedModule) -> HomPresentation:
    return dual_module(dual_module(M))


def dual_map(phi: ModuleHomomorphism) -> ModuleHomomorphism:
    """``phi^* : N^* -> M^*``, ``u -> u o phi``."""
    Md, Nd = dual_module(phi.source), dual_module(phi.target)
    cols = []
    for u in Nd.matrices:
        cols.append(Md.coordinates_of_map(u @ phi.matrix).coords)
    A = Matrix.from_columns(phi.ring, Md.rank, cols)
    return ModuleHomomorphism(Nd, Md, A)


def canonical_map(M: PresentedModule) -> ModuleHomomorphism:
    """The evaluation map ``h_M : M -> M^**``, ``m -> (u -> u(m))``."""
    ring = M.ring
    Md = dual_module(M)
    Mdd = dual_module(Md)
    cols = []
    for j in range(M.rank):
        functional = Matrix(ring, [[u.rows[0][j] for u in Md.matrices]], Md.rank)
        cols.append(Mdd.coordinates_of_map(functional).coords)
    A = Matrix.from_columns(ring, Mdd.rank, cols)
    return ModuleHomomorphism(M, Mdd, A)


# ---------------------------------------------------------------- Ext


def ext_module(i: int, M: PresentedModule, N: PresentedModule, minimal: bool = True,
               resolution: FreeResolution | None = None) -> Subquotient:
    """``Ext^i(M, N)`` from a free resolution of ``M`` and ``Hom(-, N)``."""
    if i < 0:
        raise ValueError("negative Ext index")
    if M.ring != N.ring:
        raise RingMismatchError("Ext between modules over different rings")
    res = resolution or free_resolution(M, i + 1, minimal=minimal)
    ranks = res.ranks
    r = ranks[i] if i < len(ranks) else 0
    d_next = res.differential(i + 1)
    d_prev = res.differential(i) if i >= 1 else None
    U, V = _cochain_data(M.ring, N, r, d_next, d_prev)
    return Subquotient(M.ring, N.rank * r, U, V)


# ---------------------------------------------------------------- reflexivity


@dataclass(frozen=True)
class ReflexivityReport:
    reflexive: bool
    torsionless: bool
    coker_dim: float | int

    def as_dict(self) -> dict:
        dim = "infinite" if self.coker_dim == INFINITE else self.coker_dim
        return {"reflexive": self.reflexive, "torsionless": self.torsionless, "coker_dim": dim}


def is_reflexive(M: PresentedModule) -> ReflexivityReport:
    h = canonical_map(M)
    torsionless = is_zero_module(kernel(h)[0])
    C = cokernel(h)
    coker_zero = is_zero_module(C)
    return ReflexivityReport(torsionless and coker_zero, torsionless, 0 if coker_zero else k_dimension(C))


def lemma_composite(N: PresentedModule) -> ModuleHomomorphism:
    """``(h_N)^* o h_M`` for ``M = N^*``, a map ``M -> M``."""
    M = dual_module(N)
    hM = canonical_map(M)
    hN_dual = dual_map(canonical_map(N))
    return hN_dual @ hM


def lemma_composite_check(N: PresentedModule) -> bool:
    comp = lemma_composite(N)
    return comp.equals(identity_map(comp.source))


def double_dual_map(phi: ModuleHomomorphism) -> ModuleHomomorphism:
    return dual_map(dual_map(phi))


def naturality_holds(phi: ModuleHomomorphism) -> bool:
    """``phi^** o h_source == h_target o phi``."""
    left = double_dual_map(phi) @ canonical_map(phi.source)
    right = canonical_map(phi.target) @ phi
    return left.equals(right)
