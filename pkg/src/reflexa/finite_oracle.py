"""Brute-force reflexivity checks over finite commutative GF(p)-algebras.

Over a finite algebra every Hom is a finite-dimensional vector space, so
``M ~= M**`` can be decided by searching the invertible elements of
``Hom_A(M, M**)``.  That is the regime where the existence of *some*
isomorphism can be compared against invertibility of the evaluation map.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np

from . import _modp

# ---------------------------------------------------------------- algebras


class FiniteAlgebra:
    """Commutative unital algebra with basis ``e_0..e_{d-1}`` over GF(p).

    ``structure[i, j, k]`` is the coefficient of ``e_k`` in ``e_i e_j``.
    """

    def __init__(self, p: int, structure, unit, name: str = "", maximal_ideals=None,
                 check: bool = True):
        self.p = p
        self.c = np.asarray(structure, dtype=np.int64) % p
        self.dim = self.c.shape[0]
        self.unit = np.asarray(unit, dtype=np.int64) % p
        self.name = name or f"A(dim={self.dim}, p={p})"
        self.left = [self.c[i].T.copy() for i in range(self.dim)]
        self.maximal_ideals = maximal_ideals
        if check:
            self.validate()

    def validate(self) -> None:
        c, p, d = self.c, self.p, self.dim
        if c.shape != (d, d, d):
            raise ValueError("structure constants must be d x d x d")
        if not np.array_equal(c, c.transpose(1, 0, 2)):
            raise ValueError("algebra is not commutative")
        # (e_i e_j) e_k == e_i (e_j e_k)
        lhs = np.einsum("ijm,mkn->ijkn", c, c) % p
        rhs = np.einsum("jkm,imn->ijkn", c, c) % p
        if not np.array_equal(lhs, rhs):
            raise ValueError("algebra is not associative")
        if not np.array_equal(self.left_matrix(self.unit), np.eye(d, dtype=np.int64)):
            raise ValueError("unit does not act as the identity")

    def mul(self, a, b) -> np.ndarray:
        return np.einsum("i,j,ijk->k", a, b, self.c) % self.p

    def left_matrix(self, a) -> np.ndarray:
        return np.einsum("i,ijk->kj", np.asarray(a, dtype=np.int64), self.c) % self.p

    def power(self, a, n: int) -> np.ndarray:
        out = self.unit.copy()
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def basis_vector(self, i: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v

    def random_element(self, rng) -> np.ndarray:
        return rng.integers(0, self.p, size=self.dim).astype(np.int64)

    def regular_module(self) -> "FiniteModule":
        return FiniteModule(self, self.left, name="A")

    def __repr__(self):
        return self.name

    # -- constructors

    @classmethod
    def monomial_quotient(cls, p: int, nvars: int, relations: Sequence[Sequence[int]],
                          name: str = "") -> "FiniteAlgebra":
        """``GF(p)[x_1..x_n] / (monomials)``; must be finite dimensional."""
        rels = [tuple(r) for r in relations]
        bounds = []
        for v in range(nvars):
            pure = [r[v] for r in rels if r[v] and all(e == 0 for j, e in enumerate(r) if j != v)]
            if not pure:
                raise ValueError("monomial quotient is not finite dimensional")
            bounds.append(min(pure))

        def standard(m):
            return not any(all(a <= b for a, b in zip(r, m)) for r in rels)

        basis = [m for m in itertools.product(*(range(b) for b in bounds)) if standard(m)]
        basis.sort(key=lambda m: (sum(m), tuple(-x for x in m)))
        index = {m: i for i, m in enumerate(basis)}
        d = len(basis)
        c = np.zeros((d, d, d), dtype=np.int64)
        for i, a in enumerate(basis):
            for j, b in enumerate(basis):
                m = tuple(x + y for x, y in zip(a, b))
                if m in index:
                    c[i, j, index[m]] = 1
        unit = np.zeros(d, dtype=np.int64)
        unit[index[(0,) * nvars]] = 1
        maximal = np.array([np.eye(d, dtype=np.int64)[i] for i, m in enumerate(basis) if any(m)],
                           dtype=np.int64).reshape(-1, d)
        alg = cls(p, c, unit, name or f"GF({p})[{nvars} vars]/{rels}", maximal_ideals=[maximal])
        alg.monomials = basis
        return alg

    @classmethod
    def truncated(cls, p: int, n: int) -> "FiniteAlgebra":
        name = f"GF({p})" if n == 1 else f"GF({p})[x]/(x^{n})"
        return cls.monomial_quotient(p, 1, [(n,)], name)

    @classmethod
    def product(cls, *algs: "FiniteAlgebra") -> "FiniteAlgebra":
        p = algs[0].p
        d = sum(a.dim for a in algs)
        c = np.zeros((d, d, d), dtype=np.int64)
        unit = np.zeros(d, dtype=np.int64)
        maximal = []
        off = 0
        for a in algs:
            s = slice(off, off + a.dim)
            c[s, s, s] = a.c
            unit[s] = a.unit
            for m in a.maximal_ideals or []:
                rows = [np.eye(d, dtype=np.int64)[k] for k in range(d) if not off <= k < off + a.dim]
                for r in m:
                    row = np.zeros(d, dtype=np.int64)
                    row[s] = r
                    rows.append(row)
                maximal.append(np.array(rows, dtype=np.int64).reshape(-1, d))
            off += a.dim
        return cls(p, c, unit, " x ".join(a.name for a in algs), maximal_ideals=maximal)


def jacobson_radical(A: FiniteAlgebra) -> np.ndarray:
    """Basis (rows) of the nilradical, which is the Jacobson radical here.

    In characteristic p the Frobenius ``a -> a^p`` is additive on a commutative
    algebra, so the nilradical is the kernel of a linear map.
    """
    p, d = A.p, A.dim
    frob = np.array([A.power(A.basis_vector(j), p) for j in range(d)], dtype=np.int64).T
    k, q = 0, 1
    while q < d:
        k += 1
        q *= p
    Fk = np.eye(d, dtype=np.int64)
    for _ in range(max(k, 1)):
        Fk = Fk @ frob % p
    J = _modp.nullspace(Fk, p)
    Fk1 = Fk @ frob % p
    if _modp.nullspace(Fk1, p).shape[0] != J.shape[0]:
        raise AssertionError("quotient by the radical still has nilpotents")
    for a in J:
        if np.any(A.power(a, d)):
            raise AssertionError("radical element is not nilpotent")
        for i in range(d):
            prod = A.mul(A.basis_vector(i), a)
            if _modp.rank(np.vstack([J, prod]), p) != J.shape[0]:
                raise AssertionError("radical is not an ideal")
    return J


# ---------------------------------------------------------------- modules


class FiniteModule:
    """``action[i]`` is the ``m x m`` matrix of ``e_i`` acting on column vectors."""

    def __init__(self, algebra: FiniteAlgebra, action: Sequence, name: str = "", check: bool = True):
        self.algebra = algebra
        self.p = algebra.p
        self.action = [np.asarray(r, dtype=np.int64) % self.p for r in action]
        if len(self.action) != algebra.dim:
            raise ValueError("need one action matrix per algebra basis element")
        self.dim = self.action[0].shape[0] if self.action else 0
        self.name = name
        self._dual = None
        if check:
            self.validate()

    def validate(self) -> None:
        A, p = self.algebra, self.p
        eye = np.eye(self.dim, dtype=np.int64)
        if not np.array_equal(self.act(A.unit), eye):
            raise ValueError("unit does not act as the identity")
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = self.action[i] @ self.action[j] % p
                if not np.array_equal(lhs, self.act(A.c[i, j])):
                    raise ValueError("action is not an algebra representation")

    def act(self, a) -> np.ndarray:
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        for ai, r in zip(a, self.action):
            if ai:
                out = (out + int(ai) * r) % self.p
        return out

    def __repr__(self):
        return f"FiniteModule({self.name or '?'}, dim={self.dim})"

    @classmethod
    def zero(cls, A: FiniteAlgebra) -> "FiniteModule":
        return cls(A, [np.zeros((0, 0), dtype=np.int64)] * A.dim, name="0")

    def direct_sum(self, other: "FiniteModule") -> "FiniteModule":
        m, n = self.dim, other.dim
        acts = []
        for a, b in zip(self.action, other.action):
            blk = np.zeros((m + n, m + n), dtype=np.int64)
            blk[:m, :m] = a
            blk[m:, m:] = b
            acts.append(blk)
        return FiniteModule(self.algebra, acts, name=f"({self.name}+{other.name})")

    def span_submodule_basis(self, vectors) -> np.ndarray:
        """Columns spanning the submodule generated by ``vectors``."""
        rows = [r @ np.asarray(v, dtype=np.int64) % self.p for v in vectors for r in self.action]
        if not rows:
            return np.zeros((self.dim, 0), dtype=np.int64)
        return _modp.row_space_basis(np.array(rows, dtype=np.int64), self.p).T

    def submodule(self, vectors, name: str = "") -> "FiniteModule":
        S = self.span_submodule_basis(vectors)
        return self.restrict(S, name)

    def restrict(self, S: np.ndarray, name: str = "") -> "FiniteModule":
        acts = []
        for r in self.action:
            X = _modp.solve_many(S, r @ S % self.p, self.p)
            if X is None:
                raise ValueError("subspace is not a submodule")
            acts.append(X)
        if S.shape[1] == 0:
            acts = [np.zeros((0, 0), dtype=np.int64)] * self.algebra.dim
        return FiniteModule(self.algebra, acts, name=name)

    def quotient(self, S: np.ndarray, name: str = "") -> "FiniteModule":
        """Quotient by the submodule spanned by the columns of ``S``."""
        p, m = self.p, self.dim
        S = _modp.row_space_basis(S.T, p).T if S.size else np.zeros((m, 0), dtype=np.int64)
        cols = [S[:, k] for k in range(S.shape[1])]
        added = []
        for j in range(m):
            e = np.zeros(m, dtype=np.int64)
            e[j] = 1
            if _modp.rank(np.array(cols + added + [e]), p) > len(cols) + len(added):
                added.append(e)
        s, q = len(cols), len(added)
        if q == 0:
            return FiniteModule(self.algebra, [np.zeros((0, 0), dtype=np.int64)] * self.algebra.dim,
                                name=name)
        basis = np.array(cols + added, dtype=np.int64).T
        inv = _modp.inverse(basis, p)
        Q = basis[:, s:]
        acts = [(inv @ (r @ Q % p) % p)[s:, :] for r in self.action]
        return FiniteModule(self.algebra, acts, name=name)

    def annihilator(self) -> np.ndarray:
        """Rows spanning ``{a : a M = 0}`` in algebra coordinates."""
        if self.dim == 0:
            return np.eye(self.algebra.dim, dtype=np.int64)
        stacked = np.array([r.reshape(-1) for r in self.action], dtype=np.int64).T
        return _modp.nullspace(stacked, self.p)


def simple_modules(A: FiniteAlgebra) -> list[FiniteModule]:
    reg = A.regular_module()
    out = []
    for m in A.maximal_ideals or []:
        out.append(reg.quotient(m.T, name="k"))
    return out


def cyclic_quotient(A: FiniteAlgebra, gens: Sequence, name: str = "") -> FiniteModule:
    """``A / (gens)``."""
    reg = A.regular_module()
    return reg.quotient(reg.span_submodule_basis(gens), name=name)


# ---------------------------------------------------------------- Hom and duals


def hom_space(M: FiniteModule, N: FiniteModule) -> list[np.ndarray]:
    """Basis of ``Hom_A(M, N)`` as ``N.dim x M.dim`` matrices."""
    m, n, p = M.dim, N.dim, M.p
    if m == 0 or n == 0:
        return []
    blocks = []
    eye_m, eye_n = np.eye(m, dtype=np.int64), np.eye(n, dtype=np.int64)
    for rm, rn in zip(M.action, N.action):
        blocks.append((np.kron(eye_n, rm.T) - np.kron(rn, eye_m)) % p)
    ns = _modp.nullspace(np.vstack(blocks), p)
    return [v.reshape(n, m) for v in ns]


class DualModule(FiniteModule):
    """``Hom_A(M, A)`` with its basis of functionals (``d x m`` matrices)."""

    def __init__(self, of: FiniteModule):
        A, p = of.algebra, of.p
        self.of = of
        self.maps = hom_space(of, A.regular_module())
        s = len(self.maps)
        self._stack = (np.array([F.reshape(-1) for F in self.maps], dtype=np.int64).T
                       if s else np.zeros((A.dim * of.dim, 0), dtype=np.int64))
        acts = []
        for L in A.left:
            if s == 0:
                acts.append(np.zeros((0, 0), dtype=np.int64))
                continue
            imgs = np.array([(L @ F % p).reshape(-1) for F in self.maps], dtype=np.int64).T
            acts.append(_modp.solve_many(self._stack, imgs, p))
        super().__init__(A, acts, name=f"{of.name}*")

    def coordinates(self, F: np.ndarray) -> np.ndarray:
        if not self.maps:
            return np.zeros(0, dtype=np.int64)
        x = _modp.solve(self._stack, F.reshape(-1), self.p)
        if x is None:
            raise ValueError("not an A-linear functional")
        return x


def finite_dual(M: FiniteModule) -> DualModule:
    if M._dual is None:
        M._dual = DualModule(M)
    return M._dual


def finite_canonical_map(M: FiniteModule) -> np.ndarray:
    """Matrix of ``h_M : M -> M**`` (``dim M** x dim M``)."""
    D1 = finite_dual(M)
    D2 = finite_dual(D1)
    cols = []
    for j in range(M.dim):
        H = np.array([F[:, j] for F in D1.maps], dtype=np.int64).T.reshape(M.algebra.dim, len(D1.maps))
        cols.append(D2.coordinates(H))
    if not cols:
        return np.zeros((D2.dim, 0), dtype=np.int64)
    return np.array(cols, dtype=np.int64).T.reshape(D2.dim, M.dim)


def finite_dual_map(phi: np.ndarray, M: FiniteModule, N: FiniteModule) -> np.ndarray:
    """Matrix of ``phi^* : N^* -> M^*`` for ``phi : M -> N``."""
    Md, Nd = finite_dual(M), finite_dual(N)
    cols = [Md.coordinates(G @ phi % M.p) for G in Nd.maps]
    if not cols:
        return np.zeros((Md.dim, 0), dtype=np.int64)
    return np.array(cols, dtype=np.int64).T.reshape(Md.dim, Nd.dim)


def lemma_check_finite(N: FiniteModule) -> bool:
    """``(h_N)^* o h_M == 1_M`` for ``M = N^*``."""
    M = finite_dual(N)
    hM = finite_canonical_map(M)
    hN = finite_canonical_map(N)
    hN_dual = finite_dual_map(hN, N, finite_dual(M))
    comp = hN_dual @ hM % N.p
    return bool(np.array_equal(comp, np.eye(M.dim, dtype=np.int64)))


# ---------------------------------------------------------------- isomorphism search


@dataclass
class IsoSearchResult:
    status: str  # "found" | "none" | "inconclusive"
    map: np.ndarray | None = None
    reason: str = ""
    candidates: int = 0


def _invertible_in(basis: list[np.ndarray], coeffs: np.ndarray, p: int) -> np.ndarray:
    stack = np.array(basis, dtype=np.int64)
    mats = np.einsum("nk,kij->nij", coeffs, stack) % p
    return mats, _modp.batch_det(mats, p) != 0


def iso_search(M: FiniteModule, N: FiniteModule, rng=None, draws: int = 10_000,
               exhaustive_cap: int = 10 ** 6, chunk: int = 4096) -> IsoSearchResult:
    """Look for an invertible element of ``Hom_A(M, N)``.

    Fingerprints first (dimension, annihilator), then random draws from the
    hom space, then exhaustive enumeration when the space is small enough.
    Never reports ``none`` without having enumerated everything.
    """
    p = M.p
    if M.dim != N.dim:
        return IsoSearchResult("none", reason="dimension")
    if M.dim == 0:
        return IsoSearchResult("found", np.zeros((0, 0), dtype=np.int64), reason="zero")
    if not _modp.same_row_space(M.annihilator(), N.annihilator(), p):
        return IsoSearchResult("none", reason="annihilator")
    basis = hom_space(M, N)
    k = len(basis)
    if k == 0:
        return IsoSearchResult("none", reason="no homomorphisms")
    rng = rng if rng is not None else np.random.default_rng(0)
    size = p ** k
    tried = 0
    if size > draws:
        left = draws
        while left > 0:
            n = min(chunk, left)
            coeffs = rng.integers(0, p, size=(n, k)).astype(np.int64)
            mats, ok = _invertible_in(basis, coeffs, p)
            tried += n
            if ok.any():
                return IsoSearchResult("found", mats[int(np.argmax(ok))], reason="random", candidates=tried)
            left -= n
    if size > exhaustive_cap:
        return IsoSearchResult("inconclusive", reason=f"hom space too large (p^{k})", candidates=tried)
    it = itertools.product(range(p), repeat=k)
    while True:
        block = list(itertools.islice(it, chunk))
        if not block:
            break
        coeffs = np.array(block, dtype=np.int64)
        mats, ok = _invertible_in(basis, coeffs, p)
        tried += len(block)
        if ok.any():
            return IsoSearchResult("found", mats[int(np.argmax(ok))], reason="exhaustive", candidates=tried)
    return IsoSearchResult("none", reason="exhaustive", candidates=tried)


# ---------------------------------------------------------------- the proposition


@dataclass
class PropositionReport:
    algebra: str
    module: str
    dim_module: int
    dim_dual: int
    dim_bidual: int
    h_injective: bool
    h_invertible: bool
    iso: str
    iso_reason: str
    dim_coker: int
    dim_coker_mod_radical: int
    nakayama_ok: bool
    verdict: str  # "consistent" | "inconsistent" | "inconclusive"

    def as_dict(self) -> dict:
        return asdict(self)


def tensor_residue_dim(X: FiniteModule, J: np.ndarray) -> int:
    """``dim (A/J) (x) X = dim X - dim JX``."""
    if X.dim == 0:
        return 0
    cols = [X.act(r) for r in J]
    if not cols:
        return X.dim
    JX = np.hstack(cols)
    return X.dim - _modp.rank(JX, X.p)


def proposition_check(M: FiniteModule, rng=None, **search) -> PropositionReport:
    """Compare "some isomorphism M ~= M**" with invertibility of ``h_M``."""
    A, p = M.algebra, M.p
    D1 = finite_dual(M)
    D2 = finite_dual(D1)
    h = finite_canonical_map(M)
    r = _modp.rank(h, p) if h.size else 0
    injective = r == M.dim
    invertible = injective and D2.dim == M.dim
    X = FiniteModule(A, [np.zeros((0, 0), dtype=np.int64)] * A.dim) if D2.dim == 0 else D2.quotient(h)
    J = jacobson_radical(A)
    dim_top = tensor_residue_dim(X, J)
    nakayama_ok = (X.dim == 0) == (dim_top == 0)
    res = iso_search(M, D2, rng=rng, **search)
    if res.status == "found":
        verdict = "consistent" if invertible else "inconsistent"
    elif res.status == "none":
        verdict = "inconsistent" if invertible else "consistent"
    else:
        verdict = "inconclusive"
    if not nakayama_ok:
        verdict = "inconsistent"
    return PropositionReport(A.name, M.name, M.dim, D1.dim, D2.dim, injective, invertible,
                             res.status, res.reason, X.dim, dim_top, nakayama_ok, verdict)


# ---------------------------------------------------------------- corpus


def algebra_corpus(primes: Sequence[int] = (2, 3), max_dim: int = 4) -> list[FiniteAlgebra]:
    """Local algebras ``k[x]/(x^n)``, ``k[x,y]/(x^2,xy,y^2)``, ``k[x,y]/(x^2,y^2)`` and their products."""
    out = []
    for p in primes:
        local = [FiniteAlgebra.truncated(p, n) for n in range(1, 5)]
        local.append(FiniteAlgebra.monomial_quotient(p, 2, [(2, 0), (1, 1), (0, 2)],
                                                     f"GF({p})[x,y]/(x^2,xy,y^2)"))
        local.append(FiniteAlgebra.monomial_quotient(p, 2, [(2, 0), (0, 2)], f"GF({p})[x,y]/(x^2,y^2)"))
        out.extend(local)
        seen = set()
        for r in (2, 3, 4):
            for combo in itertools.combinations_with_replacement(range(len(local)), r):
                dim = sum(local[i].dim for i in combo)
                if dim > max_dim or combo in seen:
                    continue
                seen.add(combo)
                out.append(FiniteAlgebra.product(*(local[i] for i in combo)))
    return [a for a in out if a.dim <= max_dim]


def module_corpus(A: FiniteAlgebra, max_dim: int = 4) -> list[FiniteModule]:
    """Deterministic small modules: free, simple, cyclic quotients, sums and duals."""
    reg = A.regular_module()
    mods = [reg] + simple_modules(A)
    for i in range(A.dim):
        e = A.basis_vector(i)
        mods.append(cyclic_quotient(A, [e], name=f"A/(e{i})"))
        mods.append(reg.submodule([e], name=f"A*e{i}"))
    J = jacobson_radical(A)
    if J.shape[0]:
        mods.append(reg.restrict(J.T, name="J"))
        mods.append(reg.quotient(J.T, name="A/J"))
    base = [m for m in mods if 0 < m.dim <= max_dim]
    sums = []
    for a, b in itertools.combinations_with_replacement(base, 2):
        if a.dim + b.dim <= max_dim:
            sums.append(a.direct_sum(b))
    out = base + sums
    out += [finite_dual(m) for m in base if 0 < finite_dual(m).dim <= max_dim]
    for m in out:
        if not m.name:
            m.name = "?"
    return [m for m in out if 0 < m.dim <= max_dim]


def random_module(A: FiniteAlgebra, rng, max_dim: int = 4, attempts: int = 50) -> FiniteModule:
    """A random small module: cyclic pieces of ``A`` and ``A^2``, sums, duals."""
    reg = A.regular_module()
    for _ in range(attempts):
        kind = int(rng.integers(0, 6))
        a = A.random_element(rng)
        if kind == 0:
            M = cyclic_quotient(A, [a], name="A/(a)")
        elif kind == 1:
            M = reg.submodule([a], name="Aa")
        elif kind == 2:
            F = reg.direct_sum(reg)
            v = rng.integers(0, A.p, size=2 * A.dim)
            M = F.quotient(F.span_submodule_basis([v]), name="A^2/(v)")
        elif kind == 3:
            F = reg.direct_sum(reg)
            v = rng.integers(0, A.p, size=2 * A.dim)
            w = rng.integers(0, A.p, size=2 * A.dim)
            M = F.submodule([v, w], name="A(v,w)")
        elif kind == 4:
            M1 = cyclic_quotient(A, [a], name="A/(a)")
            M2 = cyclic_quotient(A, [A.random_element(rng)], name="A/(b)")
            M = M1.direct_sum(M2)
        else:
            M = finite_dual(cyclic_quotient(A, [a], name="A/(a)"))
        if 0 < M.dim <= max_dim:
            return M
    return simple_modules(A)[0] if A.maximal_ideals else reg


# ---------------------------------------------------------------- Dedekind finiteness


def _matrix_subalgebras(rng, primes=(2, 3)):
    """Random associative (not necessarily commutative) matrix algebras by basis."""
    kind = int(rng.integers(0, 3))
    p = int(primes[int(rng.integers(0, len(primes)))])
    if kind == 0:
        n = int(rng.integers(1, 4))
        basis = []
        for i in range(n):
            for j in range(n):
                E = np.zeros((n, n), dtype=np.int64)
                E[i, j] = 1
                basis.append(E)
        return p, basis
    algs = algebra_corpus((p,))
    A = algs[int(rng.integers(0, len(algs)))]
    if kind == 1:
        return p, list(A.left)
    M = random_module(A, rng, max_dim=4)
    return p, hom_space(M, M)


_CORPUS: dict = {}


def _cached_corpus() -> list[FiniteAlgebra]:
    if "algebras" not in _CORPUS:
        _CORPUS["algebras"] = algebra_corpus()
    return _CORPUS["algebras"]


def oracle_case(seed: int, case: int) -> dict:
    """One reproducible random case: a corpus algebra, a random module, both checks."""
    rng = np.random.default_rng([seed, case])
    algebras = _cached_corpus()
    A = algebras[int(rng.integers(len(algebras)))]
    M = random_module(A, rng)
    rep = proposition_check(M, rng=rng)
    out = {"case": case, **rep.as_dict(), "lemma": lemma_check_finite(M)}
    return out


def oracle_campaign(seed: int, cases: int, jobs: int = 1) -> list[dict]:
    """Run ``cases`` random cases; results are sorted by case id whatever ``jobs`` is."""
    ids = range(cases)
    if jobs <= 1:
        results = [oracle_case(seed, i) for i in ids]
    else:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(oracle_case, [seed] * cases, ids, chunksize=8))
    return sorted(results, key=lambda r: r["case"])


def dedekind_probe(samples: int = 1000, seed: int = 0, max_tries: int = 100_000) -> dict:
    """Count pairs ``ab = 1`` in random finite rings and check ``ba = 1``.

    Finite rings are Dedekind-finite, so ``violations`` must be 0.
    """
    rng = np.random.default_rng(seed)
    found = violations = tries = 0
    while found < samples and tries < max_tries:
        tries += 1
        p, basis = _matrix_subalgebras(rng)
        if not basis:
            continue
        n = basis[0].shape[0]
        a = np.einsum("k,kij->ij", rng.integers(0, p, size=len(basis)), np.array(basis)) % p
        # right inverse b inside the algebra: a b = 1
        stack = np.array([(a @ B % p).reshape(-1) for B in basis], dtype=np.int64).T
        y = _modp.solve(stack, np.eye(n, dtype=np.int64).reshape(-1), p)
        if y is None:
            continue
        b = np.einsum("k,kij->ij", y, np.array(basis)) % p
        found += 1
        if not np.array_equal(b @ a % p, np.eye(n, dtype=np.int64)):
            violations += 1
    return {"samples": found, "violations": violations, "tries": tries}


# ---------------------------------------------------------------- symbolic bridge


def algebra_from_ring(ring) -> FiniteAlgebra:
    """Finite algebra of a zero-dimensional quotient ring over GF(p)."""
    from .modules import free_module, standard_basis
    p = ring.field.characteristic
    if p == 0:
        raise ValueError("finite algebras need a prime field")
    basis = [m for _, m in standard_basis(free_module(ring, 1))]
    index = {m: i for i, m in enumerate(basis)}
    d = len(basis)
    c = np.zeros((d, d, d), dtype=np.int64)
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            prod = ring.element({tuple(x + y for x, y in zip(a, b)): 1})
            for m, coef in prod._terms.items():
                c[i, j, index[m]] = coef
    unit = np.zeros(d, dtype=np.int64)
    unit[index[ring._zero_mono]] = 1
    alg = FiniteAlgebra(p, c, unit, name=repr(ring))
    alg.monomials = basis
    return alg


def module_from_presented(M, A: FiniteAlgebra) -> FiniteModule:
    """Finite module of a finite-dimensional presented module (``A = algebra_from_ring(M.ring)``)."""
    from .groebner import FreeVector
    from .modules import standard_basis
    ring = M.ring
    basis = standard_basis(M)
    index = {t: i for i, t in enumerate(basis)}
    m = len(basis)
    acts = []
    for mono in A.monomials:
        R = np.zeros((m, m), dtype=np.int64)
        for j, (pos, e) in enumerate(basis):
            coords = [ring.zero] * M.rank
            coords[pos] = ring.element({tuple(x + y for x, y in zip(mono, e)): 1})
            nf = M.reduce(FreeVector(ring, coords))
            for (q, mm), coef in nf.raw().items():
                R[index[(q, mm)], j] = coef
        acts.append(R)
    if m == 0:
        acts = [np.zeros((0, 0), dtype=np.int64)] * A.dim
    return FiniteModule(A, acts, name=repr(M))
