"""Raw Buchberger kernel on sparse dictionaries.

A vector of a free module ``P^n`` over the ambient polynomial ring ``P`` is a
``dict`` mapping ``(position, exponent_tuple)`` to a nonzero coefficient.
Positions ``>= rank`` are *tracking* positions: they never carry a leading
term and record how each element was built from the input generators.

Terms are compared position-over-term; ``tkey`` maps a term to a sortable key
(bigger key = bigger term).  Everything here is oblivious to the user-facing
classes and only needs a coefficient field and a term key.
"""

from __future__ import annotations

import heapq
from collections import defaultdict
from typing import Callable, Iterable

Term = tuple  # (position, exponents)
Vec = dict


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(b: tuple, a: tuple) -> tuple:
    return tuple(y - x for x, y in zip(a, b))


def mono_divides(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def coprime(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def lead(v: Vec, tkey: Callable) -> Term:
    return max(v, key=tkey)


def scale_shift(v: Vec, coef, shift: tuple, field) -> Vec:
    norm = field.normalize
    out = {}
    for (p, m), c in v.items():
        nc = norm(c * coef)
        if nc:
            out[(p, mono_mul(m, shift))] = nc
    return out


def add_into(acc: Vec, v: Vec, coef, field, shift: tuple | None = None) -> None:
    """acc += coef * x^shift * v, in place."""
    norm = field.normalize
    for (p, m), c in v.items():
        t = (p, m if shift is None else mono_mul(m, shift))
        nc = norm(acc.get(t, 0) + coef * c)
        if nc:
            acc[t] = nc
        else:
            acc.pop(t, None)


def make_monic(v: Vec, lt: Term, field) -> Vec:
    c = v[lt]
    if c == 1:
        return v
    inv = field.inv(c)
    norm = field.normalize
    return {t: norm(x * inv) for t, x in v.items()}


class Reducer:
    """Monic reducers indexed by the position of their leading term."""

    def __init__(self):
        self.by_pos = defaultdict(list)

    def add(self, lt: Term, vec: Vec) -> None:
        self.by_pos[lt[0]].append((lt[1], vec))

    def find(self, pos: int, mono: tuple):
        for lm, vec in self.by_pos.get(pos, ()):
            if mono_divides(lm, mono):
                return lm, vec
        return None


def _neg(k):
    return tuple(_neg(x) if type(x) is tuple else -x for x in k)


def reduce_vec(v: Vec, reducer: Reducer, field, tkey: Callable, limit: int | None = None) -> Vec:
    """Fully reduce every term of ``v`` whose position is below ``limit``.

    Terms at positions ``>= limit`` (tracking positions) are carried along.
    Pending terms sit in a max-heap; a reduction step only creates terms
    smaller than the one it removes, so stale heap entries are just skipped.
    """
    norm = field.normalize
    work = dict(v)
    if limit is not None:
        carried = {t: c for t, c in work.items() if t[0] >= limit}
        for t in carried:
            del work[t]
    else:
        carried = {}
    heap = [(_neg(tkey(t)), t) for t in work]
    heapq.heapify(heap)
    done = {}
    while heap:
        _, t = heapq.heappop(heap)
        c = work.pop(t, None)
        if c is None:
            continue
        hit = reducer.find(t[0], t[1])
        if hit is None:
            done[t] = c
            continue
        lm, g = hit
        shift = mono_div(t[1], lm)
        for (p, m), gc in g.items():
            s = (p, mono_mul(m, shift))
            if s == t:
                continue
            if limit is not None and p >= limit:
                nc = norm(carried.get(s, 0) - c * gc)
                if nc:
                    carried[s] = nc
                else:
                    carried.pop(s, None)
            else:
                old = work.get(s)
                nc = norm((old or 0) - c * gc)
                if nc:
                    work[s] = nc
                    if old is None:
                        heapq.heappush(heap, (_neg(tkey(s)), s))
                else:
                    work.pop(s, None)
    done.update(carried)
    return done


class GBResult:
    __slots__ = ("basis", "lts", "syzygies", "reducer")

    def __init__(self, basis, lts, syzygies):
        self.basis = basis
        self.lts = lts
        self.syzygies = syzygies
        self.reducer = Reducer()
        for lt, g in zip(lts, basis):
            self.reducer.add(lt, g)


def groebner(gens: Iterable[Vec], field, tkey: Callable, rank: int,
             track: bool = False) -> GBResult:
    """Buchberger's algorithm; pairs are selected by sugar degree, then by lcm.

    With ``track`` set, every input generator ``i`` must already carry its
    tracking unit at position ``rank + i`` (callers build these).  Vectors
    whose non-tracking part reduces to zero are returned as syzygies
    (tracking part shifted down to position 0).
    """
    basis: list[Vec] = []
    lts: list[Term] = []
    sugar: list[int] = []
    reducer = Reducer()
    pending: set = set()
    heap: list = []
    syz: list[Vec] = []
    same_pos = defaultdict(list)
    limit = rank if track else None

    def insert(h: Vec, lt: Term, sg: int) -> None:
        h = make_monic(h, lt, field)
        idx = len(basis)
        for i in same_pos[lt[0]]:
            l = mono_lcm(lts[i][1], lt[1])
            ps = max(sugar[i] + sum(l) - sum(lts[i][1]), sg + sum(l) - sum(lt[1]))
            heapq.heappush(heap, (ps, tkey((lt[0], l)), i, idx))
            pending.add((i, idx))
        basis.append(h)
        lts.append(lt)
        sugar.append(sg)
        same_pos[lt[0]].append(idx)
        reducer.add(lt, h)

    def process(v: Vec, sg: int) -> None:
        r = reduce_vec(v, reducer, field, tkey, limit)
        if not r:
            return
        lt = lead(r, tkey)
        if lt[0] < rank:
            insert(r, lt, max(sg, _degree(r, rank)))
        elif track:
            syz.append({(p - rank, m): c for (p, m), c in r.items()})

    for g in gens:
        if g:
            process(g, _degree(g, rank))

    while heap:
        ps, _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        pos, mi = lts[i]
        mj = lts[j][1]
        if not track and rank == 1 and coprime(mi, mj):
            continue
        l = mono_lcm(mi, mj)
        skip = False
        for k in same_pos[pos]:
            if k == i or k == j or not mono_divides(lts[k][1], l):
                continue
            a, b = (i, k) if i < k else (k, i)
            c, d = (j, k) if j < k else (k, j)
            if (a, b) not in pending and (c, d) not in pending:
                skip = True
                break
        if skip:
            continue
        s = scale_shift(basis[i], 1, mono_div(l, mi), field)
        add_into(s, basis[j], -1, field, mono_div(l, mj))
        process(s, ps)

    return _reduce_basis(basis, lts, syz, field, tkey, limit)


def _degree(v: Vec, rank: int) -> int:
    return max((sum(m) for (p, m) in v if p < rank), default=0)


def _reduce_basis(basis, lts, syz, field, tkey, limit) -> GBResult:
    keep = []
    for i, (pi, mi) in enumerate(lts):
        redundant = False
        for j, (pj, mj) in enumerate(lts):
            if i == j or pi != pj or not mono_divides(mj, mi):
                continue
            if mj != mi or j < i:
                redundant = True
                break
        if not redundant:
            keep.append(i)
    keep.sort(key=lambda i: tkey(lts[i]))
    red = Reducer()
    for i in keep:
        red.add(lts[i], basis[i])
    out, out_lts = [], []
    for i in keep:
        g, lt = basis[i], lts[i]
        c = g[lt]
        tail = {t: x for t, x in g.items() if t != lt}
        g2 = reduce_vec(tail, red, field, tkey, limit)
        g2[lt] = c
        out.append(g2)
        out_lts.append(lt)
    return GBResult(out, out_lts, syz)
