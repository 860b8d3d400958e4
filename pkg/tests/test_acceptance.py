"""Acceptance gate: one PASS/FAIL line per criterion, exact comparisons only."""

import itertools
import random
import time
from collections import Counter

import numpy as np

from reflexa import (GF, QQ, FreeVector, Ideal, QuotientRing, buchberger, contains,
                     cyclic_module, direct_sum, free_resolution, hom_module,
                     ideal_module, k_dimension, lemma_composite_check,
                     normal_form, polynomial_ring, submodule_membership)
from reflexa.finite_oracle import (FiniteAlgebra, algebra_corpus, cyclic_quotient,
                                   dedekind_probe, hom_space, lemma_check_finite,
                                   module_corpus, oracle_campaign, proposition_check)
from reflexa.groebner import ambient_normal_form, s_vector
from reflexa.scenario import CONCLUSION, paper_example

from conftest import ACCEPTANCE, cone
from corpus import symbolic_corpus
from oracles import coker_h_dimension, ext1_t_tj_dimension


def record(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE[n] = line
    print(line)
    assert ok, line


# 1 -------------------------------------------------------------------------

def test_criterion_1_paper_example():
    ext_oracle = ext1_t_tj_dimension(6)
    coker_oracle = coker_h_dimension(6)
    notes = []
    ok = True
    for field in (GF(32003), QQ):
        t0 = time.perf_counter()
        rep = paper_example(field)
        elapsed = time.perf_counter() - t0
        steps = {s.name: s for s in rep.steps}
        ext_step = steps["Ext^1_T(T/J, T) is nonzero of length 1"]
        ri_step = steps["R/I over T is torsionless, not reflexive"]
        ok &= rep.passed and rep.verdict == CONCLUSION and elapsed <= 60
        ok &= ext_step.details["k_dim"] == ext_oracle == 1
        ok &= ri_step.details["coker_dim"] == coker_oracle == 1
        ok &= steps["I = (X, Y) is a reflexive R-module"].passed
        ok &= steps["(0 :_T I) = J = (y, z)"].passed and steps["(0 :_T J) = (y)"].passed
        ok &= steps["Ext^1_R(Hom_R(I, R), R) is nonzero"].passed
        notes.append(f"{field!r}: {sum(s.passed for s in rep.steps)}/{len(rep.steps)} steps in {elapsed:.2f}s")
    record(1, ok, f"worked example ({'; '.join(notes)}; Ext^1 and coker(h) dims = {ext_oracle})")


# 2 -------------------------------------------------------------------------

def test_criterion_2_lemma():
    symbolic = symbolic_corpus()
    sym_fail = [k for k, M in symbolic.items() if not lemma_composite_check(M)]
    random_cases = oracle_campaign(seed=20240, cases=200)
    fin_fail = [c["case"] for c in random_cases if not c["lemma"]]
    corpus_total = corpus_fail = 0
    for A in algebra_corpus():
        for M in module_corpus(A):
            corpus_total += 1
            corpus_fail += not lemma_check_finite(M)
    ok = len(symbolic) >= 30 and len(random_cases) >= 200 and not sym_fail and not fin_fail \
        and corpus_fail == 0
    record(2, ok, f"lemma: {len(symbolic)} symbolic, {len(random_cases)} random finite, "
                  f"{corpus_total} finite corpus modules; failures {len(sym_fail) + len(fin_fail) + corpus_fail}")


# 3 -------------------------------------------------------------------------

def test_criterion_3_proposition():
    verdicts = Counter()
    for A in algebra_corpus():
        for M in module_corpus(A):
            verdicts[proposition_check(M, rng=np.random.default_rng(0)).verdict] += 1
    random_cases = oracle_campaign(seed=0, cases=500)
    verdicts.update(c["verdict"] for c in random_cases)
    total = sum(verdicts.values())
    rate = verdicts["inconclusive"] / total
    ok = verdicts["inconsistent"] == 0 and rate < 0.05 and len(random_cases) == 500
    record(3, ok, f"proposition: {total} cases, consistent {verdicts['consistent']}, "
                  f"inconsistent {verdicts['inconsistent']}, inconclusive rate {rate:.4f}")


# 4 -------------------------------------------------------------------------

def test_criterion_4_resolutions():
    T = cone(GF(32003)).quotient(["X"])
    tj = free_resolution(cyclic_module(T, ["Y", "Z"]), 2)
    resolutions = [tj]
    for field in (GF(32003), QQ):
        resolutions += [free_resolution(M, 3) for M in symbolic_corpus(field).values()]
    complexes = sum(r.is_complex() for r in resolutions)
    exact = sum(r.is_exact() for r in resolutions)
    ok = tj.ranks == [1, 2, 4] and complexes == exact == len(resolutions)
    record(4, ok, f"resolutions: T/J ranks {tj.ranks}; {complexes}/{len(resolutions)} complexes, "
                  f"{exact}/{len(resolutions)} exact")


# 5 -------------------------------------------------------------------------

def _poly_vector(f, A):
    v = np.zeros(A.dim, dtype=np.int64)
    for m, c in f.terms():
        v[A.monomials.index(m)] = c
    return v


def _pairs():
    out = []
    A3r = QuotientRing(GF(2), ["x"], "degrevlex", ["x^3"])
    A3 = FiniteAlgebra.monomial_quotient(2, 1, [(3,)])
    Sr = QuotientRing(GF(3), ["x", "y"], "degrevlex", ["x^2", "x*y", "y^2"])
    S = FiniteAlgebra.monomial_quotient(3, 2, [(2, 0), (1, 1), (0, 2)])
    Dr = QuotientRing(GF(2), ["x", "y"], "degrevlex", ["x^2", "y^2"])
    D = FiniteAlgebra.monomial_quotient(2, 2, [(2, 0), (0, 2)])

    def cyc(ring, A, gens):
        sym = cyclic_module(ring, gens)
        fin = cyclic_quotient(A, [_poly_vector(ring(g), A) for g in gens]) if gens else A.regular_module()
        return sym, fin

    def ideal(ring, A, gens):
        return (ideal_module(Ideal(ring, gens)),
                A.regular_module().submodule([_poly_vector(ring(g), A) for g in gens]))

    def dsum(a, b):
        return direct_sum(a[0], b[0]), a[1].direct_sum(b[1])

    out.append((cyc(A3r, A3, ["x"]), cyc(A3r, A3, [])))
    out.append((cyc(A3r, A3, []), cyc(A3r, A3, ["x^2"])))
    out.append((cyc(A3r, A3, ["x^2"]), cyc(A3r, A3, ["x"])))
    out.append((cyc(Sr, S, ["x", "y"]), cyc(Sr, S, [])))
    out.append((cyc(Sr, S, []), cyc(Sr, S, ["x", "y"])))
    out.append((ideal(Sr, S, ["x", "y"]), cyc(Sr, S, [])))
    out.append((cyc(Dr, D, ["x"]), cyc(Dr, D, ["y"])))
    out.append((cyc(Dr, D, ["x*y"]), cyc(Dr, D, [])))
    out.append((ideal(Dr, D, ["x"]), cyc(Dr, D, ["x"])))
    out.append((dsum(cyc(Sr, S, ["x", "y"]), cyc(Sr, S, [])), ideal(Sr, S, ["x", "y"])))
    return out


def test_criterion_5_cross_validation():
    rows = []
    for (M, FM), (N, FN) in _pairs():
        assert k_dimension(M) == FM.dim and k_dimension(N) == FN.dim
        rows.append((k_dimension(hom_module(M, N)), len(hom_space(FM, FN))))
    ok = len(rows) == 10 and all(a == b for a, b in rows)
    record(5, ok, f"cross-validation: hom dims symbolic/finite {rows}")


# 6 -------------------------------------------------------------------------

MONS = ["X", "Y", "Z", "W", "X*Y", "Z*W", "Y^2", "W^2", "1", "X*W", "Y*Z"]


def _random_gens(ring, rng):
    rank = rng.randint(1, 3)
    gens = []
    for _ in range(rng.randint(1, 4)):
        coords = [ring(" + ".join(f"{rng.randint(-3, 3)}*{m}" for m in rng.sample(MONS, rng.randint(1, 3))))
                  for _ in range(rank)]
        gens.append(FreeVector(ring, coords))
    gens = [g for g in gens if not g.is_zero()]
    return gens or [FreeVector.unit(ring, rank, 0)]


def test_criterion_6_engine_properties():
    rng = random.Random(6)
    R = cone(GF(32003))
    rings = [R, R.quotient(["X"]), polynomial_ring(GF(32003), ["X", "Y", "Z", "W"]),
             cone(QQ).quotient(["X"])]
    s_checks = s_fail = idem_fail = lift_fail = lifts = 0
    while s_checks < 1000:
        ring = rings[rng.randrange(len(rings))]
        gens = _random_gens(ring, rng)
        G = buchberger(gens)
        for i, j in itertools.combinations(range(len(G)), 2):
            s = s_vector(G, i, j)
            if s is None:
                continue
            s_checks += 1
            s_fail += not ambient_normal_form(s, G).is_zero()
        rank = gens[0].rank
        v = FreeVector(ring, [ring(rng.choice(MONS)) for _ in range(rank)])
        nf = normal_form(v, G)
        idem_fail += normal_form(nf, G) != nf or not contains(v - nf, gens)
        combo = FreeVector.zero(ring, rank)
        for g in gens:
            combo = combo + ring(rng.choice(MONS)) * g
        ok, lift = submodule_membership(combo, gens)
        back = FreeVector.zero(ring, rank)
        if ok:
            for c, g in zip(lift.coords, gens):
                back = back + c * g
        lifts += 1
        lift_fail += not ok or back != combo
    good = s_fail == idem_fail == lift_fail == 0
    record(6, good, f"engine: {s_checks} S-vectors, {lifts} normal-form and lift checks; "
                    f"failures {s_fail}/{idem_fail}/{lift_fail}")


# 7 -------------------------------------------------------------------------

def test_criterion_7_dedekind_probe():
    out = dedekind_probe(samples=1000, seed=7)
    ok = out["samples"] == 1000 and out["violations"] == 0
    record(7, ok, f"Dedekind-finiteness: {out['samples']} samples with ab = 1, "
                  f"{out['violations']} with ba != 1")
