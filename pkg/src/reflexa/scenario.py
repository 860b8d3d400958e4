"""Worked example: a reflexive ideal over the rational normal cubic cone whose dual is not.

``R = k[X,Y,Z,W] / (2x2 minors of [[X,Y,Z],[Y,Z,W]])`` and ``T = R/(X)``.
Each step records what was checked and whether it held.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .groebner import Ideal, colon_ideal, ideal_equal
from .homological import (canonical_map, dual_module, ext_module, free_resolution, hom_module,
                          is_reflexive, lemma_composite_check)
from .modules import (annihilator, cokernel, cyclic_module, free_module, ideal_module,
                      is_zero_module, k_dimension)
from .ring_core import QuotientRing, parse_field

CONCLUSION = "K_R is not 3-torsionfree"

MINORS = ("X*Z - Y^2", "X*W - Y*Z", "Y*W - Z^2")


@dataclass
class Step:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"step": self.name, "passed": self.passed, "details": self.details}


@dataclass
class ScenarioReport:
    field: str
    steps: list[Step]

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.steps)

    @property
    def verdict(self) -> str:
        return CONCLUSION if self.passed else "inconclusive"

    def as_dict(self) -> dict:
        return {"field": self.field, "steps": [s.as_dict() for s in self.steps],
                "passed": self.passed, "verdict": self.verdict}

    def render(self, fmt: str = "text") -> str:
        if fmt == "json":
            return json.dumps(self.as_dict(), indent=2, sort_keys=True)
        lines = [f"field: {self.field}"]
        for s in self.steps:
            extra = ", ".join(f"{k}={_show(v)}" for k, v in s.details.items())
            lines.append(f"[{'PASS' if s.passed else 'FAIL'}] {s.name}" + (f"   ({extra})" if extra else ""))
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


def _show(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float) and v == float("inf"):
        return "infinite"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_show(x) for x in v) + "]"
    return str(v)


def _dim(x):
    return "infinite" if x == float("inf") else x


def paper_example(field="GF(32003)") -> ScenarioReport:
    F = parse_field(field) if isinstance(field, str) else field
    steps: list[Step] = []

    def step(name, passed, **details):
        steps.append(Step(name, bool(passed), {k: _dim(v) for k, v in details.items()}))

    R = QuotientRing(F, ("X", "Y", "Z", "W"), "degrevlex", MINORS)
    step("R is the quotient by the 2x2 minors", all(R(m).is_zero() for m in MINORS)
         and not R("X").is_zero(), ideal_basis=len(R.ideal_basis))

    I = Ideal(R, ["X", "Y"])
    I_mod = ideal_module(I)
    rep_I = is_reflexive(I_mod)
    step("I = (X, Y) is a reflexive R-module", rep_I.reflexive, **rep_I.as_dict())

    T = R.quotient(["X"])
    zero = Ideal(T, [])
    xy = Ideal(T, ["Y", "Z"])
    J = colon_ideal(zero, Ideal(T, ["X", "Y"]))
    step("(0 :_T I) = J = (y, z)", ideal_equal(J, xy),
         generators=[str(g) for g in J.reduced_basis()])
    ann_J = colon_ideal(zero, J)
    step("(0 :_T J) = (y)", ideal_equal(ann_J, Ideal(T, ["Y"])),
         generators=[str(g) for g in ann_J.reduced_basis()])

    TJ = cyclic_module(T, ["Y", "Z"])
    res = free_resolution(TJ, 2)
    step("T/J has resolution ranks 1, 2, 4", res.ranks == [1, 2, 4] and res.is_complex()
         and res.is_exact(), ranks=res.ranks)

    E1 = ext_module(1, TJ, cyclic_module(T, []))
    e1_dim = k_dimension(E1)
    step("Ext^1_T(T/J, T) is nonzero of length 1", not is_zero_module(E1) and e1_dim == 1,
         k_dim=e1_dim)

    RI = cyclic_module(T, ["Y"])  # R/I = T/(y) as a T-module
    rep_RI = is_reflexive(RI)
    step("R/I over T is torsionless, not reflexive", rep_RI.torsionless and not rep_RI.reflexive,
         **rep_RI.as_dict())

    h = canonical_map(RI)
    C = cokernel(h)
    step("coker(h_{R/I}) matches Ext^1_T(T/J, T)", k_dimension(C) == e1_dim,
         coker_dim=k_dimension(C), ext_dim=e1_dim)

    D = dual_module(RI)
    ann_D = annihilator(D)
    step("Hom_T(R/I, T) has annihilator (y)", ideal_equal(ann_D, Ideal(T, ["Y"])),
         generators=D.rank)

    R1 = free_module(R, 1)
    H = hom_module(I_mod, R1)
    E = ext_module(1, H, R1)
    e_dim = k_dimension(E)
    step("Ext^1_R(Hom_R(I, R), R) is nonzero", not is_zero_module(E), hom_generators=H.rank,
         k_dim=e_dim)

    checks = {"T/J": TJ, "R/I over T": RI, "I": I_mod, "Hom_R(I, R)": H}
    ok = {k: lemma_composite_check(M) for k, M in checks.items()}
    step("(h_N)^* h_{N^*} = 1 on every module above", all(ok.values()),
         modules=len(ok))
    return ScenarioReport(repr(F), steps)


__all__ = ["CONCLUSION", "Step", "ScenarioReport", "paper_example"]
