"""Symbolic module corpus shared by the acceptance and property tests."""

from reflexa import (GF, FreeVector, Ideal, PresentedModule, QuotientRing, cyclic_module,
                     direct_sum, free_module, ideal_module)

from conftest import cone


def symbolic_corpus(field=GF(32003)):
    R = cone(field)
    T = R.quotient(["X"])
    P = QuotientRing(field, ["x", "y"])
    A3 = QuotientRing(field, ["x"], "degrevlex", ["x^3"])
    S = QuotientRing(field, ["x", "y"], "degrevlex", ["x^2", "x*y", "y^2"])
    D = QuotientRing(field, ["x", "y"], "degrevlex", ["x^2", "y^2"])

    def vec(ring, *e):
        return FreeVector(ring, [ring(x) for x in e])

    mods = {
        "T/(y)": cyclic_module(T, ["Y"]),
        "T/(y,z)": cyclic_module(T, ["Y", "Z"]),
        "T/(w)": cyclic_module(T, ["W"]),
        "T/(y,z,w)": cyclic_module(T, ["Y", "Z", "W"]),
        "T/(w^2)": cyclic_module(T, ["W^2"]),
        "T": free_module(T, 1),
        "T^2": free_module(T, 2),
        "(y,z)_T": ideal_module(Ideal(T, ["Y", "Z"])),
        "(y)_T": ideal_module(Ideal(T, ["Y"])),
        "(w)_T": ideal_module(Ideal(T, ["W"])),
        "coker_T[[y,z],[0,w]]": PresentedModule(T, 2, [vec(T, "Y", 0), vec(T, "Z", "W")]),
        "T/(y)+T/(w)": direct_sum(cyclic_module(T, ["Y"]), cyclic_module(T, ["W"])),
        "I=(X,Y)": ideal_module(Ideal(R, ["X", "Y"])),
        "R/I": cyclic_module(R, ["X", "Y"]),
        "(X,Y,Z)": ideal_module(Ideal(R, ["X", "Y", "Z"])),
        "(X)": ideal_module(Ideal(R, ["X"])),
        "R/(X,Y,Z,W)": cyclic_module(R, ["X", "Y", "Z", "W"]),
        "R": free_module(R, 1),
        "(Y,Z)_R": ideal_module(Ideal(R, ["Y", "Z"])),
        "R/(X)": cyclic_module(R, ["X"]),
        "k[x,y]/(x,y)": cyclic_module(P, ["x", "y"]),
        "(x,y)": ideal_module(Ideal(P, ["x", "y"])),
        "k[x,y]/(x)": cyclic_module(P, ["x"]),
        "k[x,y]^2/(x,y)e1": PresentedModule(P, 2, [vec(P, "x", 0), vec(P, "y", 0)]),
        "A3/(x)": cyclic_module(A3, ["x"]),
        "A3/(x^2)": cyclic_module(A3, ["x^2"]),
        "A3": free_module(A3, 1),
        "A3+A3/(x)": direct_sum(free_module(A3, 1), cyclic_module(A3, ["x"])),
        "S/m": cyclic_module(S, ["x", "y"]),
        "S": free_module(S, 1),
        "m_S": ideal_module(Ideal(S, ["x", "y"])),
        "D/(x)": cyclic_module(D, ["x"]),
        "D/(x*y)": cyclic_module(D, ["x*y"]),
        "coker_D[[x,y]]": PresentedModule(D, 2, [vec(D, "x", "y")]),
    }
    return mods
