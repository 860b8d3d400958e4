"""Exact computations with finitely presented modules over quotient polynomial rings.

Groebner bases for submodules of free modules, syzygies and free resolutions,
Hom and Ext, the evaluation map ``M -> M**`` and reflexivity tests, plus a
brute-force oracle over finite algebras.
"""

from .ring_core import (QQ, GF, DimensionError, MonomialOrder, ParseError, Polynomial, PrimeField,
                        QuotientRing, RationalField, ReflexaError, RingMismatchError,
                        monomial_compare, parse_field, polynomial_ring)
from .groebner import (FreeVector, GroebnerBasis, Ideal, Matrix, ModuleOrder, buchberger,
                       colon_ideal, contains, ideal_contains, ideal_equal, ideal_intersection,
                       ideal_sum, kernel_of_matrix, normal_form, submodule_membership,
                       syzygy_basis)
from .modules import (INFINITE, ModuleHomomorphism, NotWellDefinedError, PresentedModule,
                      Subquotient, annihilator, cokernel, cyclic_module, direct_sum, free_module,
                      ideal_module, identity_map, image, is_injective, is_isomorphism,
                      is_surjective, is_zero_module, k_dimension, kernel, make_presented, minimize)
from .homological import (FreeResolution, ReflexivityReport, bidual_module, canonical_map,
                          dual_map, dual_module, ext_module, free_resolution, hom_module,
                          is_reflexive, lemma_composite, lemma_composite_check,
                          naturality_holds)
from .script import Report, Script, format_script, parse_script, run
from .scenario import CONCLUSION, paper_example

__version__ = "0.1.0"

__all__ = ["QQ", "GF", "DimensionError", "MonomialOrder", "ParseError", "Polynomial",
           "PrimeField", "QuotientRing", "RationalField", "ReflexaError", "RingMismatchError",
           "monomial_compare", "parse_field", "polynomial_ring", "FreeVector", "GroebnerBasis",
           "Ideal", "Matrix", "ModuleOrder", "buchberger", "colon_ideal", "contains",
           "ideal_contains", "ideal_equal", "ideal_intersection", "ideal_sum", "kernel_of_matrix",
           "normal_form", "submodule_membership", "syzygy_basis", "INFINITE",
           "ModuleHomomorphism", "NotWellDefinedError", "PresentedModule", "Subquotient",
           "annihilator", "cokernel", "cyclic_module", "direct_sum", "free_module",
           "ideal_module", "identity_map", "image", "is_injective", "is_isomorphism",
           "is_surjective", "is_zero_module", "k_dimension", "kernel", "make_presented",
           "minimize", "FreeResolution", "ReflexivityReport", "bidual_module", "canonical_map",
           "dual_map", "dual_module", "ext_module", "free_resolution", "hom_module",
           "is_reflexive", "lemma_composite", "lemma_composite_check", "naturality_holds",
           "Report", "Script", "format_script", "parse_script", "run", "CONCLUSION",
           "paper_example"]
