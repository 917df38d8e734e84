"""Exact finite-dimensional Hopf algebras, Hopf braces and their module categories."""

from .errors import (AntipodeNotInvertible, ContractViolation, DimensionMismatch, HBLError,
                     NoAntipode, NotAGroup, NotInCCClass, OrderTooLarge, ParseError,
                     PreconditionFailed, ShapeMismatch, UnitMismatch)
from .hopf import (Bialgebra, ComoduleAlgebra, DoiHopfModule, HopfAlgebra, SmashProduct,
                   adjoint_action, cc_class_check, check_adjoint_cc_iff, check_bialgebra,
                   check_comodule_algebra, check_hopf, check_module_algebra,
                   check_module_coalgebra, doi_hopf_check, dual_hopf, functor_R, functor_S,
                   smash_algebra, smash_hopf, solve_antipode)
from .hopfbrace import (HopfBrace, brace_char_equiv, brace_smash, check_hopf_brace, gamma,
                        gamma_coalgebra_morphism_check, gamma_prime, reconstruct_mu2,
                        trivial_brace)
from .linalg import (GF, K, QQ, Morphism, Space, compose, dual_pair, identity, matrix, swap,
                     tensor)
from .modules import (AcObject, BraceModule, check_brace_module, check_zhu,
                      doi_hopf_of_brace_module, functor_F, functor_G, functor_U, functor_V,
                      gamma_M, standard_modules, tensor_module)
from .skewbrace import (GroupTable, SkewBrace, check_skew_brace, enumerate_skew_braces,
                        group_algebra, linearize, semidirect_product)
from .structures import (Algebra, Coalgebra, Comodule, Module, check_algebra, check_coalgebra,
                         check_comodule, check_module, convolution, is_module_morphism,
                         tensor_algebra, tensor_coalgebra)

__version__ = "0.1.0"

__all__ = [
    "AcObject", "Algebra", "AntipodeNotInvertible", "Bialgebra", "BraceModule", "Coalgebra",
    "Comodule", "ComoduleAlgebra", "ContractViolation", "DimensionMismatch",
    "DoiHopfModule", "GF", "GroupTable", "HBLError", "HopfAlgebra", "HopfBrace", "K",
    "Module", "Morphism", "NoAntipode", "NotAGroup", "NotInCCClass", "OrderTooLarge",
    "ParseError", "PreconditionFailed", "QQ", "ShapeMismatch", "SkewBrace", "SmashProduct",
    "Space", "UnitMismatch", "adjoint_action", "brace_char_equiv", "brace_smash",
    "cc_class_check", "check_adjoint_cc_iff", "check_algebra", "check_bialgebra",
    "check_brace_module", "check_coalgebra", "check_comodule", "check_comodule_algebra",
    "check_hopf", "check_hopf_brace", "check_module", "check_module_algebra",
    "check_module_coalgebra", "check_skew_brace", "check_zhu", "compose", "convolution",
    "doi_hopf_check", "doi_hopf_of_brace_module", "dual_hopf", "dual_pair",
    "enumerate_skew_braces", "functor_F", "functor_G", "functor_R", "functor_S",
    "functor_U", "functor_V", "gamma", "gamma_M", "gamma_coalgebra_morphism_check",
    "gamma_prime", "group_algebra", "identity", "is_module_morphism", "linearize", "matrix",
    "reconstruct_mu2", "semidirect_product", "smash_algebra", "smash_hopf",
    "solve_antipode", "standard_modules", "swap", "tensor", "tensor_algebra",
    "tensor_coalgebra", "tensor_module", "trivial_brace",
]
