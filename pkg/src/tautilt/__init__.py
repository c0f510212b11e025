"""Workbench for support tau-tilting pairs over bound quiver algebras."""

from .algebra import Algebra, Path, QuiverPresentation, build_algebra
from .errors import TauTiltError
from .fields import QQ, PrimeField, RationalField, field_from_config
from .modules import (
    Module,
    ModuleMap,
    decompose,
    direct_sum,
    dualize,
    end_structure,
    g_vector,
    hom_basis,
    in_fac,
    is_isomorphic,
    minimal_left_approximation,
    minimal_presentation,
    projective_cover,
    standard_module,
    tau,
    transpose,
)
from .mutation import (
    ExchangeGraph,
    bongartz_completion,
    enumerate_pairs,
    mutate,
    verify_hasse,
)
from .pairs import (
    TauPair,
    check_pair,
    classify_pair,
    dagger,
    e_invariant,
    leq,
    regular_pair,
    tau_hom_vanishes,
    torsionfree_companion,
    zero_pair,
)
from .silting import (
    TwoTermComplex,
    complex_to_pair,
    hom_k,
    is_presilting,
    is_silting,
    pair_to_complex,
    reduce_complex,
    silting_leq,
    silting_mutate,
)

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "ExchangeGraph",
    "Module",
    "ModuleMap",
    "Path",
    "PrimeField",
    "QQ",
    "QuiverPresentation",
    "RationalField",
    "TauPair",
    "TauTiltError",
    "TwoTermComplex",
    "bongartz_completion",
    "build_algebra",
    "check_pair",
    "classify_pair",
    "complex_to_pair",
    "dagger",
    "decompose",
    "direct_sum",
    "dualize",
    "e_invariant",
    "end_structure",
    "enumerate_pairs",
    "field_from_config",
    "g_vector",
    "hom_basis",
    "hom_k",
    "in_fac",
    "is_isomorphic",
    "is_presilting",
    "is_silting",
    "leq",
    "minimal_left_approximation",
    "minimal_presentation",
    "mutate",
    "pair_to_complex",
    "projective_cover",
    "reduce_complex",
    "regular_pair",
    "silting_leq",
    "silting_mutate",
    "standard_module",
    "tau",
    "tau_hom_vanishes",
    "torsionfree_companion",
    "transpose",
    "verify_hasse",
    "zero_pair",
]
