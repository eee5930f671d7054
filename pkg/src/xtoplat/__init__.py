"""Zariski-like topologies on finite lattices.

The package materializes the topology a subset X of a finite lattice
carries when its varieties V(a) = {x ∈ X : a <= x} are closed under
finite unions, classifies the resulting spaces against the separation
axioms between T0 and T2 (including the quarter axioms T¼, T½, T¾),
computes prime spectra of finite commutative semirings, and re-verifies
the finite-scale structure theorems exhaustively.
"""

from .errors import (
    AxiomError,
    CycleError,
    DuplicateLabelError,
    EmptyPosetError,
    EmptySpecError,
    NotALatticeError,
    NotAnIdealError,
    NotXTopError,
    RangeError,
    SubsetViolationError,
    XtoplatError,
    ZeroSizeError,
)
from .lattice import (
    EmbeddedSubset,
    FiniteLattice,
    has_complete_max_property,
    is_atomic,
    is_coatomic,
    is_distributive,
    lattice_from_poset,
    upset_lattice,
)
from .poset import (
    FinitePoset,
    antichain,
    chain,
    dual_tree,
    forest,
    poset_from_relation,
    tree,
)
from .semiring import (
    BniVerification,
    FiniteSemiring,
    SpectrumReport,
    bni,
    ideal_lattice,
    ideals,
    is_subtractive,
    is_subtractive_semiring,
    omega,
    s3,
    semiring_from_tables,
    spec_space,
    spectrum,
    verify_bni,
)
from .separation import (
    CheckResult,
    PointClassification,
    PrimeMeets,
    SeparationReport,
    SpecialSets,
    classify_points,
    components,
    cross_check,
    jacobson_and_prime_meets,
    separation_report,
    special_sets,
)
from .topology import (
    RadicalInfo,
    XTopSpace,
    build_space,
    covariety,
    from_poset,
    is_xtop_by_irreducibility,
    is_xtop_by_unions,
    radical_info,
    variety,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomError",
    "BniVerification",
    "CheckResult",
    "CycleError",
    "DuplicateLabelError",
    "EmbeddedSubset",
    "EmptyPosetError",
    "EmptySpecError",
    "FiniteLattice",
    "FinitePoset",
    "FiniteSemiring",
    "NotALatticeError",
    "NotAnIdealError",
    "NotXTopError",
    "PointClassification",
    "PrimeMeets",
    "RadicalInfo",
    "RangeError",
    "SeparationReport",
    "SpecialSets",
    "SpectrumReport",
    "SubsetViolationError",
    "XTopSpace",
    "XtoplatError",
    "ZeroSizeError",
    "antichain",
    "bni",
    "build_space",
    "chain",
    "classify_points",
    "components",
    "covariety",
    "cross_check",
    "dual_tree",
    "forest",
    "from_poset",
    "has_complete_max_property",
    "ideal_lattice",
    "ideals",
    "is_atomic",
    "is_coatomic",
    "is_distributive",
    "is_subtractive",
    "is_subtractive_semiring",
    "is_xtop_by_irreducibility",
    "is_xtop_by_unions",
    "jacobson_and_prime_meets",
    "lattice_from_poset",
    "omega",
    "poset_from_relation",
    "radical_info",
    "s3",
    "semiring_from_tables",
    "separation_report",
    "spec_space",
    "special_sets",
    "spectrum",
    "tree",
    "upset_lattice",
    "variety",
    "verify_bni",
]
