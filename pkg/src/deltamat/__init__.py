"""Workbench for delta-matroids: construction, validation, rank functions,
enumerative invariants, enveloping matroids, and log-concavity checks, all in
exact arithmetic with brute-force oracles at desk scale."""

from .deltamatroid import DeltaMatroid, RankTable, ValidationReport
from .ground import (
    AdmissibleSet,
    GuardLimitError,
    SignedPermutation,
    combine,
    enumerate_admissible,
)
from .invariants import (
    ActivityRecord,
    ComplexReport,
    FVector,
    activity,
    activity_expansion,
    activity_zero_complex,
    independence_fvector,
    interlace,
    pure_o_inequalities,
    upoly,
)
from .lorentzian import (
    InertiaTriple,
    LorentzianReport,
    conjecture_check,
    efls_gen_poly,
    hessian_inertia,
    indep_gen_poly,
    is_lorentzian,
    mconvex_support,
    two_var_ulc_check,
)
from .matroid import (
    Gf2SymMatrix,
    Matroid,
    dm_from_gf2,
    dm_from_matroid,
    enveloping_check,
    enveloping_search,
    env_project,
    example15_rank,
    example15_upoly,
    rank_generating,
    upper_matroid,
    validate_matroid,
)
from .poly import MultiPoly
from .rankfn import (
    AxiomReport,
    check_g_axioms,
    check_h_axioms,
    delta_from_rank,
    greedy_check,
    polytope_membership,
)

__all__ = [name for name in dir() if not name.startswith("_")]
