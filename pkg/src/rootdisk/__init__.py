"""Zero-containment disks for complex polynomials from Eneström–Kakeya type theorems."""

from .core import (
    Disk,
    HypothesisError,
    Polynomial,
    RadiusAnomaly,
    RootDiskError,
    cauchy_bound,
    enclosing_radius,
    eval_poly,
    multiply_enestrom_factors,
)
from .wedge import Wedge, fit_wedge, lemma21_rhs
from .hypotheses import (
    ConditionSeq,
    HypothesisReport,
    SplitIndices,
    Theorem,
    check,
    check_ek,
    check_govil_rahman,
    check_monotone_t,
    check_thm17,
    check_thm110,
    condition_seq,
    split_index,
)
from .bounds import (
    BoundReport,
    best_bound,
    bound,
    bound_aziz_real,
    bound_aziz_t,
    bound_cor19,
    bound_cor112,
    bound_ek,
    bound_govil_rahman,
    bound_rsm_complex,
    bound_rsm_parts,
    bound_thm17,
    bound_thm110,
)
from .oracle import RootSet, roots, tightness, verify_containment
from .genpoly import GenSpec, gen_ek_instance, gen_thm17_instance, gen_thm110_instance
from .search import SearchConfig, SearchResult, feasible_region_sample, optimize_params

__version__ = "0.1.0"
