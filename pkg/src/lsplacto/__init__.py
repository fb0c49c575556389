"""Littelmann path crystals and convergent column presentations of plactic monoids."""

from .crystal import (
    CrystalGraph,
    crystal_to_dot,
    crystal_to_json,
    dominant_monomial,
    equivalent,
    generate_crystal,
    is_standard,
    ls_paths,
)
from .errors import (
    BudgetExceeded,
    FactorBoundaryViolation,
    IndexOutOfRange,
    IntegralityViolation,
    LetterOutOfRange,
    LsplactoError,
    NonDominantWeight,
    NonHighestSeed,
    UnknownGenerator,
    UnsupportedType,
)
from .paths import (
    Path,
    canonical_from_segments,
    concat,
    equals,
    h_function,
    path_from_json,
    path_to_json,
    straight_path,
    trivial_path,
    weight_of,
)
from .plactic import (
    GeneratorTable,
    RewriteSystem,
    Rule,
    audit_local_confluence,
    audit_report,
    audit_termination,
    build_generators,
    build_rules,
    normalize,
    rules_to_json,
    standard_form,
    word_to_monomial,
)
from .rootops import (
    Monomial,
    apply_e,
    apply_f,
    apply_op_mono,
    empty_monomial,
    is_highest,
    is_ls_path,
    lower_by_log,
    monomial,
    raise_to_highest,
)
from .rootsystem import (
    RootSystem,
    build_root_system,
    is_dominant,
    pairing,
    precedes,
    reflect,
    weyl_dim,
)
from .typea import box_to_monomial, cross_check, knuth_equiv

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CrystalGraph",
    "FactorBoundaryViolation",
    "GeneratorTable",
    "IndexOutOfRange",
    "IntegralityViolation",
    "LetterOutOfRange",
    "LsplactoError",
    "Monomial",
    "NonDominantWeight",
    "NonHighestSeed",
    "Path",
    "RewriteSystem",
    "RootSystem",
    "Rule",
    "UnknownGenerator",
    "UnsupportedType",
    "apply_e",
    "apply_f",
    "apply_op_mono",
    "audit_local_confluence",
    "audit_report",
    "audit_termination",
    "box_to_monomial",
    "build_generators",
    "build_root_system",
    "build_rules",
    "canonical_from_segments",
    "concat",
    "cross_check",
    "crystal_to_dot",
    "crystal_to_json",
    "dominant_monomial",
    "empty_monomial",
    "equals",
    "equivalent",
    "generate_crystal",
    "h_function",
    "is_dominant",
    "is_highest",
    "is_ls_path",
    "is_standard",
    "knuth_equiv",
    "lower_by_log",
    "ls_paths",
    "monomial",
    "normalize",
    "pairing",
    "path_from_json",
    "path_to_json",
    "precedes",
    "raise_to_highest",
    "reflect",
    "rules_to_json",
    "standard_form",
    "straight_path",
    "trivial_path",
    "weight_of",
    "weyl_dim",
    "word_to_monomial",
]
