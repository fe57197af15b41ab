"""Attribute reduction of covering decision systems via related families.

Build a system from named coverings and a decision partition, compute every
attribute reduct through the related-family route (admissible blocks ->
related sets -> monotone CNF -> minimal DNF), and maintain the reduct set
incrementally as coverings are added or deleted -- for consistent and
inconsistent systems alike.
"""

from .approximation import (
    Consistency,
    MinimalDescriptionMap,
    RegionReport,
    classify_consistency,
    minimal_descriptions,
    positive_region,
    regions,
    third_lower,
    third_upper,
    union_reducible_blocks,
)
from .boolformula import (
    MonotoneFormula,
    absorb,
    evaluate,
    filter_non_extensions,
    mask_to_names,
    minimal_dnf,
    names_to_mask,
)
from .engine import (
    AddCovering,
    DeleteCovering,
    ReductSet,
    ReductionCache,
    add_covering,
    add_delta,
    batch_reducts,
    delete_covering,
    delete_delta,
    oracle_reducts,
    update_related_add,
    update_related_delete,
)
from .errors import (
    CovreductError,
    EngineError,
    ParseError,
    StaleCache,
    TermBlowup,
    ValidationError,
)
from .io import (
    Categorical,
    CoverizationSpec,
    Tolerance,
    coverize,
    load_cache,
    load_system,
    serialize_cache,
    serialize_system,
)
from .model import (
    Covering,
    CoveringDecisionSystem,
    DecisionPartition,
    build_system,
    fingerprint,
    make_covering,
    same_system,
    union_of_coverings,
)
from .related import (
    AdmissibleBlocks,
    RelatedFamily,
    admissible_blocks,
    clause_provenance,
    related_function,
    related_sets,
)

__version__ = "0.1.0"

__all__ = [
    "AddCovering",
    "AdmissibleBlocks",
    "Categorical",
    "Consistency",
    "Covering",
    "CoveringDecisionSystem",
    "CoverizationSpec",
    "CovreductError",
    "DecisionPartition",
    "DeleteCovering",
    "EngineError",
    "MinimalDescriptionMap",
    "MonotoneFormula",
    "ParseError",
    "ReductSet",
    "ReductionCache",
    "RegionReport",
    "RelatedFamily",
    "StaleCache",
    "TermBlowup",
    "Tolerance",
    "ValidationError",
    "absorb",
    "add_covering",
    "add_delta",
    "admissible_blocks",
    "batch_reducts",
    "build_system",
    "classify_consistency",
    "clause_provenance",
    "coverize",
    "delete_covering",
    "delete_delta",
    "evaluate",
    "filter_non_extensions",
    "fingerprint",
    "load_cache",
    "load_system",
    "make_covering",
    "mask_to_names",
    "minimal_descriptions",
    "minimal_dnf",
    "names_to_mask",
    "oracle_reducts",
    "positive_region",
    "regions",
    "related_function",
    "related_sets",
    "same_system",
    "serialize_cache",
    "serialize_system",
    "third_lower",
    "third_upper",
    "union_of_coverings",
    "union_reducible_blocks",
    "update_related_add",
    "update_related_delete",
]
