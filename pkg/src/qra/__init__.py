"""Finite model engine for distributive involutive FL-algebras and
distributive quasi relation algebras: validation, the frame duality,
exhaustive enumeration and counting, the filter-space duality at finite
scale, representation search over partially ordered equivalence
relations, and the 4-atom relation algebra subreduct census."""

from .algebra import (
    AlgebraFlags,
    DerivedOps,
    FinAlgebra,
    ValidationReport,
    algebra_iso,
    check_di,
    classify,
    commutative_to_qra,
    derived_ops,
    join_irreducibles,
    kappa,
    kappa_map,
    meet_irreducibles,
    plus_table,
    validate_dinfl,
    validate_dqra,
)
from .bundled import bundled_frame, bundled_frames, bundled_lookup
from .catalog import (
    CatalogEntry,
    CatalogVariant,
    algebra_automorphisms,
    build_catalog,
    catalog,
    catalog_lookup,
    dqra_negations,
    match_dinfl,
    match_dqra,
)
from .enumerate import (
    PosetShape,
    census_table,
    count_algebras,
    count_frames,
    enumerate_algebras,
    enumerate_posets,
    posets_with_upset_count,
)
from .errors import (
    BudgetExhausted,
    DomainError,
    InternalCheckError,
    PreconditionError,
    QraError,
    SignatureError,
    StructuralError,
)
from .filters import (
    PointedFrame,
    filter_frame,
    filter_product,
    filter_unaries,
    gen_prime_filters,
    priestley_roundtrip,
    space_algebra,
    validate_pointed_frame,
)
from .frame import (
    Frame,
    complex_algebra,
    dual_frame,
    empty_frame,
    frame_iso,
    roundtrip_algebra,
    roundtrip_frame,
    validate_dinfl_frame,
    validate_dqra_frame,
    validate_frame,
)
from .morphism import (
    AlgHom,
    FrameMap,
    enumerate_homs,
    frame_morphism_dual,
    hom_dual,
    principal_preimage_meet,
    validate_frame_morphism,
    validate_homomorphism,
)
from .order import NAMED_POSETS, Poset, all_posets
from .ra import (
    AtomStructure4,
    atom_structure,
    builtin_atom_structures,
    family_criteria,
    max_proper_qra_subreduct,
    ra_from_atoms,
    symmetric_subreduct_check,
)
from .represent import (
    ExhaustionReport,
    RepBase,
    RepresentationCertificate,
    SearchOptions,
    build_dq,
    check_complement_shift,
    embed_search,
    no_finite_rep_filter,
    one_point_base,
    representation_search,
    twist_order,
    verify_certificate,
)
from .search import Budget, EnumerationResult, SearchStats, enumerate_frames

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
