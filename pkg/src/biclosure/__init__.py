"""Finite posets, their dual spaces of two-valued isotone maps, and the
closure operators those spaces induce.

The package builds the dual space of a poset, restricts it to
subspaces, derives the two canonical closures on a subspace, and uses
the closed-open family to represent the original order. Orthoposets,
distributive lattices, and Boolean lattices each get a sharper form of
the same construction, and a check suite verifies every law on
concrete instances.
"""

from .closure import (
    EAGER_CARRIER_LIMIT,
    ClosureOperator,
    closed_open_family,
    clopen_sets,
    closure_from_base,
    closures_equal,
    induced_closures,
)
from .dualspace import (
    DUAL_POINT_CAP,
    IdealFamily,
    Subspace,
    dual_space,
    filter_of,
    filters_wrt,
    generated_filter,
    generated_ideal,
    ideal_of,
    ideals_wrt,
    is_full,
    is_separating,
    lattice_dual,
    orthodual_space,
    remove_constants,
)
from .errors import (
    BiclosureError,
    BoundExceeded,
    CarrierMismatch,
    CycleError,
    InvalidOrthoMap,
    MemberOutOfRange,
    NotALattice,
    NotBoolean,
    NotBounded,
    NotDistributive,
    NotSelfdual,
    UnknownLabel,
)
from .poset import (
    MAX_CATALOG_N,
    OrthoMap,
    Poset,
    SubsetFamily,
    antichain,
    are_isomorphic,
    boolean_algebra,
    build_poset,
    chain,
    enumerate_posets,
    find_orthocomplementations,
    poset_from_json,
    poset_of_family,
    poset_to_dot,
    poset_to_json,
)
from .represent import (
    SWEEP_CAP,
    CheckResult,
    ClosureSpace,
    RepresentationReport,
    StoneSpace,
    SuiteReport,
    check_poset,
    induced_orthocomplementation,
    maximal_subspaces,
    ortho_correspondence,
    represent,
    represent_distributive,
    represent_orthoposet,
    representation_report,
    selfdual_subspaces,
    stone,
    sweep_catalog,
    up_image,
)

__version__ = "0.1.0"

__all__ = [
    "BiclosureError",
    "BoundExceeded",
    "CarrierMismatch",
    "CheckResult",
    "ClosureOperator",
    "ClosureSpace",
    "CycleError",
    "DUAL_POINT_CAP",
    "EAGER_CARRIER_LIMIT",
    "IdealFamily",
    "InvalidOrthoMap",
    "MAX_CATALOG_N",
    "MemberOutOfRange",
    "NotALattice",
    "NotBoolean",
    "NotBounded",
    "NotDistributive",
    "NotSelfdual",
    "OrthoMap",
    "Poset",
    "RepresentationReport",
    "StoneSpace",
    "Subspace",
    "SubsetFamily",
    "SuiteReport",
    "SWEEP_CAP",
    "UnknownLabel",
    "antichain",
    "are_isomorphic",
    "boolean_algebra",
    "build_poset",
    "chain",
    "check_poset",
    "clopen_sets",
    "closed_open_family",
    "closure_from_base",
    "closures_equal",
    "dual_space",
    "enumerate_posets",
    "filter_of",
    "filters_wrt",
    "find_orthocomplementations",
    "generated_filter",
    "generated_ideal",
    "ideal_of",
    "ideals_wrt",
    "induced_closures",
    "induced_orthocomplementation",
    "is_full",
    "is_separating",
    "lattice_dual",
    "maximal_subspaces",
    "ortho_correspondence",
    "orthodual_space",
    "poset_from_json",
    "poset_of_family",
    "poset_to_dot",
    "poset_to_json",
    "remove_constants",
    "represent",
    "represent_distributive",
    "represent_orthoposet",
    "representation_report",
    "selfdual_subspaces",
    "stone",
    "sweep_catalog",
    "up_image",
]
