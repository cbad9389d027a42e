"""Spectra, switching classes, and extremal verification for signed bipartite graphs."""

from .backend import DEFAULT_BACKEND, HAVE_NUMBA, resolve_backend, worker_count
from .errors import (
    BadInput,
    BadParam,
    BadPartition,
    BadParts,
    BadVertex,
    DuplicateEdge,
    FormatError,
    Incomparable,
    NotBipartite,
    NotSymmetric,
    NumericDomain,
    SelfLoop,
    ShiftNoOp,
    SignedSpectraError,
    TooLarge,
)
from .extremal import (
    CompletionResult,
    ExtremalReport,
    TreePlacement,
    catalog_min_class,
    connected_bipartite_underlying,
    enumerate_bipartite_extrema,
    monotone_completion,
    shift_to_chain,
    shift_toward,
    signature_classes,
    tree_placements,
    verify_balance_characterization,
    verify_complete_bipartite_max,
    verify_kds,
    verify_minus_edge,
    verify_monotone_completion,
    verify_shift_monotone,
    verify_tree_extremal,
)
from .graphs import (
    CATALOG_NAMES,
    NegativeSubgraphStats,
    SignedBipartiteGraph,
    SignedGraph,
    catalog_underlying,
    complete_bipartite,
    double_star,
    from_edge_list,
    gstar,
    is_chain_graph,
    is_complete_bipartite,
    negative_stats,
)
from .sgio import as_bipartite, read_file, read_text, to_dot, write_file, write_text
from .spectra import (
    CubicClosedForm,
    FamilySpectrum,
    SpectralSummary,
    adjacency,
    charpoly_faddeev_leverrier,
    double_star_charpoly,
    double_star_quotient,
    eigenvalues,
    family_spectrum,
    gstar_block_charpoly,
    gstar_bound,
    gstar_eigenvector,
    gstar_minus_edge,
    minus_edge_charpoly,
    minus_edge_partition,
    poly_real_roots,
    quotient_matrix,
    spectral_radius,
    spectral_summary,
    square_block_B,
)
from .switching import (
    SwitchingClass,
    balance_structural,
    canonical_gauge,
    is_balanced,
    is_sign_symmetric,
    min_negative_edges,
    negate,
    switch,
    switching_equivalent,
    switching_isomorphic,
)

__version__ = "0.1.0"
