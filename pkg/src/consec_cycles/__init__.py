"""Exact cycle-length spectra and consecutive-cycle verification on small graphs.

The library side: an immutable bitset graph type with a graph6 codec
and named generators; connectivity structure (bipartitions with odd
cycle witnesses, blocks, exact vertex connectivity); exact cycle
spectra with consecutive-run statistics; path-length families between
vertex pairs with the consecutive/admissible merge; statement checkers
and constructive extractors for the consecutive-cycle guarantees; and a
deterministic batch scanner.  The ``consec-cycles`` CLI drives all of
it over graph6 catalogs.
"""

from .connectivity import (
    Bipartition,
    BlockCutTree,
    ConnectivityReport,
    bipartition_or_odd_cycle,
    block_cut_tree,
    components,
    is_2_connected,
    is_3_connected,
    is_bipartite,
    is_connected,
    is_k_connected,
    is_nonseparating,
    two_cut_witness,
    vertex_connectivity,
)
from .cycles import (
    CycleSpectrum,
    Dichotomy,
    DichotomyVerdict,
    OddCycleStructure,
    RunStats,
    classify_dichotomy,
    contains_triangle,
    cycle_spectrum,
    run_stats,
    shortest_nonsep_induced_odd_cycle,
    validate_cycle,
)
from .errors import (
    BadParams,
    BudgetExceeded,
    Cancelled,
    ConstructionFailed,
    Disconnected,
    EmptyGraph,
    GraphLibError,
    HypothesisFailed,
    MalformedRecord,
    NotAdmissible,
    NotConsecutive,
    NotShortest,
    NotTwoConnected,
    OutOfRange,
    OverlapViolation,
    TooLarge,
    UnsupportedVariant,
    WitnessNotFound,
)
from .graph import (
    DegreeProfile,
    Graph,
    all_labeled,
    all_labeled_min_degree,
    complete,
    complete_bipartite,
    complete_minus_matching,
    cycle,
    cycle_blowup,
    decode_graph6,
    degree_profile,
    encode_graph6,
    generate,
    induced_subgraph,
    petersen,
)
from .paths import (
    FamilyKind,
    MergeResult,
    ParityPair,
    PathFamily,
    classify_lengths,
    make_family,
    max_admissible_family,
    merge_families,
    merged_length_run,
    odd_even_paths,
    validate_path,
    xy_path_lengths,
)
from .theorems import (
    ExtractionTrace,
    GraphFacts,
    ScanEntry,
    ScanReport,
    TheoremId,
    Verdict,
    check,
    extract_three_connected,
    extract_two_cut,
    find_quasi_diagonal_index,
    scan_catalog,
)

__version__ = "0.1.0"
