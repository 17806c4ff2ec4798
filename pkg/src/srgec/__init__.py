"""srgec: strongly regular graphs, their spectra, and their chromatic index.

Construct the classical SRG families, compute exact spectra and the
spectral bound predicates, find 1-factorizations (randomized heuristic and
constructive routes), decide small chromatic indices exactly, and emit
verifiable class-1/class-2 certificates.
"""

from ._kernels import BACKEND
from .certificates import (
    Certificate,
    ExactAttestation,
    read_certificate,
    verify_certificate,
    write_certificate,
)
from .factorize import (
    BudgetExceeded,
    Colorable,
    EdgeColoring,
    Exhausted,
    Factorization,
    NotColorable,
    SearchConfig,
    bipartite_regular_factorize,
    compose_half_factorizations,
    exact_chromatic_index,
    factorize_clique_coclique_split,
    heuristic_factorize,
    hoffman_complement_factorize,
    hoffman_factorize,
    round_robin,
    spread_to_hoffman,
    verify_factorization,
)
from .families import (
    Design,
    LatinSquareSet,
    VertexPartition,
    block_graph,
    bose_sts,
    complete_multipartite,
    cyclic_latin_square,
    disjoint_cliques,
    latin_square_graph,
    lattice,
    mols4,
    mols_prime,
    pair_design,
    row_spread,
    triangular,
)
from .graph import (
    Graph,
    SrgParams,
    build_graph,
    complement,
    from_graph6,
    is_connected,
    is_regular,
    recognize_srg,
    subgraph_on,
    to_graph6,
)
from .matching import (
    Matching,
    disjoint_pm_greedy,
    has_perfect_matching,
    maximum_matching,
    random_perfect_matching,
    tutte_berge_witness,
)
from .pipeline import Inconclusive, batch_run, classify
from .rng import RngState, derive_seed
from .spectra import (
    Spectrum,
    bound_report,
    block_graph_params,
    claw_bound_holds,
    complement_params,
    eigenvalue_matching_bound,
    feasibility_check,
    ferber_jain_holds,
    high_degree_threshold,
    hoffman_coclique_bound,
    latin_square_params,
    mu_bound_holds,
    srg_spectrum,
    steiner_complement_threshold,
    triangular_params,
)

__version__ = "0.1.0"
