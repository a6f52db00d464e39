"""clusterglue: exact graded cluster algebra seeds, gluing, and Segre products."""

from .explore import (
    CountsUndefinedError,
    ExchangeGraph,
    cluster_key,
    enumerate_graph,
    verify_correspondence,
    verify_counts,
)
from .gluing import (
    GluedSeed,
    GluePair,
    GlueError,
    SegreTensor,
    check_commutativity,
    glue,
    make_glue_pair,
    naive_segre_map,
    segre_map,
    segre_membership,
    surjectivity_witness,
    verify_tensor_map,
)
from .laurent import (
    LaurentPoly,
    Monomial,
    NotDivisibleError,
    NotHomogeneousError,
    Universe,
    UniverseMismatchError,
    Var,
)
from .reports import Report, Witness
from .seedio import SeedDocument, parse_seed, render_seed, seed_state
from .seeds import (
    ExchangeMatrix,
    InternalInconsistencyError,
    MutationError,
    Seed,
    SeedError,
    apply_sequence,
    initial_seed,
    mutate_seed,
    validate_seed,
)

__all__ = [
    "CountsUndefinedError",
    "ExchangeGraph",
    "ExchangeMatrix",
    "GluePair",
    "GluedSeed",
    "GlueError",
    "InternalInconsistencyError",
    "LaurentPoly",
    "Monomial",
    "MutationError",
    "NotDivisibleError",
    "NotHomogeneousError",
    "Report",
    "SeedDocument",
    "SegreTensor",
    "Seed",
    "SeedError",
    "Universe",
    "UniverseMismatchError",
    "Var",
    "Witness",
    "apply_sequence",
    "check_commutativity",
    "cluster_key",
    "enumerate_graph",
    "glue",
    "initial_seed",
    "make_glue_pair",
    "mutate_seed",
    "naive_segre_map",
    "parse_seed",
    "render_seed",
    "seed_state",
    "segre_map",
    "segre_membership",
    "surjectivity_witness",
    "validate_seed",
    "verify_correspondence",
    "verify_counts",
    "verify_tensor_map",
]

__version__ = "0.1.0"
