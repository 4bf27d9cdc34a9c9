"""planarham: exact verification of hypohamiltonian-family graph claims."""

from .graph import (
    Graph,
    GraphInputError,
    build_graph,
    delete_vertices,
    is_connected,
    is_k_connected,
)
from .graphio import (
    CertificateDocument,
    ParseError,
    input_digest,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from .hamilton import (
    CycleWitness,
    PathWitness,
    SearchBudget,
    SearchStatus,
    cycle_of_length_at_least,
    hamiltonian_cycle,
    hamiltonian_path,
)
from .planar import Embedding, FaceSizeMultiset, faces, planar_embedding
from .grinberg import (
    GrinbergCertificate,
    GrinbergPartition,
    grinberg_obstruction,
    grinberg_partition,
    grinberg_residual,
)
from .verify import (
    AvoidanceQuery,
    VerificationReport,
    longest_cycle_length,
    longest_path_length,
    path_of_length_at_least,
    verify_avoidance,
    verify_hypohamiltonian,
    verify_hypotraceable,
)
from .constructions import (
    CombineLayout,
    CombineRecipe,
    combined_deleted_path,
    cubic_pivot,
    petersen,
    thomassen_combine,
    thomassen_layout,
    wiener_araya,
)

__version__ = "0.1.0"

__all__ = [
    "AvoidanceQuery",
    "CertificateDocument",
    "CombineLayout",
    "CombineRecipe",
    "combined_deleted_path",
    "CycleWitness",
    "Embedding",
    "FaceSizeMultiset",
    "Graph",
    "GraphInputError",
    "GrinbergCertificate",
    "GrinbergPartition",
    "ParseError",
    "PathWitness",
    "SearchBudget",
    "SearchStatus",
    "VerificationReport",
    "build_graph",
    "cubic_pivot",
    "cycle_of_length_at_least",
    "delete_vertices",
    "faces",
    "grinberg_obstruction",
    "grinberg_partition",
    "grinberg_residual",
    "hamiltonian_cycle",
    "hamiltonian_path",
    "input_digest",
    "is_connected",
    "is_k_connected",
    "longest_cycle_length",
    "longest_path_length",
    "parse_edge_list",
    "parse_graph6",
    "path_of_length_at_least",
    "petersen",
    "planar_embedding",
    "thomassen_combine",
    "thomassen_layout",
    "verify_avoidance",
    "verify_hypohamiltonian",
    "verify_hypotraceable",
    "wiener_araya",
    "write_edge_list",
    "write_graph6",
]
