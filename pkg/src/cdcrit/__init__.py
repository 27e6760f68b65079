"""Connected-domination-critical graph families: constructions, exact solvers
and traceability certificates."""

from cdcrit._backend import BACKEND
from cdcrit.criticality import (
    check_class_B2,
    check_class_P,
    criticality_report,
    is_k_critical,
    lemma1_audit,
    lemma2_audit,
)
from cdcrit.domination import (
    Budget,
    check_set,
    connected_domination_number,
    enumerate_min_cd_sets,
    find_cd_set,
    max_leaf_number,
)
from cdcrit.families import (
    FamilyTag,
    build_B1,
    build_G1,
    build_G2,
    build_Ns,
    build_Pkl,
    build_Uk,
)
from cdcrit.graph import Graph, build_graph, cut_vertices_and_blocks, join_onto_subgraph, join_sequence
from cdcrit.hamiltonicity import (
    constructive_hamiltonian_path,
    hamiltonian_path_exact,
    verify_nontraceability_witness,
    verify_path,
    witness_search,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Budget",
    "FamilyTag",
    "Graph",
    "build_B1",
    "build_G1",
    "build_G2",
    "build_Ns",
    "build_Pkl",
    "build_Uk",
    "build_graph",
    "check_class_B2",
    "check_class_P",
    "check_set",
    "connected_domination_number",
    "constructive_hamiltonian_path",
    "criticality_report",
    "cut_vertices_and_blocks",
    "enumerate_min_cd_sets",
    "find_cd_set",
    "hamiltonian_path_exact",
    "is_k_critical",
    "join_onto_subgraph",
    "join_sequence",
    "lemma1_audit",
    "lemma2_audit",
    "max_leaf_number",
    "verify_nontraceability_witness",
    "verify_path",
    "witness_search",
]
