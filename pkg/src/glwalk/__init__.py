"""Quantum state transfer on graphs under generalized-Laplacian walks."""

from .bounds import ThresholdInput, ThresholdResult, k_threshold_two_class, q_threshold, readout_time_bound
from .cospectral import (
    INFINITE,
    CospectralityResult,
    GroupSign,
    SignPattern,
    closed_walk_counts,
    cospectrality,
    find_involution_pairing,
    localization_mass,
    sign_pattern,
    verify_involution,
)
from .dynamics import (
    FidelityCurve,
    GridSearch,
    PeakResult,
    TwoLevelSearch,
    amplitude_series,
    evolution_amplitude,
    evolution_operator,
    fidelity_curve,
    peak_fidelity,
    transfer_probability,
    two_level_candidate_time,
)
from .errors import (
    ConvergenceError,
    DegenerateGapError,
    DegreeStructureError,
    EdgeListError,
    GlwalkError,
    InvolutionSearchLimitError,
    WalkCountOverflowError,
)
from .graphs import Graph, complete_bipartite, cycle_graph, from_edge_list, path_graph, to_edge_list
from .hamiltonians import (
    Adjacency,
    Generalized,
    HamiltonianSpec,
    Laplacian,
    LoopPerturbed,
    Model,
    SignlessLaplacian,
    hamiltonian_matrix,
    model_name,
    parse_model,
    reduced_spec,
)
from .spectral import EigenDecomposition, SpectralProjector, eigendecompose, spectral_projectors

__version__ = "0.1.0"

__all__ = [
    "Adjacency",
    "ConvergenceError",
    "CospectralityResult",
    "DegenerateGapError",
    "DegreeStructureError",
    "EdgeListError",
    "EigenDecomposition",
    "FidelityCurve",
    "Generalized",
    "GlwalkError",
    "Graph",
    "GridSearch",
    "GroupSign",
    "HamiltonianSpec",
    "INFINITE",
    "InvolutionSearchLimitError",
    "Laplacian",
    "LoopPerturbed",
    "Model",
    "PeakResult",
    "SignPattern",
    "SignlessLaplacian",
    "SpectralProjector",
    "ThresholdInput",
    "ThresholdResult",
    "TwoLevelSearch",
    "WalkCountOverflowError",
    "amplitude_series",
    "closed_walk_counts",
    "complete_bipartite",
    "cospectrality",
    "cycle_graph",
    "eigendecompose",
    "evolution_amplitude",
    "evolution_operator",
    "fidelity_curve",
    "find_involution_pairing",
    "from_edge_list",
    "hamiltonian_matrix",
    "k_threshold_two_class",
    "localization_mass",
    "model_name",
    "parse_model",
    "path_graph",
    "peak_fidelity",
    "q_threshold",
    "readout_time_bound",
    "reduced_spec",
    "sign_pattern",
    "spectral_projectors",
    "to_edge_list",
    "transfer_probability",
    "two_level_candidate_time",
    "verify_involution",
]
