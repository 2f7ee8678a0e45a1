"""Discrete-time quantum walks on bounded graphs: evolution, entanglement and periodicity."""

__version__ = "0.1.0"

from .coin import assign_per_vertex, assign_uniform, hadamard_biased
from .entanglement import meyer_wallach_single, position_marginal, series, shannon_entropy
from .evolution import GlobalUnitary, build_unitary, evolve_series, localized_state, step
from .graph import Graph, is_physical, make_custom, make_line
from .multiwalker import evolve_two, meyer_wallach_two, post_select, two_photon_input
from .optical import circuit_unitary, export_circuit, to_circuit
from .spectral import analyze, classify, eigen_spectrum, predict_period, rationalize, revival_time

__all__ = [
    "Graph", "GlobalUnitary", "analyze", "assign_per_vertex", "assign_uniform", "build_unitary",
    "circuit_unitary", "classify", "eigen_spectrum", "evolve_series", "evolve_two", "export_circuit",
    "hadamard_biased", "is_physical", "localized_state", "make_custom", "make_line",
    "meyer_wallach_single", "meyer_wallach_two", "position_marginal", "post_select",
    "predict_period", "rationalize", "revival_time", "series", "shannon_entropy", "step",
    "to_circuit", "two_photon_input",
]
