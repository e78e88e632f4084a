from .convergence import converge_check
from .nielsen import MOVES, nielsen_move, random_automorphism, sample_automorphisms
from .rauzy import rauzy_export, rauzy_graph, to_dot
from .repro import (
    COMMUTATOR,
    approximants,
    repro_fixedpoint,
    repro_limitset,
    repro_notdense,
    two_ended_spec,
)

__all__ = [
    # Sampling
    "MOVES",
    "nielsen_move",
    "random_automorphism",
    "sample_automorphisms",
    # Rauzy graphs
    "rauzy_export",
    "rauzy_graph",
    "to_dot",
    # Reproductions
    "COMMUTATOR",
    "approximants",
    "converge_check",
    "repro_fixedpoint",
    "repro_limitset",
    "repro_notdense",
    "two_ended_spec",
]
