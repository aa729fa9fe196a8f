"""Z-Sigil attack laboratory: cost models, oracles and search experiments."""

from zsigil.attack.cost_model import (
    CosmologicalMargin,
    GroverEstimate,
    SearchSpaceModel,
    classical_mean_queries,
    classical_quantum_ratio,
    cosmological_margin,
    grover_queries,
    log10_pow2,
)
from zsigil.attack.exhaustive import (
    DiscretizedKeySpace,
    PlantedInstance,
    SearchResult,
    TrialStats,
    count_marked,
    exhaustive_search,
    plant_instance,
    run_trials,
)
from zsigil.attack.oracle import BatchOracle, PublicBlock, marking_oracle
from zsigil.attack.ratio import RatioAttackReport, ratio_attack
from zsigil.attack.serial import (
    SerialReport,
    dependency_graph,
    derangement,
    serial_depth,
    verify_serial_dependency,
)

__all__ = [
    "SearchSpaceModel",
    "GroverEstimate",
    "CosmologicalMargin",
    "grover_queries",
    "log10_pow2",
    "cosmological_margin",
    "classical_mean_queries",
    "classical_quantum_ratio",
    "PublicBlock",
    "marking_oracle",
    "BatchOracle",
    "DiscretizedKeySpace",
    "PlantedInstance",
    "SearchResult",
    "TrialStats",
    "plant_instance",
    "exhaustive_search",
    "count_marked",
    "run_trials",
    "dependency_graph",
    "serial_depth",
    "derangement",
    "SerialReport",
    "verify_serial_dependency",
    "RatioAttackReport",
    "ratio_attack",
]
