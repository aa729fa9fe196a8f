"""
Exhaustive Key Search
~~~~~~~~~~~~~~~~~~~~~

Desk-scale classical search over a discretized key space with a planted
key. Candidates are scanned in a seed-randomized order, so the position
of the planted key is uniform and the expected query count is (S + 1) / 2.

Trials are independent: each one owns a generator spawned from a single
``numpy.random.SeedSequence`` and runs on a thread pool; statistics are
merged in trial order once every trial has finished.
"""

from __future__ import annotations

import logging
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from zsigil.analytic.chain import derive_chain
from zsigil.attack.cost_model import (
    SearchSpaceModel,
    classical_mean_queries,
    classical_quantum_ratio,
    grover_queries,
)
from zsigil.attack.oracle import BatchOracle, PublicBlock
from zsigil.config.schema import SigilConfig
from zsigil.exceptions import AttackError, InfeasibleSearchError, SearchFailureError
from zsigil.geometry.fiber import FiberOperation, derive_operation, forward_key
from zsigil.geometry.manifold import TangentVector, TorusModel, sample_point
from zsigil.observability.metrics import MetricsCollector
from zsigil.scheme.cipher import encrypt_block

__all__ = [
    "DiscretizedKeySpace",
    "PlantedInstance",
    "SearchResult",
    "TrialStats",
    "plant_instance",
    "exhaustive_search",
    "count_marked",
    "run_trials",
]

logger = logging.getLogger(__name__)

DEFAULT_MAX_SIZE = 2**24

# Box the candidate levels are drawn from, per component.
_LEVEL_RANGE = (0.1, 10.0)


@dataclass(frozen=True, eq=False)
class DiscretizedKeySpace:
    """
    A product grid of q candidate values in each of r components.

    Attributes:
        grid: (r, q) array; row j holds the candidate values of component j.
    """

    grid: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.grid, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[1] < 2 or arr.shape[0] < 1:
            raise AttackError(f"Grid must have shape (r, q >= 2), got {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "grid", arr)

    @property
    def r(self) -> int:
        return self.grid.shape[0]

    @property
    def levels(self) -> int:
        return self.grid.shape[1]

    @property
    def size(self) -> int:
        return self.levels**self.r

    def model(self) -> SearchSpaceModel:
        return SearchSpaceModel.from_grid(self.levels, self.r)

    def digits(self, indices: np.ndarray) -> np.ndarray:
        """Mixed-radix digits (B, r) of flat candidate indices."""
        idx = np.asarray(indices, dtype=np.int64)
        place = self.levels ** np.arange(self.r, dtype=np.int64)
        return (idx[:, None] // place) % self.levels

    def candidates(self, indices: np.ndarray) -> np.ndarray:
        """Candidate component values (B, r) of flat indices."""
        return self.grid[np.arange(self.r), self.digits(indices)]

    def candidate(self, index: int) -> np.ndarray:
        return self.candidates(np.array([index]))[0]


@dataclass(frozen=True, eq=False)
class PlantedInstance:
    """A key space, the hidden operation and a block whose key is on the grid."""

    space: DiscretizedKeySpace
    operation: FiberOperation
    block: PublicBlock
    planted_index: int
    plaintext: int

    @property
    def planted_key(self) -> np.ndarray:
        return self.space.candidate(self.planted_index)


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one search: the marked candidate, its index and queries used."""

    index: int
    key: tuple[float, ...]
    queries: int


@dataclass(frozen=True)
class TrialStats:
    """Aggregate of independent planted-key trials."""

    size: int
    trials: int
    queries: tuple[int, ...]
    mean_queries: float
    stddev: float
    grover_estimate: int
    ratio: float

    @property
    def expected_mean(self) -> float:
        return classical_mean_queries(self.size)

    def as_row(self) -> dict[str, float | int]:
        """Columns of the exhaustive-search CSV report."""
        return {
            "S": self.size,
            "trials": self.trials,
            "mean_queries": self.mean_queries,
            "stddev": self.stddev,
            "grover_estimate": self.grover_estimate,
            "ratio": self.ratio,
        }


def _check_dim(dim: int) -> None:
    if dim < 2 or dim % 2:
        raise AttackError(
            f"Grid dimension must be even and >= 2, got {dim}: "
            "each planted key lives in the tangent fiber of a torus point",
            details={"dim": dim},
        )


def _check_size(size: int, max_size: int) -> None:
    if size > max_size:
        raise InfeasibleSearchError(
            f"Search space of {size} candidates exceeds "
            f"the desk-scale limit {max_size}",
            details={"size": size, "max_size": max_size},
        )


def plant_instance(
    levels: int,
    dim: int,
    rng: np.random.Generator,
    config: SigilConfig | None = None,
) -> PlantedInstance:
    """
    Build a block whose private key is a point of a random q^r grid.

    The grid levels are drawn from a fixed box, one grid point is planted
    as d, and the block is encrypted with a real chain factor.
    """
    _check_dim(dim)
    config = config or SigilConfig()
    model = TorusModel.unit(dim)
    p = sample_point(model, rng)
    op = derive_operation(model, p, rng.bytes(32), config.fiber)

    grid = np.sort(rng.uniform(*_LEVEL_RANGE, size=(dim, levels)), axis=1)
    space = DiscretizedKeySpace(grid)
    planted = int(rng.integers(space.size))
    d = TangentVector(p, space.candidate(planted))
    e = forward_key(op, d).components

    chain_value = derive_chain(rng.bytes(32), 1, config.analytic)[0].value
    m = int(rng.integers(1, 2**16 + 1))
    c = encrypt_block(m, chain_value, e)
    return PlantedInstance(
        space=space,
        operation=op,
        block=PublicBlock(public_key=e, chain_value=chain_value, ciphertext=c),
        planted_index=planted,
        plaintext=m,
    )


def exhaustive_search(
    space: DiscretizedKeySpace,
    oracle: BatchOracle,
    rng: np.random.Generator,
    chunk_size: int = 4096,
    max_size: int = DEFAULT_MAX_SIZE,
) -> SearchResult:
    """
    Scan the grid in a random order until the oracle marks a candidate.

    Raises:
        InfeasibleSearchError: If the space is larger than ``max_size``.
        SearchFailureError: If no candidate is marked.
    """
    _check_size(space.size, max_size)
    order = rng.permutation(space.size)
    for start in range(0, space.size, chunk_size):
        batch = order[start : start + chunk_size]
        marked = oracle(space.candidates(batch))
        hits = np.flatnonzero(marked)
        if hits.size:
            first = int(hits[0])
            index = int(batch[first])
            return SearchResult(
                index=index,
                key=tuple(float(x) for x in space.candidate(index)),
                queries=start + first + 1,
            )
    raise SearchFailureError(
        f"No marked candidate among {space.size}",
        details={"queries": space.size},
    )


def count_marked(
    space: DiscretizedKeySpace,
    oracle: BatchOracle,
    chunk_size: int = 4096,
    max_size: int = DEFAULT_MAX_SIZE,
) -> int:
    """Number of grid points the oracle marks; 1 unless there are near-collisions."""
    _check_size(space.size, max_size)
    total = 0
    for start in range(0, space.size, chunk_size):
        idx = np.arange(start, min(start + chunk_size, space.size), dtype=np.int64)
        total += int(np.count_nonzero(oracle(space.candidates(idx))))
    return total


def _run_trial(
    levels: int,
    dim: int,
    seed: np.random.SeedSequence,
    config: SigilConfig,
    metrics: MetricsCollector | None,
) -> int:
    rng = np.random.default_rng(seed)
    instance = plant_instance(levels, dim, rng, config)
    acfg = config.attack
    oracle = BatchOracle(
        instance.block,
        instance.operation,
        tolerance=acfg.oracle_tolerance,
        rounding_tolerance=config.scheme.rounding_tolerance,
        metrics=metrics,
    )
    result = exhaustive_search(
        instance.space,
        oracle,
        rng,
        chunk_size=acfg.chunk_size,
        max_size=acfg.max_exhaustive_size,
    )
    if result.index != instance.planted_index:
        logger.warning(
            "Search marked index %d before the planted %d",
            result.index,
            instance.planted_index,
        )
    if metrics is not None:
        metrics.increment("search_trials")
    return result.queries


def run_trials(
    levels: int,
    dim: int,
    trials: int,
    seed: int | None = None,
    config: SigilConfig | None = None,
    metrics: MetricsCollector | None = None,
) -> TrialStats:
    """
    Run independent planted-key searches and aggregate their query counts.

    Args:
        levels: Grid levels q per component.
        dim: Number of components r (even, since keys live on a torus).
        trials: Number of independent trials.
        seed: Root seed; results are identical for equal seeds regardless
            of thread scheduling.
        config: Settings; ``attack.workers`` sizes the thread pool.
        metrics: Optional collector for oracle queries and trials.

    Raises:
        InfeasibleSearchError: If q^r exceeds the desk-scale limit.
        AttackError: If ``dim`` is odd or ``trials`` < 1.
    """
    if trials < 1:
        raise AttackError(f"Need at least one trial, got {trials}")
    _check_dim(dim)
    config = config or SigilConfig()
    size = levels**dim
    _check_size(size, config.attack.max_exhaustive_size)

    children = np.random.SeedSequence(seed).spawn(trials)
    with ThreadPoolExecutor(max_workers=config.attack.workers) as pool:
        queries = list(
            pool.map(
                lambda child: _run_trial(levels, dim, child, config, metrics),
                children,
            )
        )

    estimate = grover_queries(
        SearchSpaceModel.from_size(size), config.attack.gate_degree
    )
    stats = TrialStats(
        size=size,
        trials=trials,
        queries=tuple(queries),
        mean_queries=statistics.fmean(queries),
        stddev=statistics.pstdev(queries),
        grover_estimate=estimate.queries,
        ratio=classical_quantum_ratio(size),
    )
    logger.info(
        "Exhaustive search S=%d: %d trials, mean %.2f queries (expected %.2f)",
        size,
        trials,
        stats.mean_queries,
        stats.expected_mean,
    )
    return stats
