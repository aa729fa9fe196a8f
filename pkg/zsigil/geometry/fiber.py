"""
Fiber Algebra
~~~~~~~~~~~~~

The fiberwise operation on T_pM, its identity and exact inverse keys.

The reference realization is

    u (*)_p v = C_p . diag(u) . diag(eta_p(v)) . C_p^-1

where the frame C_p and the componentwise cubic key map
eta_p(v)_j = a_j v_j + b_j v_j^3 are nonlinear functions of the base
point p and a secret seed. With a_j > 0 and b_j >= 0 each eta_p is
strictly increasing, so e (*)_p d = 1 has the unique solution
d_j = eta_p^-1(1 / e_j) whenever every e_j != 0.
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from zsigil.config.schema import FiberConfig
from zsigil.exceptions import (
    BasePointMismatchError,
    DimensionMismatchError,
    FiberError,
    GenerationError,
    InverseUndefinedError,
    KeyDerivationError,
)
from zsigil.geometry.manifold import ManifoldPoint, TangentVector, TorusModel

__all__ = [
    "Endomorphism",
    "FiberOperation",
    "FiberRealization",
    "CubicFrameRealization",
    "derive_operation",
    "star",
    "inverse_key",
    "forward_key",
    "normalized_trace",
    "seed_generator",
]

logger = logging.getLogger(__name__)

SEED_BYTES = 32

_TWO_PI = 2.0 * np.pi

# Newton steps applied after the closed-form cubic root: at least the first,
# at most the second.
_POLISH_STEPS = 3
_MAX_POLISH_STEPS = 60


def seed_generator(seed: bytes) -> np.random.Generator:
    """A numpy generator keyed by a 32-byte seed."""
    if len(seed) != SEED_BYTES:
        raise FiberError(f"Seeds must be {SEED_BYTES} bytes, got {len(seed)}")
    return np.random.default_rng(np.frombuffer(seed, dtype="<u4"))


@dataclass(frozen=True, eq=False)
class Endomorphism:
    """An r x r real matrix acting on T_pM."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.entries, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise DimensionMismatchError(
                f"Endomorphisms are square matrices, got shape {arr.shape}"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @classmethod
    def identity(cls, r: int) -> Endomorphism:
        return cls(np.eye(r))

    @property
    def r(self) -> int:
        return self.entries.shape[0]

    def __matmul__(self, other: Endomorphism) -> Endomorphism:
        return Endomorphism(self.entries @ other.entries)

    def scaled(self, factor: float) -> Endomorphism:
        return Endomorphism(factor * self.entries)

    def distance(self, other: Endomorphism) -> float:
        """Max-norm distance between two endomorphisms."""
        return float(np.max(np.abs(self.entries - other.entries)))

    def distance_to_identity(self) -> float:
        return float(np.max(np.abs(self.entries - np.eye(self.r))))


@dataclass(frozen=True, eq=False)
class FiberOperation:
    """
    The per-point realization of (*)_p.

    Attributes:
        base: The point p whose fiber the operation acts on.
        frame: Invertible r x r frame C_p.
        frame_inverse: C_p^-1, computed once.
        keymap_a: Positive linear coefficients a_j of eta_p.
        keymap_b: Nonnegative cubic coefficients b_j of eta_p.
        zero_threshold: Below this magnitude a key component counts as zero.
    """

    base: ManifoldPoint
    frame: np.ndarray
    frame_inverse: np.ndarray
    keymap_a: np.ndarray
    keymap_b: np.ndarray
    zero_threshold: float = 1e-12

    def __post_init__(self) -> None:
        r = self.base.r
        for name in ("frame", "frame_inverse", "keymap_a", "keymap_b"):
            arr = np.array(getattr(self, name), dtype=np.float64)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        for name in ("frame", "frame_inverse"):
            if getattr(self, name).shape != (r, r):
                raise DimensionMismatchError(f"{name} must be {r}x{r}")
        for name in ("keymap_a", "keymap_b"):
            if getattr(self, name).shape != (r,):
                raise DimensionMismatchError(f"{name} must have {r} entries")
        if np.any(self.keymap_a <= 0.0) or np.any(self.keymap_b < 0.0):
            raise FiberError("Key map needs a_j > 0 and b_j >= 0")

    @classmethod
    def from_frame(
        cls,
        base: ManifoldPoint,
        frame: np.ndarray,
        keymap_a: np.ndarray,
        keymap_b: np.ndarray,
        zero_threshold: float = 1e-12,
    ) -> FiberOperation:
        frame = np.asarray(frame, dtype=np.float64)
        return cls(
            base=base,
            frame=frame,
            frame_inverse=np.linalg.inv(frame),
            keymap_a=np.asarray(keymap_a, dtype=np.float64),
            keymap_b=np.asarray(keymap_b, dtype=np.float64),
            zero_threshold=zero_threshold,
        )

    @classmethod
    def degenerate(cls, base: ManifoldPoint, b: float = 0.0) -> FiberOperation:
        """Identity frame, a = 1 and a constant cubic coefficient b."""
        r = base.r
        return cls.from_frame(base, np.eye(r), np.ones(r), np.full(r, float(b)))

    @property
    def r(self) -> int:
        return self.base.r

    @property
    def frame_det(self) -> float:
        return float(np.linalg.det(self.frame))

    def eta(self, v: np.ndarray) -> np.ndarray:
        """The componentwise key map eta_p(v)_j = a_j v_j + b_j v_j^3."""
        return self.keymap_a * v + self.keymap_b * v**3

    def eta_inverse(self, y: np.ndarray) -> np.ndarray:
        """
        Solve b_j x^3 + a_j x - y_j = 0 for its unique real root.

        Closed-form Cardano root for b_j > 0 (linear solve for b_j = 0),
        polished by Newton steps until the update stalls. The cubic is
        strictly increasing, so Newton converges from any start.
        """
        y = np.asarray(y, dtype=np.float64)
        a, b = self.keymap_a, self.keymap_b
        x = y / a
        cubic = b > 0.0
        if np.any(cubic):
            with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
                p = a[cubic] / b[cubic]
                t = 0.5 * y[cubic] / b[cubic]
                disc = np.sqrt(t * t + (p / 3.0) ** 3)
                u = np.cbrt(t + np.copysign(disc, t))
                root = u - p / (3.0 * u)
            x[cubic] = np.where(np.isfinite(root), root, x[cubic])
        for step in range(_MAX_POLISH_STEPS):
            dx = (b * x**3 + a * x - y) / (3.0 * b * x**2 + a)
            x = x - dx
            if step + 1 >= _POLISH_STEPS and np.all(
                np.abs(dx) <= 4.0 * np.finfo(np.float64).eps * np.abs(x)
            ):
                break
        return x


class FiberRealization(ABC):
    """
    Abstract source of fiber operations.

    Subclasses decide how the frame and key map depend on the base point
    and the secret seed; the algebra (star, inverse keys, trace) is shared.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Unique identifier for this realization."""
        ...

    @abstractmethod
    def derive(
        self, model: TorusModel, p: ManifoldPoint, secret_seed: bytes
    ) -> FiberOperation:
        """Build the operation (*)_p for base point p."""
        ...

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} name={self.name!r}>"


class CubicFrameRealization(FiberRealization):
    """
    Reference realization: seeded Gaussian pre-frame modulated entrywise
    by a trigonometric polynomial of p, plus a point-modulated cubic key map.
    """

    def __init__(self, config: FiberConfig | None = None, budget: int = 64) -> None:
        self._config = config or FiberConfig()
        self._budget = budget

    @property
    def name(self) -> str:
        return "degenerate" if self._config.degenerate else "cubic_frame"

    @staticmethod
    def _modulation(x: np.ndarray) -> np.ndarray:
        """M_jk(x) = 1 + sin(2 pi (x_j + 2 x_k)) cos(2 pi x_k) / 2, in [0.5, 1.5]."""
        phase = _TWO_PI * (x[:, None] + 2.0 * x[None, :])
        return 1.0 + 0.5 * np.sin(phase) * np.cos(_TWO_PI * x)[None, :]

    def derive(
        self, model: TorusModel, p: ManifoldPoint, secret_seed: bytes
    ) -> FiberOperation:
        cfg = self._config
        if p.r != model.r:
            raise DimensionMismatchError(
                f"Point of dimension {p.r} on a {model.r}-dimensional torus"
            )
        rng = seed_generator(secret_seed)
        if cfg.degenerate:
            return FiberOperation.degenerate(p)

        x = p.array / model.moduli_array
        a_lo, a_hi = cfg.keymap_a_range
        b_lo, b_hi = cfg.keymap_b_range
        keymap_a = a_lo + (a_hi - a_lo) * rng.random(model.r) * 0.5 * (
            1.0 + np.cos(_TWO_PI * x)
        )
        keymap_b = b_lo + (b_hi - b_lo) * rng.random(model.r) * 0.5 * (
            1.0 + np.sin(_TWO_PI * x)
        )

        modulation = self._modulation(x)
        for attempt in range(self._budget):
            frame = rng.standard_normal((model.r, model.r)) * modulation
            if abs(np.linalg.det(frame)) >= cfg.min_frame_det:
                if attempt:
                    logger.debug("Frame accepted after %d resamples", attempt)
                return FiberOperation.from_frame(
                    p, frame, keymap_a, keymap_b, cfg.zero_threshold
                )
        raise GenerationError(
            f"No frame with |det| >= {cfg.min_frame_det} in {self._budget} draws"
        )


# ── Operations ───────────────────────────────────────────────────────────────


def derive_operation(
    model: TorusModel,
    p: ManifoldPoint,
    secret_seed: bytes,
    config: FiberConfig | None = None,
    budget: int = 64,
) -> FiberOperation:
    """Derive (*)_p deterministically from (p, secret_seed)."""
    return CubicFrameRealization(config, budget).derive(model, p, secret_seed)


def _check_fiber(op: FiberOperation, *vectors: TangentVector) -> None:
    for vec in vectors:
        if vec.base != op.base:
            raise BasePointMismatchError(
                "Tangent vector is not attached to the operation's base point",
                details={"expected": op.base.coords, "got": vec.base.coords},
            )


def star(op: FiberOperation, u: TangentVector, v: TangentVector) -> Endomorphism:
    """
    u (*)_p v = C_p diag(u) diag(eta_p(v)) C_p^-1.

    Homogeneous in the first slot: star(op, lam*u, v) = lam * star(op, u, v).
    """
    _check_fiber(op, u, v)
    weights = u.components * op.eta(v.components)
    return Endomorphism((op.frame * weights) @ op.frame_inverse)


def inverse_key(op: FiberOperation, e: TangentVector) -> TangentVector:
    """
    The unique d with e (*)_p d = identity: d_j = eta_p^-1(1 / e_j).

    Raises:
        InverseUndefinedError: If some |e_j| is below the zero threshold.
    """
    _check_fiber(op, e)
    if np.any(np.abs(e.components) < op.zero_threshold):
        raise InverseUndefinedError(
            "Public key has a zero component; its inverse key is undefined",
            details={"components": e.components.tolist()},
        )
    return TangentVector(op.base, op.eta_inverse(1.0 / e.components))


def forward_key(op: FiberOperation, d: TangentVector) -> TangentVector:
    """
    The public key of a private key: e_j = 1 / eta_p(d)_j.

    Raises:
        KeyDerivationError: If some eta_p(d)_j vanishes.
    """
    _check_fiber(op, d)
    image = op.eta(d.components)
    if np.any(np.abs(image) < op.zero_threshold):
        raise KeyDerivationError("eta_p(d) has a zero component; resample d")
    return TangentVector(op.base, 1.0 / image)


def normalized_trace(x: Endomorphism | np.ndarray) -> float:
    """T(X) = Tr(X) / r."""
    entries = x.entries if isinstance(x, Endomorphism) else np.asarray(x)
    if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
        raise DimensionMismatchError(
            f"Trace needs a square matrix, got shape {entries.shape}"
        )
    return float(np.trace(entries) / entries.shape[0])
