"""
Configuration Schema
~~~~~~~~~~~~~~~~~~~~

Pydantic models for validating Z-Sigil configuration.
"""

from __future__ import annotations

from pydantic import BaseModel, Field, field_validator, model_validator

__all__ = [
    "SigilConfig",
    "ManifoldConfig",
    "FiberConfig",
    "AnalyticConfig",
    "SchemeConfig",
    "AttackConfig",
]


def _check_range(v: list[float], lo: float | None = None) -> list[float]:
    if len(v) != 2 or v[0] > v[1]:
        raise ValueError(f"Expected an increasing [low, high] pair, got {v!r}")
    if lo is not None and v[0] < lo:
        raise ValueError(f"Range {v!r} must start at or above {lo}")
    return v


class ManifoldConfig(BaseModel):
    """Torus model and section sampling settings."""

    dimension: int = Field(default=6, ge=2)
    moduli: list[float] | None = None
    section_cutoff: int = Field(default=2, ge=0)
    section_max_terms: int = Field(default=32, ge=1)
    section_value_range: list[float] = Field(default_factory=lambda: [0.1, 10.0])

    @field_validator("dimension")
    @classmethod
    def validate_dimension(cls, v: int) -> int:
        """The real dimension of a complex torus is even."""
        if v % 2:
            raise ValueError(f"dimension must be even, got {v}")
        return v

    @field_validator("section_value_range")
    @classmethod
    def validate_value_range(cls, v: list[float]) -> list[float]:
        return _check_range(v, lo=0.0)

    @model_validator(mode="after")
    def validate_moduli(self) -> ManifoldConfig:
        if self.moduli is None:
            return self
        if len(self.moduli) != self.dimension:
            raise ValueError(
                f"moduli has {len(self.moduli)} entries, dimension is {self.dimension}"
            )
        if any(not 0.0 < m <= 1.0 for m in self.moduli):
            raise ValueError(f"moduli must lie in (0, 1], got {self.moduli!r}")
        return self


class FiberConfig(BaseModel):
    """Fiber operation derivation settings."""

    min_frame_det: float = Field(default=1e-6, gt=0.0)
    keymap_a_range: list[float] = Field(default_factory=lambda: [0.5, 2.0])
    keymap_b_range: list[float] = Field(default_factory=lambda: [0.0, 1.0])
    identity_tolerance: float = Field(default=1e-9, gt=0.0)
    zero_threshold: float = Field(default=1e-12, gt=0.0)
    degenerate: bool = False

    @field_validator("keymap_a_range")
    @classmethod
    def validate_a_range(cls, v: list[float]) -> list[float]:
        _check_range(v)
        if v[0] <= 0.0:
            raise ValueError("keymap_a_range must be strictly positive")
        return v

    @field_validator("keymap_b_range")
    @classmethod
    def validate_b_range(cls, v: list[float]) -> list[float]:
        return _check_range(v, lo=0.0)


class AnalyticConfig(BaseModel):
    """Chain factor settings: GUE size, spectra and zero selection."""

    gue_size: int = Field(default=4, ge=1)
    gue_min_det: float = Field(default=1e-6, gt=0.0)
    spectrum_beta: float = Field(default=2.0, gt=1.0)
    spectrum_scale_range: list[float] = Field(default_factory=lambda: [0.5, 2.0])
    zeros_per_block: int = Field(default=3, ge=1, le=100)
    magnitude_guard: list[float] = Field(default_factory=lambda: [1e-100, 1e100])

    @field_validator("spectrum_scale_range")
    @classmethod
    def validate_scale_range(cls, v: list[float]) -> list[float]:
        _check_range(v)
        if v[0] <= 0.0:
            raise ValueError("spectrum_scale_range must be strictly positive")
        return v

    @field_validator("magnitude_guard")
    @classmethod
    def validate_guard(cls, v: list[float]) -> list[float]:
        _check_range(v)
        if v[0] <= 0.0:
            raise ValueError("magnitude_guard must be strictly positive")
        return v


class SchemeConfig(BaseModel):
    """Key capacity, decryption acceptance and resampling settings."""

    max_blocks: int = Field(default=65536, ge=1)
    rounding_tolerance: float = Field(default=1e-3, gt=0.0, lt=0.5)
    public_key_range: list[float] = Field(default_factory=lambda: [1e-3, 1e3])
    resample_budget: int = Field(default=64, ge=1)
    block_cache_size: int = Field(default=4096, ge=0)

    @field_validator("public_key_range")
    @classmethod
    def validate_key_range(cls, v: list[float]) -> list[float]:
        _check_range(v)
        if v[0] <= 0.0:
            raise ValueError("public_key_range must be strictly positive")
        return v


class AttackConfig(BaseModel):
    """Attack laboratory settings."""

    oracle_tolerance: float = Field(default=1e-6, gt=0.0)
    max_exhaustive_size: int = Field(default=2**24, ge=1)
    workers: int = Field(default=4, ge=1)
    gate_degree: int = Field(default=2, ge=0)
    chunk_size: int = Field(default=4096, ge=1)


class SigilConfig(BaseModel):
    """
    Root configuration model for Z-Sigil.

    Validated on load with clear error messages for invalid values.
    """

    version: str = "1.0"
    manifold: ManifoldConfig = Field(default_factory=ManifoldConfig)
    fiber: FiberConfig = Field(default_factory=FiberConfig)
    analytic: AnalyticConfig = Field(default_factory=AnalyticConfig)
    scheme: SchemeConfig = Field(default_factory=SchemeConfig)
    attack: AttackConfig = Field(default_factory=AttackConfig)
