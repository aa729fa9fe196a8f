"""Z-Sigil geometry: the torus key space, sections and fiber algebra."""

from zsigil.geometry.fiber import (
    CubicFrameRealization,
    Endomorphism,
    FiberOperation,
    FiberRealization,
    derive_operation,
    forward_key,
    inverse_key,
    normalized_trace,
    star,
)
from zsigil.geometry.manifold import (
    FourierSection,
    ManifoldPoint,
    TangentVector,
    TorusModel,
    evaluate_section,
    sample_point,
    sample_section,
)

__all__ = [
    "TorusModel",
    "ManifoldPoint",
    "TangentVector",
    "FourierSection",
    "sample_point",
    "evaluate_section",
    "sample_section",
    "Endomorphism",
    "FiberOperation",
    "FiberRealization",
    "CubicFrameRealization",
    "derive_operation",
    "star",
    "inverse_key",
    "forward_key",
    "normalized_trace",
]
