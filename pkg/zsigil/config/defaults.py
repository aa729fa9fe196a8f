"""
Default Configuration
~~~~~~~~~~~~~~~~~~~~~

Defaults for Z-Sigil when no config file is provided.
"""

from __future__ import annotations

__all__ = ["DEFAULT_CONFIG"]

DEFAULT_CONFIG: dict = {
    "version": "1.0",
    "manifold": {
        "dimension": 6,
        "moduli": None,
        "section_cutoff": 2,
        "section_max_terms": 32,
        "section_value_range": [0.1, 10.0],
    },
    "fiber": {
        "min_frame_det": 1e-6,
        "keymap_a_range": [0.5, 2.0],
        "keymap_b_range": [0.0, 1.0],
        "identity_tolerance": 1e-9,
        "zero_threshold": 1e-12,
        "degenerate": False,
    },
    "analytic": {
        "gue_size": 4,
        "gue_min_det": 1e-6,
        "spectrum_beta": 2.0,
        "spectrum_scale_range": [0.5, 2.0],
        "zeros_per_block": 3,
        "magnitude_guard": [1e-100, 1e100],
    },
    "scheme": {
        "max_blocks": 65536,
        "rounding_tolerance": 1e-3,
        "public_key_range": [1e-3, 1e3],
        "resample_budget": 64,
        "block_cache_size": 4096,
    },
    "attack": {
        "oracle_tolerance": 1e-6,
        "max_exhaustive_size": 2**24,
        "workers": 4,
        "gate_degree": 2,
        "chunk_size": 4096,
    },
}
