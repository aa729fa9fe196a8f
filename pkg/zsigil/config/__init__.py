"""Z-Sigil configuration: loading, validation, and defaults."""

from zsigil.config.defaults import DEFAULT_CONFIG
from zsigil.config.loader import load_config, load_config_from_dict
from zsigil.config.schema import (
    AnalyticConfig,
    AttackConfig,
    FiberConfig,
    ManifoldConfig,
    SchemeConfig,
    SigilConfig,
)

__all__ = [
    "load_config",
    "load_config_from_dict",
    "SigilConfig",
    "ManifoldConfig",
    "FiberConfig",
    "AnalyticConfig",
    "SchemeConfig",
    "AttackConfig",
    "DEFAULT_CONFIG",
]
