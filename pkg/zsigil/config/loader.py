"""
Configuration Loader
~~~~~~~~~~~~~~~~~~~~

Reads sigil_config.yaml, lays it over the defaults section by section and
validates the result. Unknown sections and unsupported schema versions
are rejected before Pydantic sees the data, and field errors are reported
by their dotted path (``manifold.dimension: ...``).
"""

from __future__ import annotations

import copy
import logging
import os
from typing import Any

import yaml
from pydantic import ValidationError

from zsigil.config.defaults import DEFAULT_CONFIG
from zsigil.config.schema import SigilConfig
from zsigil.exceptions import ConfigFileNotFoundError, ConfigValidationError

__all__ = ["SUPPORTED_VERSIONS", "load_config", "load_config_from_dict"]

logger = logging.getLogger(__name__)

SUPPORTED_VERSIONS = ("1.0",)


def _overlay(defaults: dict[str, Any], user: dict[str, Any]) -> dict[str, Any]:
    """Nested copy of ``defaults`` with every mapping in ``user`` laid over it."""
    merged = copy.deepcopy(defaults)
    for key, value in user.items():
        current = merged.get(key)
        if isinstance(current, dict) and isinstance(value, dict):
            merged[key] = _overlay(current, value)
        else:
            merged[key] = value
    return merged


def _describe(exc: ValidationError) -> str:
    lines = []
    for err in exc.errors():
        where = ".".join(str(part) for part in err["loc"]) or "<root>"
        lines.append(f"{where}: {err['msg']}")
    return "; ".join(lines)


def load_config(path: str | os.PathLike[str]) -> SigilConfig:
    """
    Load a SigilConfig from a YAML file.

    An empty file yields the defaults.

    Raises:
        ConfigFileNotFoundError: If ``path`` does not exist.
        ConfigValidationError: If the YAML is malformed, its root is not a
            mapping, or any value fails validation.
    """
    if not os.path.isfile(path):
        raise ConfigFileNotFoundError(
            f"Configuration file not found: {os.fspath(path)}"
        )

    try:
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as exc:
        raise ConfigValidationError(
            f"{os.fspath(path)} is not valid YAML: {exc}"
        ) from exc

    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigValidationError(
            f"Configuration root must be a mapping, got {type(data).__name__}",
            details={"path": os.fspath(path)},
        )

    logger.debug("Loaded configuration sections %s from %s", sorted(data), path)
    return load_config_from_dict(data)


def load_config_from_dict(data: dict[str, Any]) -> SigilConfig:
    """
    Build a SigilConfig from a partial mapping; missing keys keep defaults.

    Raises:
        ConfigValidationError: On unknown sections, an unsupported version,
            or any invalid value.
    """
    unknown = sorted(set(data) - set(DEFAULT_CONFIG))
    if unknown:
        raise ConfigValidationError(
            f"Unknown configuration section(s): {', '.join(unknown)}",
            details={"unknown": unknown, "known": sorted(DEFAULT_CONFIG)},
        )
    version = str(data.get("version", DEFAULT_CONFIG["version"]))
    if version not in SUPPORTED_VERSIONS:
        raise ConfigValidationError(
            f"Unsupported configuration version {version!r}",
            details={"supported": list(SUPPORTED_VERSIONS)},
        )

    merged = _overlay(DEFAULT_CONFIG, data)
    merged["version"] = version
    try:
        return SigilConfig(**merged)
    except ValidationError as exc:
        raise ConfigValidationError(
            f"Invalid configuration: {_describe(exc)}",
            details={"errors": exc.error_count()},
        ) from exc
