"""
Z-Sigil Custom Exceptions
~~~~~~~~~~~~~~~~~~~~~~~~~

All custom exception classes for Z-Sigil, organized by domain.
Every distinct failure mode has its own exception type.

**Structured Error Messages**

Errors that stop a decryption or an encryption provide three
structured fields:
- ``what_happened``: Clear plain-English description
- ``check_failed``: Name of the check that rejected the data
- ``how_to_fix``: Concrete, actionable steps
"""

__all__ = [
    # Base
    "SigilError",
    # Config
    "ConfigError",
    "ConfigFileNotFoundError",
    "ConfigValidationError",
    # Geometry
    "GeometryError",
    "DimensionMismatchError",
    "BasePointMismatchError",
    # Generation
    "GenerationError",
    "KeyDerivationError",
    "ChainDerivationError",
    # Fiber algebra
    "FiberError",
    "InverseUndefinedError",
    # Analytic
    "AnalyticError",
    "NotTraceClassError",
    "NumericFailureError",
    "ZeroSelectionError",
    # Codec
    "CodecError",
    "MalformedPlaintextError",
    # Scheme
    "SchemeError",
    "CapacityError",
    "IntegrityError",
    # Formats
    "FormatError",
    "KeyFileError",
    "CiphertextFormatError",
    # Attack lab
    "AttackError",
    "SearchFailureError",
    "InfeasibleSearchError",
]


# ── Formatting Helper ────────────────────────────────────────────────────────

_SEPARATOR = "─" * 52


def _format_structured_error(
    title: str,
    what_happened: str,
    check_failed: str,
    how_to_fix: str,
) -> str:
    """Build a rich, structured error message."""
    lines = [
        f"  {title}",
        f"  {_SEPARATOR}",
        "  What happened:",
        *[f"    {line}" for line in what_happened.strip().splitlines()],
        "",
        "  Check failed:",
        f"    {check_failed}",
        "",
        "  How to fix:",
        *[f"    {line}" for line in how_to_fix.strip().splitlines()],
    ]
    return "\n".join(lines)


# ── Base Exception ───────────────────────────────────────────────────────────


class SigilError(Exception):
    """Base exception for all Z-Sigil errors."""

    def __init__(self, message: str = "", details: dict | None = None) -> None:
        self.details = details or {}
        super().__init__(message)


# ── Config Exceptions ────────────────────────────────────────────────────────


class ConfigError(SigilError):
    """Base exception for configuration-related errors."""


class ConfigFileNotFoundError(ConfigError):
    """Raised when a configuration file cannot be found at the specified path."""


class ConfigValidationError(ConfigError):
    """Raised when configuration values fail validation."""


# ── Geometry Exceptions ──────────────────────────────────────────────────────


class GeometryError(SigilError, ValueError):
    """Base exception for manifold and tangent-bundle errors."""


class DimensionMismatchError(GeometryError):
    """Raised when a section, vector or point does not match the model dimension."""


class BasePointMismatchError(GeometryError):
    """Raised when tangent vectors from different fibers are combined."""


# ── Generation Exceptions ────────────────────────────────────────────────────


class GenerationError(SigilError):
    """Raised when a seeded sampler exhausts its resample budget."""


class KeyDerivationError(GenerationError):
    """Raised when a public key cannot be derived from a private key."""


class ChainDerivationError(GenerationError):
    """Raised when no chain factor within the magnitude guard can be derived."""


# ── Fiber Algebra Exceptions ─────────────────────────────────────────────────


class FiberError(SigilError, ValueError):
    """Base exception for fiber operation errors."""


class InverseUndefinedError(FiberError):
    """Raised when a key has a zero component and has no inverse key."""


# ── Analytic Exceptions ──────────────────────────────────────────────────────


class AnalyticError(SigilError, ValueError):
    """Base exception for the analytic layer."""


class NotTraceClassError(AnalyticError):
    """Raised when a power-law spectrum has exponent beta <= 1."""


class NumericFailureError(AnalyticError):
    """Raised when a numerical continuation fails its convergence diagnostic."""


class ZeroSelectionError(AnalyticError):
    """Raised when a Riemann-zero index selection is empty or out of range."""


# ── Codec Exceptions ─────────────────────────────────────────────────────────


class CodecError(SigilError, ValueError):
    """Base exception for text/block conversion errors."""


class MalformedPlaintextError(CodecError):
    """Raised when a block stream does not decode to valid UTF-16."""


# ── Scheme Exceptions ────────────────────────────────────────────────────────


class SchemeError(SigilError):
    """Base exception for key generation, encryption and decryption."""


class CapacityError(SchemeError):
    """
    Raised when a message has more blocks than the key publishes.

    Structured fields:
    - ``what_happened``: description of the capacity breach
    - ``check_failed``: the capacity check
    - ``how_to_fix``: actionable remediation steps
    """

    def __init__(
        self,
        message: str = "Message exceeds key capacity",
        blocks: int = 0,
        max_blocks: int = 0,
        details: dict | None = None,
        what_happened: str = "",
        check_failed: str = "capacity",
        how_to_fix: str = "",
    ) -> None:
        self.blocks = blocks
        self.max_blocks = max_blocks
        self.what_happened = what_happened or (
            f"The message needs {blocks} blocks but the key only "
            f"publishes {max_blocks} per-block public keys."
        )
        self.check_failed = check_failed
        self.how_to_fix = how_to_fix or (
            f"1. Split the message into parts of at most {max_blocks} UTF-16 units\n"
            f"2. Generate a larger key:\n"
            f"   zsigil keygen --max-blocks {max(blocks, 1)} --out <name>"
        )
        super().__init__(message, details)

    def __str__(self) -> str:
        return _format_structured_error(
            title=f"CapacityError: {self.args[0]}",
            what_happened=self.what_happened,
            check_failed=self.check_failed,
            how_to_fix=self.how_to_fix,
        )


class IntegrityError(SchemeError):
    """
    Raised when a decrypted block or block stream fails verification.

    Structured fields:
    - ``what_happened``: which block failed and by how much
    - ``check_failed``: rounding margin, block range or UTF-16 decoding
    - ``how_to_fix``: actionable remediation steps
    """

    def __init__(
        self,
        message: str = "Decryption integrity check failed",
        block_index: int | None = None,
        recovered: float | None = None,
        details: dict | None = None,
        what_happened: str = "",
        check_failed: str = "rounding_margin",
        how_to_fix: str = "",
    ) -> None:
        self.block_index = block_index
        self.recovered = recovered
        if not what_happened and block_index is not None:
            what_happened = (
                f"Block {block_index} decrypted to {recovered!r}, which is not "
                f"an admissible plaintext block."
            )
        self.what_happened = what_happened or message
        self.check_failed = check_failed
        self.how_to_fix = how_to_fix or (
            "1. Make sure the private key matches the public key used to encrypt\n"
            "2. Check that the ciphertext file was not truncated or modified\n"
            "3. Re-encrypt the message if the ciphertext is corrupted"
        )
        super().__init__(message, details)

    def __str__(self) -> str:
        return _format_structured_error(
            title=f"IntegrityError: {self.args[0]}",
            what_happened=self.what_happened,
            check_failed=self.check_failed,
            how_to_fix=self.how_to_fix,
        )


# ── Format Exceptions ────────────────────────────────────────────────────────


class FormatError(SigilError, ValueError):
    """Base exception for key and ciphertext file parsing errors."""


class KeyFileError(FormatError):
    """Raised when a key file cannot be parsed or fails its invariants."""


class CiphertextFormatError(FormatError):
    """Raised when a ciphertext file has a bad header or length."""


# ── Attack Lab Exceptions ────────────────────────────────────────────────────


class AttackError(SigilError):
    """Base exception for attack laboratory errors."""


class SearchFailureError(AttackError):
    """Raised when an exhaustive search scans the space without a marked key."""


class InfeasibleSearchError(AttackError, ValueError):
    """Raised when a requested search space exceeds the desk-scale limit."""
