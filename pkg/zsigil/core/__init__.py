"""Z-Sigil core: the Sigil facade."""

from zsigil.core.sigil import Sigil, random_text

__all__ = ["Sigil", "random_text"]
