"""starconf: exact computations on star-configurations in projective space."""

from __future__ import annotations

__version__ = "0.1.0"
