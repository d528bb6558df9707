"""Configuration management for the starconf CLI."""

from __future__ import annotations

import os
from dataclasses import dataclass

from dotenv import load_dotenv


# Published default seed: README tables are reproduced with it.
DEFAULT_SEED = 20140328

# 2^31 - 1: products of two residues fit in a signed 64-bit integer.
DEFAULT_PRIME = 2147483647

GRIDS = ("small", "full")


def _parse_bool(value: str | None) -> bool:
    """Parse boolean from environment variable."""
    if value is None:
        return False
    return value.lower() in ("true", "1", "yes", "on")


def _parse_int(value: str | None, default: int) -> int:
    """Parse an integer environment variable, falling back on blanks."""
    if value is None or not value.strip():
        return default
    return int(value.strip())


@dataclass
class Config:
    """Configuration for starconf runs."""

    seed: int = DEFAULT_SEED
    prime: int = DEFAULT_PRIME
    output_dir: str = "./output/"
    verbose: bool = False
    workers: int = 1
    grid: str = "small"

    def with_overrides(
        self,
        seed: int | None = None,
        prime: int | None = None,
        verbose: bool | None = None,
        workers: int | None = None,
        grid: str | None = None,
    ) -> Config:
        """Return a copy with CLI flag values applied (flags win over env)."""
        return Config(
            seed=self.seed if seed is None else seed,
            prime=self.prime if prime is None else prime,
            output_dir=self.output_dir,
            verbose=self.verbose if not verbose else True,
            workers=self.workers if workers is None else workers,
            grid=self.grid if grid is None else grid,
        )


def load_config() -> Config:  # noqa: D103
    """
    Load configuration from environment variables and .env file.

    Returns:
        Config instance with all settings loaded.
    """
    load_dotenv()

    grid = os.getenv("STARCONF_GRID", "small")
    if grid not in GRIDS:
        grid = "small"

    return Config(
        seed=_parse_int(os.getenv("STARCONF_SEED"), DEFAULT_SEED),
        prime=_parse_int(os.getenv("STARCONF_PRIME"), DEFAULT_PRIME),
        output_dir=os.getenv("STARCONF_OUTPUT_DIR", "./output/"),
        verbose=_parse_bool(os.getenv("STARCONF_VERBOSE")),
        workers=max(1, _parse_int(os.getenv("STARCONF_WORKERS"), 1)),
        grid=grid,
    )
