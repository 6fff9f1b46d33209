"""Application settings for hypalg.

Settings are read once from the process environment (after loading a local
``.env`` file with python-dotenv) and exposed as the module-level ``settings``
object, so services import ``from hypalg.config import settings``.
"""

import logging
import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv(override=False)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

DEFAULT_SEED = 20240517


class Settings(BaseModel):
    """Runtime configuration for the library, the CLI and the API."""

    HYPALG_SEED: int = Field(default=DEFAULT_SEED, description="Seed for randomized checks")
    LOG_LEVEL: str = Field(default="INFO")
    RANDOM_TRIALS: int = Field(default=100, ge=1)
    ALTERNATIVITY_TRIALS: int = Field(default=1000, ge=1)
    LORENTZ_STEPS: int = Field(default=10, ge=1)
    LORENTZ_TOLERANCE: float = Field(default=1e-9, gt=0)
    ROTATION_TOLERANCE: float = Field(default=1e-12, gt=0)
    DIM_TABLE_N_MAX: int = Field(default=4, ge=1)
    SOLVE_N_MAX: int = Field(default=3, ge=1)
    VERIFY_JOBS: int = Field(default=1, ge=1)
    API_HOST: str = Field(default="0.0.0.0")
    API_PORT: int = Field(default=8080)

    @classmethod
    def from_env(cls) -> "Settings":
        """Build settings from environment variables, falling back to defaults.

        Returns:
            Settings: populated configuration
        """
        overrides = {}
        env_map = {
            "HYPALG_SEED": "HYPALG_SEED",
            "LOG_LEVEL": "HYPALG_LOG_LEVEL",
            "RANDOM_TRIALS": "HYPALG_RANDOM_TRIALS",
            "ALTERNATIVITY_TRIALS": "HYPALG_ALTERNATIVITY_TRIALS",
            "LORENTZ_STEPS": "HYPALG_LORENTZ_STEPS",
            "LORENTZ_TOLERANCE": "HYPALG_LORENTZ_TOLERANCE",
            "ROTATION_TOLERANCE": "HYPALG_ROTATION_TOLERANCE",
            "DIM_TABLE_N_MAX": "HYPALG_DIM_TABLE_N_MAX",
            "SOLVE_N_MAX": "HYPALG_SOLVE_N_MAX",
            "VERIFY_JOBS": "HYPALG_VERIFY_JOBS",
            "API_HOST": "HYPALG_API_HOST",
            "API_PORT": "PORT",
        }
        for field_name, env_name in env_map.items():
            value = os.getenv(env_name)
            if value not in (None, ""):
                overrides[field_name] = value
        return cls(**overrides)

    def resolve_seed(self, seed: Optional[int] = None) -> int:
        """Return the explicit seed if given, otherwise the configured one."""
        return self.HYPALG_SEED if seed is None else seed


def configure_logging(level: Optional[str] = None) -> None:
    """Configure root logging for entry points (CLI and API)."""
    logging.basicConfig(
        level=(level or settings.LOG_LEVEL).upper(),
        format=LOG_FORMAT,
    )


settings = Settings.from_env()
