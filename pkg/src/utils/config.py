"""
Runtime configuration gathered from environment variables (.env supported)
"""

import logging
import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

from src.utils.logging_config import get_logger

logger = get_logger(__name__)

DEFAULT_SEED = 20240601


class KernelSettings(BaseModel):
    """Settings shared by the CLI and the batch orchestrator"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    seed: int = DEFAULT_SEED
    log_dir: str = "data/logs"
    log_level: str = "WARNING"
    oracle_trials: int = Field(default=5, ge=2)

    @property
    def console_level(self) -> int:
        level = logging.getLevelName(self.log_level.upper())
        return level if isinstance(level, int) else logging.WARNING

    @classmethod
    def from_env(cls, dotenv_path: Optional[str] = None) -> "KernelSettings":
        """
        Load settings from the process environment after reading .env.

        Recognized variables: SEED, KERNEL_LOG_DIR, KERNEL_LOG_LEVEL,
        KERNEL_ORACLE_TRIALS.
        """
        load_dotenv(dotenv_path)
        values = {}
        if os.getenv("SEED"):
            values["seed"] = int(os.environ["SEED"])
        if os.getenv("KERNEL_LOG_DIR"):
            values["log_dir"] = os.environ["KERNEL_LOG_DIR"]
        if os.getenv("KERNEL_LOG_LEVEL"):
            values["log_level"] = os.environ["KERNEL_LOG_LEVEL"]
        if os.getenv("KERNEL_ORACLE_TRIALS"):
            values["oracle_trials"] = int(os.environ["KERNEL_ORACLE_TRIALS"])
        settings = cls(**values)
        logger.debug(f"Loaded settings: {settings.model_dump()}")
        return settings
