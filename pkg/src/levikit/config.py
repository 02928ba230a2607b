"""
Configuration module for levikit.

This module handles loading configuration from various sources:
1. Default configuration
2. Configuration files
3. Environment variables
"""

import json
import os
from pathlib import Path
from typing import Dict, Optional, Union

from dotenv import load_dotenv
from pydantic import BaseModel, Field

# Load environment variables from .env file if it exists
load_dotenv()


class EngineConfig(BaseModel):
    """Decomposition engine configuration."""

    depth_cap_dim_factor: int = Field(
        default=2, description="Recursion depth allowance per dimension of the algebra"
    )
    depth_cap_family_factor: int = Field(
        default=2, description="Recursion depth allowance per derivation in the family"
    )
    depth_cap_slack: int = Field(default=4, description="Constant added to the recursion depth cap")
    verify_after_levi: bool = Field(
        default=True, description="Re-verify every certificate before `levi` reports success"
    )

    def depth_cap(self, dim: int, family_size: int) -> int:
        return self.depth_cap_dim_factor * dim + self.depth_cap_family_factor * family_size + self.depth_cap_slack


class LoggingConfig(BaseModel):
    """Logging configuration."""

    level: str = Field(default="INFO", description="Logging level")
    log_file: Optional[str] = Field(default=None, description="Optional log file path")
    rotation: str = Field(default="10 MB", description="Log file rotation threshold")
    retention: str = Field(default="1 week", description="How long rotated log files are kept")


class SuiteConfig(BaseModel):
    """Randomized suite configuration."""

    random_seeds: int = Field(default=100, description="Number of seeded random instances")
    random_max_dim: int = Field(default=12, description="Largest dimension of a random instance")
    grading_round_trips: int = Field(default=50, description="Number of randomized grading round trips")


class LeviKitConfig(BaseModel):
    """levikit configuration."""

    engine: EngineConfig = Field(default_factory=EngineConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    suite: SuiteConfig = Field(default_factory=SuiteConfig)


SECTION_FILES: Dict[str, type] = {
    "engine.json": EngineConfig,
    "logging.json": LoggingConfig,
    "suite.json": SuiteConfig,
}


def load_config(config_path: Optional[Union[str, Path]] = None) -> LeviKitConfig:
    """
    Load configuration from various sources.

    Args:
        config_path: Path to the configuration directory or file.
            If a directory, it will look for config.json, engine.json, logging.json, suite.json.
            If a file, it will load that specific file.
            If None, it will use the LEVIKIT_CONFIG_PATH environment variable or default to ./config.

    Returns:
        LeviKitConfig: The loaded configuration.
    """
    config = LeviKitConfig()

    if config_path is None:
        config_path = os.environ.get("LEVIKIT_CONFIG_PATH", "./config")

    config_path = Path(config_path)

    if config_path.is_dir():
        main_config_path = config_path / "config.json"
        if main_config_path.exists():
            with open(main_config_path, "r") as f:
                config = LeviKitConfig.model_validate(json.load(f))

        for filename, model in SECTION_FILES.items():
            section_path = config_path / filename
            if section_path.exists():
                with open(section_path, "r") as f:
                    setattr(config, filename[: -len(".json")], model.model_validate(json.load(f)))
    elif config_path.is_file():
        with open(config_path, "r") as f:
            config = LeviKitConfig.model_validate(json.load(f))

    # Override with environment variables
    if "LOG_LEVEL" in os.environ:
        config.logging.level = os.environ["LOG_LEVEL"]
    if "LEVIKIT_LOG_FILE" in os.environ:
        config.logging.log_file = os.environ["LEVIKIT_LOG_FILE"]
    if "LEVIKIT_DEPTH_CAP_SLACK" in os.environ:
        config.engine.depth_cap_slack = int(os.environ["LEVIKIT_DEPTH_CAP_SLACK"])

    return config


def write_default_config(directory: Union[str, Path]) -> list:
    """Write the default section files into ``directory``; returns the written paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    defaults = LeviKitConfig()
    written = []
    for filename in SECTION_FILES:
        path = directory / filename
        section = getattr(defaults, filename[: -len(".json")])
        with open(path, "w") as f:
            f.write(json.dumps(section.model_dump(), indent=2) + "\n")
        written.append(path)
    return written


# Global configuration instance
config = load_config()
