"""
Configuration Manager for the LOCC superposition toolkit
========================================================

Centralized configuration with .env loading, environment variable overrides
and validation of every tunable constant (tolerances, solver and sweep
defaults, output format, logging).
"""

import os
import logging
from dataclasses import dataclass
from typing import Dict, Any, Optional
from pathlib import Path

from dotenv import load_dotenv

from ..core.errors import ConfigInvalid

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("human", "json", "csv")


@dataclass
class NumericsConfig:
    """Comparison tolerances for real-mode arithmetic"""
    real_tolerance: float = 1e-12
    entropy_tolerance: float = 1e-10


@dataclass
class RegionConfig:
    """alpha2 region solver and plot-grid configuration"""
    root_tolerance: float = 1e-6
    grid_points: int = 1001
    max_iterations: int = 200


@dataclass
class SweepSettings:
    """Defaults for the randomized proposition/oracle sweep"""
    samples: int = 100000
    seed: int = 42
    boundary_margin: float = 1e-9
    max_attempts: int = 1000
    workers: int = 1
    max_mismatch_records: int = 100


@dataclass
class OutputConfig:
    """CLI output and logging configuration"""
    default_format: str = "human"
    log_level: str = "WARNING"
    log_file: Optional[str] = None
    debug_mode: bool = False
    structured_logging: bool = False


class ConfigManager:
    """
    Centralized configuration manager with environment variable loading
    and runtime validation for all settings.
    """

    def __init__(self, env_file_path: Optional[str] = None):
        """
        Initialize configuration manager.

        Args:
            env_file_path: Optional path to .env file; defaults to ./.env when present
        """
        self._load_env_file(env_file_path)

        self.numerics = self._load_numerics_config()
        self.region = self._load_region_config()
        self.sweep = self._load_sweep_settings()
        self.output = self._load_output_config()

        self._validate_configuration()

        logger.debug("Configuration loaded and validated successfully")

    def _load_env_file(self, env_file_path: Optional[str]) -> None:
        """Load environment variables from .env file if it exists"""
        env_path = Path(env_file_path) if env_file_path else Path(".env")

        if env_path.exists():
            # Variables already present in the environment win
            load_dotenv(env_path, override=False)
            logger.info(f"Loaded environment variables from {env_path}")

    def _get_env_bool(self, key: str, default: bool) -> bool:
        """Get boolean environment variable with proper conversion"""
        value = os.getenv(key, str(default)).lower()
        return value in ('true', '1', 'yes', 'on')

    def _get_env_int(self, key: str, default: int) -> int:
        """Get integer environment variable with validation"""
        try:
            return int(os.getenv(key, str(default)))
        except ValueError:
            logger.warning(f"Invalid integer value for {key}, using default: {default}")
            return default

    def _get_env_float(self, key: str, default: float) -> float:
        """Get float environment variable with validation"""
        try:
            return float(os.getenv(key, str(default)))
        except ValueError:
            logger.warning(f"Invalid float value for {key}, using default: {default}")
            return default

    def _load_numerics_config(self) -> NumericsConfig:
        return NumericsConfig(
            real_tolerance=self._get_env_float("LOCC_REAL_TOLERANCE", 1e-12),
            entropy_tolerance=self._get_env_float("LOCC_ENTROPY_TOLERANCE", 1e-10),
        )

    def _load_region_config(self) -> RegionConfig:
        return RegionConfig(
            root_tolerance=self._get_env_float("LOCC_ROOT_TOLERANCE", 1e-6),
            grid_points=self._get_env_int("LOCC_GRID_POINTS", 1001),
            max_iterations=self._get_env_int("LOCC_BISECT_MAX_ITER", 200),
        )

    def _load_sweep_settings(self) -> SweepSettings:
        return SweepSettings(
            samples=self._get_env_int("LOCC_SWEEP_SAMPLES", 100000),
            seed=self._get_env_int("LOCC_SWEEP_SEED", 42),
            boundary_margin=self._get_env_float("LOCC_BOUNDARY_MARGIN", 1e-9),
            max_attempts=self._get_env_int("LOCC_SWEEP_MAX_ATTEMPTS", 1000),
            workers=self._get_env_int("LOCC_SWEEP_WORKERS", 1),
            max_mismatch_records=self._get_env_int("LOCC_MAX_MISMATCH_RECORDS", 100),
        )

    def _load_output_config(self) -> OutputConfig:
        return OutputConfig(
            default_format=os.getenv("LOCC_DEFAULT_FORMAT", "human").strip().lower(),
            log_level=os.getenv("LOG_LEVEL", "WARNING").upper(),
            log_file=os.getenv("LOG_FILE"),
            debug_mode=self._get_env_bool("DEBUG_MODE", False),
            structured_logging=self._get_env_bool("STRUCTURED_LOGGING", False),
        )

    def _validate_configuration(self) -> None:
        """Validate configuration values for consistency and ranges"""
        errors = []

        if self.numerics.real_tolerance <= 0:
            errors.append("real_tolerance must be positive")
        if self.numerics.entropy_tolerance <= 0:
            errors.append("entropy_tolerance must be positive")

        if self.region.root_tolerance <= 0:
            errors.append("root_tolerance must be positive")
        if self.region.grid_points < 2:
            errors.append("grid_points must be at least 2")
        if self.region.max_iterations < 1:
            errors.append("max_iterations must be at least 1")

        if self.sweep.samples < 1:
            errors.append("sweep samples must be at least 1")
        if not (0 <= self.sweep.seed < 2 ** 64):
            errors.append("sweep seed must be a 64-bit unsigned integer")
        if self.sweep.boundary_margin <= 0:
            errors.append("boundary_margin must be positive")
        if self.sweep.max_attempts < 1:
            errors.append("max_attempts must be at least 1")
        if self.sweep.workers < 1:
            errors.append("workers must be at least 1")
        if self.sweep.max_mismatch_records < 0:
            errors.append("max_mismatch_records must not be negative")

        if self.output.default_format not in OUTPUT_FORMATS:
            errors.append(
                f"LOCC_DEFAULT_FORMAT must be one of {', '.join(OUTPUT_FORMATS)}, "
                f"got {self.output.default_format!r}"
            )

        if errors:
            error_msg = "Configuration validation failed: " + "; ".join(errors)
            logger.error(error_msg)
            raise ConfigInvalid(errors)

    def get_summary(self) -> Dict[str, Any]:
        """Get configuration summary for logging and debugging"""
        return {
            "numerics": {
                "real_tolerance": self.numerics.real_tolerance,
                "entropy_tolerance": self.numerics.entropy_tolerance,
            },
            "region": {
                "root_tolerance": self.region.root_tolerance,
                "grid_points": self.region.grid_points,
            },
            "sweep": {
                "samples": self.sweep.samples,
                "seed": self.sweep.seed,
                "boundary_margin": self.sweep.boundary_margin,
                "workers": self.sweep.workers,
            },
            "output": {
                "default_format": self.output.default_format,
                "log_level": self.output.log_level,
            },
        }


# Global configuration instance (initialized on first use)
_config_instance: Optional[ConfigManager] = None


def get_config() -> ConfigManager:
    """
    Get the global configuration instance.

    Returns:
        ConfigManager: The global configuration instance
    """
    global _config_instance
    if _config_instance is None:
        _config_instance = ConfigManager()
    return _config_instance


def init_config(env_file_path: Optional[str] = None) -> ConfigManager:
    """
    Initialize the global configuration instance with custom env file.

    Args:
        env_file_path: Optional path to .env file

    Returns:
        ConfigManager: The initialized configuration instance
    """
    global _config_instance
    _config_instance = ConfigManager(env_file_path)
    return _config_instance
