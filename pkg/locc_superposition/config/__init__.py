"""
Configuration management package for the LOCC superposition toolkit

Provides centralized configuration management with:
- Environment variable loading from .env files
- Runtime configuration validation
- Type-safe configuration classes
- Global configuration access patterns

Usage:
    from locc_superposition.config import get_config

    config = get_config()
    print(f"Real-mode tolerance: {config.numerics.real_tolerance}")
    print(f"Default output format: {config.output.default_format}")
"""

from .manager import (
    OUTPUT_FORMATS,
    ConfigManager,
    NumericsConfig,
    RegionConfig,
    SweepSettings,
    OutputConfig,
    get_config,
    init_config
)

__all__ = [
    "OUTPUT_FORMATS",
    "ConfigManager",
    "NumericsConfig",
    "RegionConfig",
    "SweepSettings",
    "OutputConfig",
    "get_config",
    "init_config"
]
