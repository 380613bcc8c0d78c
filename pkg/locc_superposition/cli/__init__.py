"""
Command line interface (``locc-superpose``)
"""

from .main import CliState, NumberType, cli, main

__all__ = ["CliState", "NumberType", "cli", "main"]
