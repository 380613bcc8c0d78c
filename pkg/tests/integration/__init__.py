"""
Integration tests for the LOCC superposition toolkit

These tests run complete workflows: the installed command in a subprocess,
configuration files feeding the CLI, and the analysis pipeline cross-checked
against the brute-force oracle.

To run integration tests:
    pytest tests/integration/ -m integration -v
"""
