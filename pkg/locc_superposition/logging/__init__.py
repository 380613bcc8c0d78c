"""
Centralized logging configuration for the LOCC superposition toolkit
====================================================================

Provides standardized logging with:
- Consistent logger instances across all modules
- Structured JSON logging for batch sweeps
- Run IDs correlating every record of one sweep
- Configurable log levels and formats
- stderr output only, so stdout stays reserved for command results
"""

import logging
import sys
import uuid
from contextlib import contextmanager
from contextvars import ContextVar
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, Iterator, Optional

from ..config import get_config
from ..utils.fast_json import dumps

# Context variable for sweep run tracking
run_id: ContextVar[Optional[str]] = ContextVar('run_id', default=None)

_RESERVED_ATTRS = frozenset([
    'name', 'msg', 'args', 'levelname', 'levelno', 'pathname', 'filename',
    'module', 'lineno', 'funcName', 'created', 'msecs', 'relativeCreated',
    'thread', 'threadName', 'processName', 'process', 'message', 'exc_info',
    'exc_text', 'stack_info', 'run_id', 'taskName',
])


class RunIdFilter(logging.Filter):
    """Add the current run ID to log records"""

    def filter(self, record):
        record.run_id = run_id.get() or 'none'
        return True


class StructuredFormatter(logging.Formatter):
    """JSON structured logging formatter for sweeps and files"""

    def format(self, record):
        log_entry = {
            'timestamp': datetime.now(timezone.utc).isoformat().replace('+00:00', 'Z'),
            'level': record.levelname,
            'logger': record.name,
            'message': record.getMessage(),
            'module': record.module,
            'function': record.funcName,
            'line': record.lineno,
            'run_id': getattr(record, 'run_id', 'none')
        }

        if record.exc_info:
            log_entry['exception'] = self.formatException(record.exc_info)

        # Extra fields passed through ``extra=``
        for key, value in record.__dict__.items():
            if key not in _RESERVED_ATTRS:
                log_entry[key] = value

        try:
            return dumps(log_entry)
        except TypeError:
            return dumps({key: str(value) for key, value in log_entry.items()})


class ConsoleFormatter(logging.Formatter):
    """Human-readable console formatter for development"""

    COLORS = {
        'DEBUG': '\033[36m',    # Cyan
        'INFO': '\033[32m',     # Green
        'WARNING': '\033[33m',  # Yellow
        'ERROR': '\033[31m',    # Red
        'CRITICAL': '\033[35m', # Magenta
        'RESET': '\033[0m'
    }

    def format(self, record):
        rid = getattr(record, 'run_id', 'none')
        rid_display = f"[{rid[:8]}]" if rid != 'none' else ""

        color = self.COLORS.get(record.levelname, '')
        reset = self.COLORS['RESET']
        colored_level = f"{color}{record.levelname:8s}{reset}"

        timestamp = datetime.fromtimestamp(record.created).strftime('%H:%M:%S.%f')[:-3]

        return f"{timestamp} {colored_level} {record.name:36s} {rid_display} {record.getMessage()}"


class LoggingManager:
    """
    Centralized logging configuration manager

    Handles:
    - Logger creation with consistent naming
    - Configuration from OutputConfig
    - Run ID management for sweep tracing
    - Structured vs console output selection
    """

    def __init__(self, level: Optional[str] = None):
        self.config = get_config()
        self.loggers: Dict[str, logging.Logger] = {}
        self._setup_root_logging(level)

    def _setup_root_logging(self, level: Optional[str] = None):
        """Configure package logging with appropriate handlers and formatters"""
        output = self.config.output
        log_level_str = level or output.log_level
        log_level = getattr(logging, log_level_str.upper(), logging.WARNING)

        package_logger = logging.getLogger('locc_superposition')
        package_logger.handlers.clear()
        package_logger.setLevel(log_level)
        package_logger.propagate = False

        run_filter = RunIdFilter()

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(log_level)

        if output.debug_mode and not output.structured_logging:
            console_formatter = ConsoleFormatter()
        else:
            console_formatter = StructuredFormatter()

        console_handler.setFormatter(console_formatter)
        console_handler.addFilter(run_filter)
        package_logger.addHandler(console_handler)

        if output.log_file:
            log_path = Path(output.log_file)
            log_path.parent.mkdir(parents=True, exist_ok=True)

            file_handler = logging.FileHandler(log_path)
            file_handler.setLevel(log_level)
            file_handler.setFormatter(StructuredFormatter())
            file_handler.addFilter(run_filter)
            package_logger.addHandler(file_handler)

        self._configure_third_party_loggers()

    def _configure_third_party_loggers(self):
        """Suppress verbose third-party logging"""
        for logger_name in ['numexpr', 'concurrent.futures']:
            logging.getLogger(logger_name).setLevel(logging.WARNING)

    def get_logger(self, name: str) -> logging.Logger:
        """
        Get a standardized logger instance

        Args:
            name: Logger name (typically __name__ from calling module)

        Returns:
            Configured logger instance
        """
        if name not in self.loggers:
            self.loggers[name] = logging.getLogger(name)
        return self.loggers[name]


# Global logging manager instance
_logging_manager: Optional[LoggingManager] = None


def configure_logging(level: Optional[str] = None) -> LoggingManager:
    """(Re)configure package logging, e.g. after the CLI reloads configuration"""
    global _logging_manager
    _logging_manager = LoggingManager(level)
    return _logging_manager


def get_logger(name: str) -> logging.Logger:
    """
    Get a standardized logger instance

    Usage:
        from locc_superposition.logging import get_logger
        logger = get_logger(__name__)
        logger.info("Sweep started")
    """
    global _logging_manager
    if _logging_manager is None:
        _logging_manager = LoggingManager()

    return _logging_manager.get_logger(name)


def set_run_id(rid: Optional[str] = None) -> str:
    """
    Set the run ID for sweep tracing

    Args:
        rid: Optional run ID. If None, generates a new UUID

    Returns:
        The run ID that was set
    """
    if rid is None:
        rid = str(uuid.uuid4())
    run_id.set(rid)
    return rid


def clear_run_id():
    """Clear the current run ID"""
    run_id.set(None)


def get_run_id() -> Optional[str]:
    """Get the current run ID"""
    return run_id.get()


@contextmanager
def with_run_id(rid: Optional[str] = None) -> Iterator[str]:
    """
    Context manager tagging every record emitted inside it with a run ID

    Usage:
        with with_run_id() as rid:
            logger.info("Processing sweep chunk")
    """
    previous = get_run_id()
    current = set_run_id(rid)
    try:
        yield current
    finally:
        if previous:
            set_run_id(previous)
        else:
            clear_run_id()


__all__ = [
    "RunIdFilter",
    "StructuredFormatter",
    "ConsoleFormatter",
    "LoggingManager",
    "configure_logging",
    "get_logger",
    "set_run_id",
    "clear_run_id",
    "get_run_id",
    "with_run_id",
]
