"""Centralized logging configuration for the bitrep toolkit"""

import logging
import sys
from pathlib import Path
from datetime import datetime

def setup_logging(log_level='WARNING', log_to_file=False, log_file=None):
    """
    Configure logging for the entire application

    Console output goes to stderr; stdout is reserved for the JSON documents
    the CLI prints.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_to_file: Whether to log to file as well as console
        log_file: Custom log file path (optional)
    """

    numeric_level = getattr(logging, log_level.upper(), None)
    if not isinstance(numeric_level, int):
        raise ValueError(f'Invalid log level: {log_level}')

    console_formatter = logging.Formatter(
        fmt='%(asctime)s | %(levelname)8s | %(name)s | %(message)s',
        datefmt='%H:%M:%S'
    )

    file_formatter = logging.Formatter(
        fmt='%(asctime)s | %(levelname)8s | %(name)s | %(funcName)s:%(lineno)d | %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    root_logger = logging.getLogger()
    root_logger.setLevel(numeric_level)

    # Remove existing handlers to avoid duplicates
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(numeric_level)
    console_handler.setFormatter(console_formatter)
    root_logger.addHandler(console_handler)

    if log_to_file:
        if log_file is None:
            timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')
            log_file = f'outputs/bitrep_{timestamp}.log'

        Path(log_file).parent.mkdir(parents=True, exist_ok=True)

        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(numeric_level)
        file_handler.setFormatter(file_formatter)
        root_logger.addHandler(file_handler)

        root_logger.info(f"Logging to file: {log_file}")

    root_logger.debug(f"Logging configured: level={log_level}, file_logging={log_to_file}")

    return root_logger

def get_logger(name):
    """
    Get a logger for a specific module

    Args:
        name: Logger name (typically __name__ from the calling module)

    Returns:
        Configured logger instance
    """
    return logging.getLogger(name)

# Predefined loggers for different components
def get_bitcore_logger():
    """Get logger for bitstring and closure operations"""
    return logging.getLogger('bitrep.bitcore')

def get_represent_logger():
    """Get logger for representability decisions"""
    return logging.getLogger('bitrep.represent')

def get_counting_logger():
    """Get logger for poset construction and counting"""
    return logging.getLogger('bitrep.counting')

def get_optimize_logger():
    """Get logger for minimum subset searches"""
    return logging.getLogger('bitrep.optimize')

def get_data_loader_logger():
    """Get logger for file ingestion"""
    return logging.getLogger('bitrep.data_loader')

def get_results_logger():
    """Get logger for results handling"""
    return logging.getLogger('bitrep.results')

def get_main_logger():
    """Get logger for main execution flow"""
    return logging.getLogger('bitrep.main')

def get_performance_logger():
    """Get logger for performance metrics"""
    return logging.getLogger('bitrep.performance')

# Utility functions for structured logging
def log_operation(logger, operation, **fields):
    """Log a library operation with its key parameters"""
    details = ', '.join(f"{key}={value}" for key, value in fields.items())
    logger.debug(f"{operation}({details})")

def log_check_result(logger, name, cases, mismatches, duration_ms=None, error=None):
    """Log an audit check outcome with structured information"""
    if error is not None:
        logger.error(f"[{name}] FAILED with error: {error}")
        return
    msg = f"[{name}] {cases} cases, {mismatches} mismatches"
    if duration_ms:
        msg += f" ({duration_ms:.0f}ms)"
    if mismatches:
        logger.warning(msg)
    else:
        logger.info(msg)

def log_performance_summary(logger, total_checks, total_time, passed, failed, threading_enabled):
    """Log performance summary"""
    avg_time = (total_time / total_checks) if total_checks > 0 else 0
    logger.info(f"Performance Summary: {total_checks} checks, {total_time:.2f}s total, {avg_time:.2f}s avg")
    logger.info(f"Results: {passed} passed, {failed} failed, Threading: {'ON' if threading_enabled else 'OFF'}")
