"""Configuration management: resource bounds for the exact and brute-force engines"""

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Optional

import pandas as pd

from ..logging_config import get_data_loader_logger

@dataclass
class ConfigPaths:
    """Configuration file paths"""
    static_dir: str = "config/static"
    outputs_dir: str = "outputs"

    @property
    def limits_file(self) -> str:
        return f"{self.static_dir}/limits.csv"

@dataclass(frozen=True)
class Limits:
    """Bounds that keep exponential operations from running away"""
    closure_limit: int = 2 ** 20
    cnf_clause_cap: int = 2 ** 16
    enumeration_bound: int = 30
    exact_bound: int = 20
    closure_output_cap: int = 4096

    def with_overrides(self, **overrides) -> 'Limits':
        """Copy with the non-None overrides applied"""
        applied = {key: value for key, value in overrides.items() if value is not None}
        return replace(self, **applied) if applied else self

class ConfigurationManager:
    """Loads static configuration from CSV files"""

    def __init__(self, config_paths: Optional[ConfigPaths] = None):
        self.paths = config_paths or ConfigPaths()
        self.logger = get_data_loader_logger()

    def load_limits(self, limits_file: Optional[str] = None) -> Limits:
        """Load resource bounds; a missing file yields the defaults"""
        file_path = limits_file or self.paths.limits_file

        if not os.path.exists(file_path):
            if limits_file is not None:
                raise ConfigurationError(f"Limits file not found: {file_path}")
            self.logger.warning(f"Limits file not found: {file_path}, using defaults")
            return Limits()

        self.logger.debug(f"Loading limits from: {file_path}")
        try:
            table = pd.read_csv(file_path, skipinitialspace=True, dtype={'setting': str})
        except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
            raise ConfigurationError(f"Cannot parse limits file {file_path}: {e}")

        missing_columns = {'setting', 'value'} - set(table.columns)
        if missing_columns:
            raise ConfigurationError(f"Limits file {file_path} lacks columns: {sorted(missing_columns)}")

        known = {f.name for f in fields(Limits)}
        overrides = {}
        for _, row in table.iterrows():
            setting = str(row['setting']).strip()
            if setting not in known:
                raise ConfigurationError(f"Unknown limit setting '{setting}' in {file_path}")
            try:
                value = int(row['value'])
            except (TypeError, ValueError):
                raise ConfigurationError(f"Limit '{setting}' must be an integer, got {row['value']!r}")
            if value <= 0:
                raise ConfigurationError(f"Limit '{setting}' must be positive, got {value}")
            overrides[setting] = value

        limits = Limits().with_overrides(**overrides)
        self.logger.info(f"Limits loaded: {len(overrides)} overrides from {file_path}")
        self.logger.debug(f"Effective limits: {limits}")
        return limits

    def ensure_outputs_dir(self) -> Path:
        """Create the outputs directory if needed"""
        path = Path(self.paths.outputs_dir)
        path.mkdir(parents=True, exist_ok=True)
        return path

class ConfigurationError(Exception):
    """Configuration loading/validation errors"""
    code = 'configuration_error'
    exit_code = 2
