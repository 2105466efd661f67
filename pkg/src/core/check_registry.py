"""Check registry for automatic discovery and registration of audit checks"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np
import pandas as pd

from ..logging_config import get_main_logger


@dataclass
class CheckOutcome:
    """Result of one audit check"""
    cases: int
    mismatches: int
    detail: str = ''
    samples: List[Dict[str, object]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.mismatches == 0


class CheckInterface(ABC):
    """Interface that all checks must implement"""

    @staticmethod
    @abstractmethod
    def run(rng: np.random.Generator, limits) -> CheckOutcome:
        """Execute the check with a seeded generator and the active Limits"""
        pass

    @staticmethod
    @abstractmethod
    def get_tags() -> List[str]:
        """Return the check's tags (e.g., ['oracle', 'counting'])"""
        pass

    @staticmethod
    @abstractmethod
    def describe() -> str:
        """One-line description for --list-checks"""
        pass


class CheckRegistry:
    """Registry for automatic check discovery and management"""

    _checks: Dict[str, CheckInterface] = {}
    _initialized = False

    @classmethod
    def register(cls, name: str, check_class: CheckInterface):
        """Register a check"""
        cls._checks[name] = check_class

    @classmethod
    def get_check(cls, name: str) -> Optional[CheckInterface]:
        """Get check by name"""
        if not cls._initialized:
            cls.auto_discover()
        return cls._checks.get(name)

    @classmethod
    def get_all_checks(cls) -> Dict[str, CheckInterface]:
        """Get all registered checks"""
        if not cls._initialized:
            cls.auto_discover()
        return cls._checks.copy()

    @classmethod
    def catalog(cls) -> pd.DataFrame:
        """name, tags (comma-separated) and description of every check, sorted by name"""
        rows = [
            {'name': name, 'tags': ','.join(check.get_tags()), 'description': check.describe()}
            for name, check in sorted(cls.get_all_checks().items())
        ]
        return pd.DataFrame(rows, columns=['name', 'tags', 'description'])

    @classmethod
    def auto_discover(cls):
        """Import the checks package so its modules register themselves"""
        try:
            from .. import checks  # noqa: F401
            cls._initialized = True
        except ImportError as e:
            get_main_logger().warning(f"Could not auto-discover checks: {e}")

    @classmethod
    def validate_check(cls, name: str, check_class: CheckInterface) -> bool:
        """Validate that a check implements the required interface"""
        required_methods = ['run', 'get_tags', 'describe']

        for method in required_methods:
            if not hasattr(check_class, method):
                raise ValueError(f"Check {name} missing required method: {method}")

        return True


# Decorator for easy registration
def register_check(name: str):
    """Decorator to register a check"""
    def decorator(check_class):
        CheckRegistry.validate_check(name, check_class)
        CheckRegistry.register(name, check_class)
        return check_class
    return decorator
