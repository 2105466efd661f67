"""Audit check implementations package"""

# Import all check modules to ensure registration
from . import (
    oracle_checks,
    poset_checks,
    formula_checks,
    optimize_checks,
    scaling_checks,
)

__all__ = [
    'oracle_checks',
    'poset_checks',
    'formula_checks',
    'optimize_checks',
    'scaling_checks',
]
