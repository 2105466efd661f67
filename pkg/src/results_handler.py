"""Results handling for audit check execution"""

import json
import os
from datetime import datetime
from typing import Any, Dict, List, Optional

import pandas as pd

from .core.check_registry import CheckOutcome
from .logging_config import get_results_logger
from .utils import DB_PATH, get_db_engine

RESULT_COLUMNS = [
    'check', 'tags', 'pass', 'cases', 'mismatches', 'detail',
    'error_message', 'error_type', 'duration_ms', 'seed', 'timestamp',
]


def create_check_result(name: str, tags: List[str], outcome: CheckOutcome, duration: float,
                        seed: Optional[int]) -> Dict[str, Any]:
    """Flat result row for a check that ran to completion"""
    logger = get_results_logger()

    result = {
        'check': name,
        'tags': ','.join(tags),
        'pass': outcome.passed,
        'cases': outcome.cases,
        'mismatches': outcome.mismatches,
        'detail': outcome.detail,
        'error_message': '',
        'error_type': '',
        'duration_ms': round(duration),
        'seed': seed,
        'timestamp': datetime.now().isoformat(),
    }

    logger.info(f"Result created for {name}: {outcome.cases} cases, "
                f"{outcome.mismatches} mismatches, {duration:.0f}ms, Pass: {result['pass']}")
    return result


def create_check_error_result(name: str, tags: List[str], error: Exception, duration: float,
                              seed: Optional[int]) -> Dict[str, Any]:
    """Flat result row for a check that raised"""
    logger = get_results_logger()

    detail = error.to_dict() if hasattr(error, 'to_dict') else {'error': type(error).__name__, 'detail': str(error)}
    result = {
        'check': name,
        'tags': ','.join(tags),
        'pass': False,
        'cases': 0,
        'mismatches': 0,
        'detail': json.dumps(detail),
        'error_message': str(error),
        'error_type': type(error).__name__,
        'duration_ms': round(duration),
        'seed': seed,
        'timestamp': datetime.now().isoformat(),
    }

    logger.error(f"Error result created for {name}: {type(error).__name__}: {error}")
    return result


def result_summary(result: Dict[str, Any]) -> Dict[str, Any]:
    """Subset of a result row printed by the CLI"""
    return {
        'check': result['check'],
        'pass': bool(result['pass']),
        'cases': int(result['cases']),
        'mismatches': int(result['mismatches']),
        'detail': result['error_message'] or result['detail'],
    }


def save_results(results: List[Dict[str, Any]], samples: Optional[List[Dict[str, Any]]] = None,
                 outputs_dir: str = 'outputs', db_path: Optional[str] = None):
    """Save results to CSV and database; benchmark samples go to their own table"""
    logger = get_results_logger()

    if not results:
        logger.warning("No results to save")
        return

    logger.info(f"Saving {len(results)} results to CSV and database")
    os.makedirs(outputs_dir, exist_ok=True)

    df = pd.DataFrame(results, columns=RESULT_COLUMNS)

    csv_path = os.path.join(outputs_dir, 'results.csv')
    df.to_csv(csv_path, index=False)
    logger.info(f"Results saved to CSV: {csv_path}")

    try:
        engine = get_db_engine(db_path or os.path.join(outputs_dir, os.path.basename(DB_PATH)))
        df.to_sql('check_results', engine, if_exists='append', index=False)
        if samples:
            pd.DataFrame(samples).to_sql('benchmark_samples', engine, if_exists='append', index=False)
        logger.info(f"Results saved to database: {len(results)} records, {len(samples or [])} samples")
    except Exception as e:
        logger.error(f"Failed to save to database: {e}")
