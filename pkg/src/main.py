"""Command-line entry point: string-set queries and the audit check runner"""

import argparse
import concurrent.futures
import json
import sys
import time
from threading import Lock
from typing import Any, Dict, List, Optional, Sequence, TextIO, Tuple

import numpy as np

from .config.config_manager import ConfigurationError, ConfigurationManager, Limits
from .core.bitcore import BitString, closure
from .core.check_registry import CheckRegistry
from .core.counting import build_poset, count_upper_sets, negation_poset, poset_to_instance
from .core.errors import BitRepError, UsageError
from .core.optimize import (
    min_rep_subset_exact, min_rep_subset_greedy, min_spanning_subset_exact, min_spanning_subset_greedy,
)
from .core.represent import decide, decide_with_negation
from .core.tag_filter import TagFilter
from .data_loader import format_string_set, load_poset, load_string_set
from .logging_config import (
    get_main_logger,
    get_performance_logger,
    log_check_result,
    log_performance_summary,
    setup_logging,
)
from .results_handler import create_check_error_result, create_check_result, result_summary, save_results

AUDIT_FAILED_EXIT = 5

# Thread-safe result collection
results_lock = Lock()


class CliParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors as BitRepError instead of exiting"""

    def error(self, message):
        raise UsageError(message)


def parse_arguments(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """Subcommand parsing; shared options may follow the subcommand"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--output', choices=['json', 'plain'], default='json',
                        help='Output document format (default: json)')
    common.add_argument('--config', type=str, default=None,
                        help='Alternative limits CSV (default: config/static/limits.csv)')
    common.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
                        default='WARNING', help='Set the logging level (default: WARNING)')
    common.add_argument('--log-file', action='store_true',
                        help='Enable logging to file in addition to stderr')
    common.add_argument('--log-path', type=str, default=None,
                        help='Custom path for log file (implies --log-file)')

    parser = CliParser(
        description='Representability, counting and minimum subsets for sets of binary strings',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python -m src.main decide strings.txt --target 0100          # Is 0100 generable by AND/OR
  python -m src.main decide strings.txt --target 0011 --negation
  python -m src.main count strings.txt                         # Number of generable strings
  python -m src.main minrep strings.txt --target 0100 --exact  # Smallest generating subset
  python -m src.main minspan strings.txt                       # Small subset generating every member
  python -m src.main closure strings.txt --limit 4096          # Brute-force fixpoint
  python -m src.main from-poset order.txt                      # String set for a poset
  python -m src.main audit --exclude-tags slow --threads 4     # Run the audit checks
        """
    )
    commands = parser.add_subparsers(dest='command', parser_class=CliParser)
    commands.required = True

    decide_parser = commands.add_parser('decide', parents=[common], help='Decide whether a target is generable')
    decide_parser.add_argument('input', help='String-set file')
    decide_parser.add_argument('--target', required=True, help='Target bitstring literal')
    decide_parser.add_argument('--negation', action='store_true', help='Allow NOT')

    count_parser = commands.add_parser('count', parents=[common], help='Count generable strings')
    count_parser.add_argument('input', help='String-set file')
    count_parser.add_argument('--negation', action='store_true', help='Allow NOT')

    minrep_parser = commands.add_parser('minrep', parents=[common], help='Minimum representation subset')
    minrep_parser.add_argument('input', help='String-set file')
    minrep_parser.add_argument('--target', required=True, help='Target bitstring literal')
    minrep_parser.add_argument('--negation', action='store_true', help='Allow NOT')
    minrep_parser.add_argument('--exact', action='store_true', help='Exhaustive search instead of greedy')

    minspan_parser = commands.add_parser('minspan', parents=[common], help='Minimum spanning subset')
    minspan_parser.add_argument('input', help='String-set file')
    minspan_parser.add_argument('--exact', action='store_true', help='Exhaustive search instead of greedy')

    closure_parser = commands.add_parser('closure', parents=[common], help='Brute-force closure')
    closure_parser.add_argument('input', help='String-set file')
    closure_parser.add_argument('--negation', action='store_true', help='Allow NOT')
    closure_parser.add_argument('--limit', type=int, default=None, help='Maximum closure size')

    poset_parser = commands.add_parser('from-poset', parents=[common], help='String set for a poset file')
    poset_parser.add_argument('input', help='Poset file')

    audit_parser = commands.add_parser('audit', parents=[common], help='Run the registered audit checks')
    audit_parser.add_argument('--threads', '-t', type=int, default=1,
                              help='Number of parallel threads for check execution (default: 1 - sequential)')
    audit_parser.add_argument('--seed', type=int, default=0, help='Seed for the random instances (default: 0)')
    audit_parser.add_argument('--save', action='store_true', help='Save results to outputs/ (CSV and SQLite)')
    audit_parser.add_argument('--tags', type=str,
                              help='Include checks with ALL of these tags (comma-separated, AND logic)')
    audit_parser.add_argument('--include-tags', action='append',
                              help='Include checks with ANY of these tags (can specify multiple times, OR logic)')
    audit_parser.add_argument('--exclude-tags', type=str, help='Exclude checks with these tags (comma-separated)')
    audit_parser.add_argument('--list-checks', action='store_true', help='List registered checks and exit')

    return parser.parse_args(argv)


def render_document(document: Dict[str, Any], output: str) -> str:
    """One-line JSON with fixed key order, or key: value lines"""
    if output == 'plain':
        lines = []
        for key, value in document.items():
            text = value if isinstance(value, str) else json.dumps(value, separators=(", ", ": "))
            lines.append(f"{key}: {text}")
        return '\n'.join(lines) + '\n'
    return json.dumps(document, separators=(", ", ": ")) + '\n'


def parse_target(text: str) -> BitString:
    return BitString.from_text(text)


def command_decide(args, limits: Limits) -> Tuple[Dict[str, Any], int]:
    w = load_string_set(args.input)
    s = parse_target(args.target)
    verdict = decide_with_negation(w, s) if args.negation else decide(w, s)
    return verdict.to_json(), 0


def command_count(args, limits: Limits) -> Tuple[Dict[str, Any], int]:
    w = load_string_set(args.input)
    if args.negation:
        poset = negation_poset(w)
        return {'count': str(2 ** poset.size), 'classes': poset.size, 'negation': True}, 0
    poset = build_poset(w)
    count = count_upper_sets(poset, bound=limits.enumeration_bound)
    return {'count': str(count), 'classes': poset.size}, 0


def command_minrep(args, limits: Limits) -> Tuple[Dict[str, Any], int]:
    w = load_string_set(args.input)
    s = parse_target(args.target)
    if args.exact:
        answer = min_rep_subset_exact(w, s, allow_negation=args.negation, bound=limits.exact_bound)
    else:
        answer = min_rep_subset_greedy(w, s, allow_negation=args.negation)
    return _subset_document(answer, args.exact), 0


def command_minspan(args, limits: Limits) -> Tuple[Dict[str, Any], int]:
    w = load_string_set(args.input)
    if args.exact:
        answer = min_spanning_subset_exact(w, bound=limits.exact_bound)
    else:
        answer = min_spanning_subset_greedy(w)
    return _subset_document(answer, args.exact), 0


def _subset_document(answer, exact: bool) -> Dict[str, Any]:
    return {
        'indices': answer.indices,
        'size': answer.size,
        'method': 'exact' if exact else 'greedy',
        'certified': answer.certified,
    }


def command_closure(args, limits: Limits) -> Tuple[Dict[str, Any], int]:
    w = load_string_set(args.input)
    if args.limit is not None and args.limit <= 0:
        raise UsageError(f"--limit must be positive, got {args.limit}")
    limit = args.limit if args.limit is not None else limits.closure_limit
    generated = closure(w, allow_negation=args.negation, limit=limit)
    document: Dict[str, Any] = {'size': len(generated)}
    if len(generated) <= limits.closure_output_cap:
        document['strings'] = [s.to_text() for s in sorted(generated)]
    return document, 0


def command_from_poset(args, limits: Limits) -> Tuple[str, int]:
    poset = load_poset(args.input)
    return format_string_set(poset_to_instance(poset)), 0


def select_checks(args) -> List[str]:
    """Registered check names after tag filtering, in name order"""
    logger = get_main_logger()
    catalog = CheckRegistry.catalog()
    if args.tags or args.include_tags or args.exclude_tags:
        include_list: List[str] = []
        require_all = False
        if args.tags:
            include_list = [tag.strip() for tag in args.tags.split(',')]
            require_all = True  # AND logic for --tags
        elif args.include_tags:
            include_list = args.include_tags

        exclude_list = []
        if args.exclude_tags:
            exclude_list = [tag.strip() for tag in args.exclude_tags.split(',')]

        tag_filter = TagFilter(include_list, exclude_list, require_all)
        filtered = tag_filter.filter_checks(catalog)
        logger.info(f"Tag filtering: {len(catalog)} -> {len(filtered)} checks")
        catalog = filtered
    return list(catalog['name'])


def execute_check(name: str, rng: np.random.Generator, limits: Limits,
                  seed: Optional[int]) -> Tuple[Dict[str, Any], List[Dict[str, Any]]]:
    """Run one check; exceptions become failed result rows"""
    logger = get_main_logger()
    check = CheckRegistry.get_check(name)
    tags = check.get_tags()
    start_time = time.time()
    try:
        outcome = check.run(rng, limits)
        duration = (time.time() - start_time) * 1000
        log_check_result(logger, name, outcome.cases, outcome.mismatches, duration)
        return create_check_result(name, tags, outcome, duration, seed), outcome.samples
    except Exception as e:
        duration = (time.time() - start_time) * 1000
        log_check_result(logger, name, 0, 0, duration, error=e)
        logger.debug(f"[{name}] traceback", exc_info=True)
        return create_check_error_result(name, tags, e, duration, seed), []


def run_checks(names: Sequence[str], threads: int = 1, seed: int = 0,
               limits: Optional[Limits] = None) -> Tuple[List[Dict[str, Any]], List[Dict[str, Any]]]:
    """Run checks sequentially or on a thread pool; rows come back in `names` order

    Each check draws from its own generator spawned from `seed`, so results do
    not depend on the thread count.
    """
    logger = get_main_logger()
    limits = limits or Limits()
    generators = [np.random.default_rng(child) for child in np.random.SeedSequence(seed).spawn(len(names))]
    rows: Dict[str, Dict[str, Any]] = {}
    samples: List[Dict[str, Any]] = []

    if threads > 1:
        logger.info(f"Running {len(names)} checks in parallel with {threads} threads")
        with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as executor:
            future_to_name = {
                executor.submit(execute_check, name, rng, limits, seed): name
                for name, rng in zip(names, generators)
            }
            for future in concurrent.futures.as_completed(future_to_name):
                name = future_to_name[future]
                row, check_samples = future.result()
                with results_lock:
                    rows[name] = row
                    samples.extend(check_samples)
    else:
        logger.info(f"Running {len(names)} checks sequentially")
        for name, rng in zip(names, generators):
            row, check_samples = execute_check(name, rng, limits, seed)
            rows[name] = row
            samples.extend(check_samples)

    return [rows[name] for name in names], samples


def command_audit(args, limits: Limits) -> Tuple[Dict[str, Any], int]:
    if args.list_checks:
        catalog = CheckRegistry.catalog()
        return {'checks': catalog.to_dict(orient='records')}, 0
    if args.threads < 1:
        raise UsageError(f"--threads must be at least 1, got {args.threads}")

    names = select_checks(args)
    start_time = time.time()
    results, samples = run_checks(names, threads=args.threads, seed=args.seed, limits=limits)
    execution_time = time.time() - start_time

    passed = sum(1 for r in results if r['pass'])
    failed = len(results) - passed
    log_performance_summary(get_performance_logger(), len(results), execution_time, passed, failed,
                            args.threads > 1)

    if args.save:
        outputs_dir = ConfigurationManager().ensure_outputs_dir()
        save_results(results, samples, outputs_dir=str(outputs_dir))

    document = {
        'checks': [result_summary(r) for r in results],
        'passed': passed,
        'failed': failed,
    }
    return document, 0 if failed == 0 else AUDIT_FAILED_EXIT


COMMANDS = {
    'decide': command_decide,
    'count': command_count,
    'minrep': command_minrep,
    'minspan': command_minspan,
    'closure': command_closure,
    'from-poset': command_from_poset,
    'audit': command_audit,
}


def _error_document(code: str, detail: str) -> str:
    return json.dumps({'error': code, 'detail': detail}, separators=(", ", ": ")) + '\n'


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    """Execute one command; returns the process exit status"""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    try:
        args = parse_arguments(argv)
    except UsageError as e:
        stderr.write(_error_document(e.code, e.detail))
        return e.exit_code

    if args.log_path:
        setup_logging(args.log_level, log_to_file=True, log_file=args.log_path)
    else:
        setup_logging(args.log_level, log_to_file=args.log_file)
    logger = get_main_logger()
    logger.info(f"Command: {args.command} ({vars(args)})")

    try:
        limits = ConfigurationManager().load_limits(args.config)
        document, status = COMMANDS[args.command](args, limits)
    except (BitRepError, ConfigurationError) as e:
        logger.info(f"{args.command} failed: {e.code}: {e}")
        stderr.write(_error_document(e.code, str(e)))
        return e.exit_code
    except Exception as e:
        logger.error(f"Unexpected error: {e}", exc_info=True)
        stderr.write(_error_document('internal_error', f"{type(e).__name__}: {e}"))
        return 1

    stdout.write(document if isinstance(document, str) else render_document(document, args.output))
    return status


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
