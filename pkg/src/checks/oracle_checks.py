"""Decision and counting engines against the brute-force closure"""
from ..core.bitcore import closure
from ..core.check_registry import CheckInterface, CheckOutcome, register_check
from ..core.counting import count_representable, count_with_negation
from ..core.represent import decide, decide_with_negation
from ..utils import all_string_sets, all_targets, random_instance

EXHAUSTIVE_WIDTH = 4
EXHAUSTIVE_SIZE = 3
RANDOM_INSTANCES = 200
RANDOM_WIDTH = 10
RANDOM_SIZE = 8


def _exhaustive_sets():
    for width in range(1, EXHAUSTIVE_WIDTH + 1):
        yield from all_string_sets(width, EXHAUSTIVE_SIZE)


def _sweep_decide(negation: bool, limits) -> CheckOutcome:
    checker = decide_with_negation if negation else decide
    cases = mismatches = 0
    first = ''
    for w in _exhaustive_sets():
        generated = closure(w, allow_negation=negation, limit=limits.closure_limit)
        for s in all_targets(w.width):
            cases += 1
            if checker(w, s).representable != (s in generated):
                mismatches += 1
                first = first or f"{w.to_texts()} target {s.to_text()}"
    return CheckOutcome(cases, mismatches, f"first mismatch: {first}" if first else '')


@register_check('decide_oracle')
class DecideOracleCheck(CheckInterface):
    """decide against closure membership on every small instance"""

    @staticmethod
    def run(rng, limits):
        return _sweep_decide(False, limits)

    @staticmethod
    def get_tags():
        return ['oracle', 'decide']

    @staticmethod
    def describe():
        return f"decide vs closure, all sets of <= {EXHAUSTIVE_SIZE} strings of width <= {EXHAUSTIVE_WIDTH}"


@register_check('decide_negation_oracle')
class DecideNegationOracleCheck(CheckInterface):

    @staticmethod
    def run(rng, limits):
        return _sweep_decide(True, limits)

    @staticmethod
    def get_tags():
        return ['oracle', 'decide', 'negation']

    @staticmethod
    def describe():
        return "decide_with_negation vs closure with complements, exhaustive small sweep"


@register_check('count_oracle')
class CountOracleCheck(CheckInterface):
    """count_representable against the closure size"""

    @staticmethod
    def run(rng, limits):
        cases = mismatches = 0
        first = ''
        instances = list(_exhaustive_sets())
        instances += [random_instance(rng, RANDOM_SIZE, RANDOM_WIDTH) for _ in range(RANDOM_INSTANCES)]
        for w in instances:
            cases += 1
            expected = len(closure(w, limit=limits.closure_limit))
            got = count_representable(w, bound=limits.enumeration_bound)
            if got != expected:
                mismatches += 1
                first = first or f"{w.to_texts()}: counted {got}, closure {expected}"
        return CheckOutcome(cases, mismatches, f"first mismatch: {first}" if first else '')

    @staticmethod
    def get_tags():
        return ['oracle', 'counting']

    @staticmethod
    def describe():
        return f"count vs |closure|, exhaustive sweep plus {RANDOM_INSTANCES} random instances"


@register_check('count_negation_oracle')
class CountNegationOracleCheck(CheckInterface):

    @staticmethod
    def run(rng, limits):
        cases = mismatches = 0
        first = ''
        for _ in range(RANDOM_INSTANCES):
            w = random_instance(rng, RANDOM_SIZE, RANDOM_WIDTH)
            cases += 1
            expected = len(closure(w, allow_negation=True, limit=limits.closure_limit))
            got = count_with_negation(w)
            if got != expected:
                mismatches += 1
                first = first or f"{w.to_texts()}: counted {got}, closure {expected}"
        return CheckOutcome(cases, mismatches, f"first mismatch: {first}" if first else '')

    @staticmethod
    def get_tags():
        return ['oracle', 'counting', 'negation']

    @staticmethod
    def describe():
        return f"count_with_negation vs |closure with complements|, {RANDOM_INSTANCES} random instances"
