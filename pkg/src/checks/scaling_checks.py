"""Runtime of decide on square random instances"""
import time

from ..core.check_registry import CheckInterface, CheckOutcome, register_check
from ..core.represent import decide
from ..utils import random_string_set, random_target
from ..logging_config import get_performance_logger

SIZES = (256, 512, 1024, 2048)
REPEATS = 3
TIME_LIMIT_SECONDS = 2.0
GROWTH_SLACK = 3.0

logger = get_performance_logger()


@register_check('decide_scaling')
class DecideScalingCheck(CheckInterface):
    """decide on m = n instances: the largest within the time limit, growth no worse than cubic"""

    @staticmethod
    def run(rng, limits):
        samples = []
        timings = {}
        for m in SIZES:
            w = random_string_set(rng, m, m)
            s = random_target(rng, m)
            best = float('inf')
            for _ in range(REPEATS):
                start = time.perf_counter()
                decide(w, s)
                best = min(best, time.perf_counter() - start)
            timings[m] = best
            samples.append({'check': 'decide_scaling', 'm': m, 'n': m, 'seconds': best})
            logger.info(f"decide m=n={m}: {best * 1000:.1f}ms")

        problems = []
        largest = SIZES[-1]
        if timings[largest] > TIME_LIMIT_SECONDS:
            problems.append(f"m={largest} took {timings[largest]:.2f}s")
        base = SIZES[0]
        for m in SIZES[1:]:
            allowed = GROWTH_SLACK * timings[base] * (m / base) ** 3
            if timings[m] > allowed:
                problems.append(f"m={m} grew beyond cubic: {timings[m]:.3f}s vs {allowed:.3f}s")

        detail = '; '.join(problems) or ', '.join(f"m={m}: {t * 1000:.1f}ms" for m, t in timings.items())
        return CheckOutcome(len(SIZES), len(problems), detail, samples)

    @staticmethod
    def get_tags():
        return ['slow', 'performance', 'decide']

    @staticmethod
    def describe():
        return f"decide timing for m = n in {SIZES}, largest under {TIME_LIMIT_SECONDS}s"
