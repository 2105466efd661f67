"""Greedy optimizers against exact search, and the set-cover constructions"""
import math

from ..core.bitcore import closure
from ..core.check_registry import CheckInterface, CheckOutcome, register_check
from ..core.optimize import (
    compare_demands, exact_set_cover, greedy_compare_set, min_compare_set_exact, min_rep_subset_exact,
    min_rep_subset_greedy, min_spanning_subset_exact, min_spanning_subset_greedy, msc_to_mcs,
    set_cover_to_minrep, set_cover_to_negation_minrep, spanning_family, CoverInstance,
)
from ..core.represent import decide
from ..data_loader import parse_msc
from ..utils import all_targets, random_family, random_instance

OPTIMIZE_INSTANCES = 300
OPTIMIZE_WIDTH = 8
OPTIMIZE_SIZE = 8
TRANSFER_INSTANCES = 100
POWER_WIDTH = 5

TABLE_MSC = "4 3\n1 3 4\n1 2\n2 3\n"
TABLE_UNIVERSE, TABLE_FAMILY = parse_msc(TABLE_MSC, "<worked example>")
TABLE_SUBSETS = [
    {1, 5, 6}, {2, 6, 7}, {3, 5, 7}, {4, 5},
    {1}, {2}, {3}, {4},
]


def minrep_ratio_bound(width: int, target) -> float:
    """Greedy guarantee: ln of the largest cover subset, plus one"""
    if target.is_all_ones() or target.is_all_zeros():
        return math.log(width) + 1
    return math.log(math.ceil((width / 2) ** 2)) + 1


@register_check('minrep_bounds')
class MinRepBoundsCheck(CheckInterface):
    """Greedy representation subsets are certified and within the greedy ratio of optimal"""

    @staticmethod
    def run(rng, limits):
        mismatches = 0
        first = ''
        for _ in range(OPTIMIZE_INSTANCES):
            w = random_instance(rng, OPTIMIZE_SIZE, OPTIMIZE_WIDTH)
            negation = bool(rng.random() < 0.3)
            reachable = sorted(closure(w, allow_negation=negation, limit=limits.closure_limit))
            s = reachable[int(rng.integers(0, len(reachable)))]

            greedy = min_rep_subset_greedy(w, s, allow_negation=negation)
            exact = min_rep_subset_exact(w, s, allow_negation=negation, bound=limits.exact_bound)
            bound = minrep_ratio_bound(w.width, s)
            if not greedy.certified or exact.size > greedy.size or greedy.size > bound * exact.size:
                mismatches += 1
                first = first or (f"{w.to_texts()} target {s.to_text()} negation={negation}: "
                                  f"greedy {greedy.size} exact {exact.size}")
        return CheckOutcome(OPTIMIZE_INSTANCES, mismatches, f"first mismatch: {first}" if first else '')

    @staticmethod
    def get_tags():
        return ['optimize', 'bounds']

    @staticmethod
    def describe():
        return f"greedy minrep certified and within ln-ratio of exact, {OPTIMIZE_INSTANCES} random instances"


@register_check('minspan_bounds')
class MinSpanBoundsCheck(CheckInterface):
    """Greedy spanning subsets are certified, bounded and keep the full generating power"""

    @staticmethod
    def run(rng, limits):
        mismatches = 0
        first = ''
        for _ in range(OPTIMIZE_INSTANCES):
            w = random_instance(rng, OPTIMIZE_SIZE, OPTIMIZE_WIDTH)
            greedy = min_spanning_subset_greedy(w)
            exact = min_spanning_subset_exact(w, bound=limits.exact_bound)
            demands = max(1, len(compare_demands(spanning_family(w))))
            ok = greedy.certified and exact.size <= greedy.size <= (math.log(demands) + 1) * exact.size

            if ok and w.width <= POWER_WIDTH:
                sub = w.subset(greedy.indices)
                ok = all(decide(sub, s).representable == decide(w, s).representable
                         for s in all_targets(w.width))
            if not ok:
                mismatches += 1
                first = first or f"{w.to_texts()}: greedy {greedy.indices} exact {exact.indices}"
        return CheckOutcome(OPTIMIZE_INSTANCES, mismatches, f"first mismatch: {first}" if first else '')

    @staticmethod
    def get_tags():
        return ['optimize', 'bounds']

    @staticmethod
    def describe():
        return f"greedy minspan certified, bounded and power-preserving, {OPTIMIZE_INSTANCES} random instances"


@register_check('compare_set_transfer')
class CompareSetTransferCheck(CheckInterface):
    """Compare-set optimum of the constructed instance is m plus the cover optimum"""

    @staticmethod
    def run(rng, limits):
        mismatches = 0
        first = ''
        for _ in range(TRANSFER_INSTANCES):
            m = int(rng.integers(2, 7))
            family = random_family(rng, m, int(rng.integers(1, 6)))
            inst = msc_to_mcs(m, family)
            cover = exact_set_cover(CoverInstance.from_family(range(1, m + 1), family), bound=limits.exact_bound)
            compare = min_compare_set_exact(inst, bound=limits.exact_bound)
            greedy = greedy_compare_set(inst)
            if compare.size != m + cover.size or not greedy.certified:
                mismatches += 1
                first = first or f"m={m} family={[sorted(f) for f in family]}: compare {compare.size}, cover {cover.size}"
        return CheckOutcome(TRANSFER_INSTANCES, mismatches, f"first mismatch: {first}" if first else '')

    @staticmethod
    def get_tags():
        return ['optimize', 'construction']

    @staticmethod
    def describe():
        return f"min compare set of msc_to_mcs == m + min cover, {TRANSFER_INSTANCES} random instances with m >= 2"


@register_check('table_construction')
class TableConstructionCheck(CheckInterface):
    """The three-set, four-element example maps to the documented eight subsets with optimum 6"""

    @staticmethod
    def run(rng, limits):
        inst = msc_to_mcs(TABLE_UNIVERSE, TABLE_FAMILY)
        problems = []
        if inst.items != tuple(range(1, 8)):
            problems.append(f"items {inst.items}")
        if [set(b) for b in inst.subsets] != TABLE_SUBSETS:
            problems.append(f"subsets {[sorted(b) for b in inst.subsets]}")
        optimum = min_compare_set_exact(inst, bound=limits.exact_bound).size
        if optimum != 6:
            problems.append(f"optimum {optimum}")
        return CheckOutcome(3, len(problems), '; '.join(problems))

    @staticmethod
    def get_tags():
        return ['optimize', 'construction']

    @staticmethod
    def describe():
        return "msc_to_mcs of the worked example and its compare-set optimum"


@register_check('set_cover_reductions')
class SetCoverReductionsCheck(CheckInterface):
    """Minimum representation subsets of the cover reductions equal the cover optimum"""

    @staticmethod
    def run(rng, limits):
        cases = mismatches = 0
        first = ''
        for _ in range(TRANSFER_INSTANCES):
            m = int(rng.integers(2, 7))
            count = int(rng.integers(1, 6))
            plain_family = random_family(rng, m, count)
            shifted_family = random_family(rng, m, count, first=2)

            w, s = set_cover_to_minrep(m, plain_family)
            optimum = exact_set_cover(CoverInstance.from_family(range(1, m + 1), plain_family)).size
            got = min_rep_subset_exact(w, s, bound=limits.exact_bound).size
            cases += 1
            if got != optimum:
                mismatches += 1
                first = first or f"plain m={m}: minrep {got}, cover {optimum}"

            w, s = set_cover_to_negation_minrep(m, shifted_family)
            optimum = exact_set_cover(CoverInstance.from_family(range(2, m + 1), shifted_family)).size
            got = min_rep_subset_exact(w, s, allow_negation=True, bound=limits.exact_bound).size
            cases += 1
            if got != optimum:
                mismatches += 1
                first = first or f"negation m={m}: minrep {got}, cover {optimum}"
        return CheckOutcome(cases, mismatches, f"first mismatch: {first}" if first else '')

    @staticmethod
    def get_tags():
        return ['optimize', 'construction', 'negation']

    @staticmethod
    def describe():
        return "set cover reduces to minrep with and without negation, optimum preserved"
