"""Poset counting: antichains, upper sets and the poset-to-strings construction"""
from ..core.check_registry import CheckInterface, CheckOutcome, register_check
from ..core.counting import (
    AbstractPoset, count_antichains, count_representable, count_upper_sets, poset_to_instance,
)
from ..utils import brute_force_antichains, brute_force_upper_sets, random_poset

PARSIMONY_POSETS = 100
PARSIMONY_SIZE = 10
BIJECTION_POSETS = 200
BIJECTION_SIZE = 12


@register_check('poset_parsimony')
class PosetParsimonyCheck(CheckInterface):
    """Generable strings of the constructed instance match the antichain count"""

    @staticmethod
    def run(rng, limits):
        posets = [AbstractPoset.chain(2), AbstractPoset.chain(3), AbstractPoset.antichain(3)]
        for _ in range(PARSIMONY_POSETS):
            size = int(rng.integers(1, PARSIMONY_SIZE + 1))
            posets.append(random_poset(rng, size, density=float(rng.uniform(0.1, 0.7))))

        mismatches = 0
        first = ''
        for p in posets:
            expected = brute_force_antichains(p)
            got = count_representable(poset_to_instance(p), bound=limits.enumeration_bound)
            if got != expected:
                mismatches += 1
                first = first or f"{p!r}: instance counts {got}, antichains {expected}"
        return CheckOutcome(len(posets), mismatches, f"first mismatch: {first}" if first else '')

    @staticmethod
    def get_tags():
        return ['oracle', 'counting', 'poset']

    @staticmethod
    def describe():
        return f"count(poset_to_instance(p)) vs antichain scan, {PARSIMONY_POSETS} random posets"


@register_check('antichain_upper_set')
class AntichainUpperSetCheck(CheckInterface):
    """Antichain and upper-set recursions agree with each other and with subset scans"""

    @staticmethod
    def run(rng, limits):
        mismatches = 0
        first = ''
        for _ in range(BIJECTION_POSETS):
            size = int(rng.integers(0, BIJECTION_SIZE + 1))
            p = random_poset(rng, size, density=float(rng.uniform(0.0, 0.6)))
            values = (
                count_antichains(p, bound=limits.enumeration_bound),
                count_upper_sets(p, bound=limits.enumeration_bound),
                brute_force_antichains(p),
                brute_force_upper_sets(p),
            )
            if len(set(values)) != 1:
                mismatches += 1
                first = first or f"{p!r}: {values}"
        return CheckOutcome(BIJECTION_POSETS, mismatches, f"first mismatch: {first}" if first else '')

    @staticmethod
    def get_tags():
        return ['oracle', 'poset']

    @staticmethod
    def describe():
        return f"antichains == upper sets == subset scans, {BIJECTION_POSETS} random posets"
