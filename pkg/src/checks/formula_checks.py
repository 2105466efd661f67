"""Formula rewriting laws on random trees"""
from ..core.check_registry import CheckInterface, CheckOutcome, register_check
from ..core.formula import evaluate, leaves, push_negations, render, to_cnf
from ..utils import random_formula, random_instance

FORMULAS = 500
MAX_DEPTH = 4


@register_check('formula_laws')
class FormulaLawsCheck(CheckInterface):
    """push_negations and to_cnf keep the value and add no operands"""

    @staticmethod
    def run(rng, limits):
        mismatches = 0
        first = ''
        for _ in range(FORMULAS):
            w = random_instance(rng, 4, 8)
            f = random_formula(rng, w.n, MAX_DEPTH)
            expected = evaluate(f, w)
            pushed = push_negations(f)
            cnf = to_cnf(pushed, cap=limits.cnf_clause_cap)
            ok = (evaluate(pushed, w) == expected
                  and evaluate(cnf, w) == expected
                  and leaves(cnf) <= leaves(pushed))
            if not ok:
                mismatches += 1
                first = first or f"{render(f)} over {w.to_texts()}"
        return CheckOutcome(FORMULAS, mismatches, f"first mismatch: {first}" if first else '')

    @staticmethod
    def get_tags():
        return ['formula']

    @staticmethod
    def describe():
        return f"eval is preserved by push_negations and to_cnf, {FORMULAS} random formulas"
