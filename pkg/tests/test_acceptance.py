"""Acceptance criteria, one test each, at the stated tolerance and budget.

Every criterion is exact, so the tolerance is equality. Each test prints a
PASS/FAIL line; the lines are also collected into the terminal summary.
Run directly with ``python3 tests/test_acceptance.py`` for just the lines.
"""
import pytest

from wiremonoids.verify import BUDGETS, run_scenario

# (number, title, scenarios, stated budget in seconds)
CRITERIA = [
    (1, "relation suites", ["relations"], 1),
    (2, "Catalan counts", ["catalan"], 10),
    (3, "Brauer counts", ["brauer-counts"], 5),
    (4, "associativity", ["associativity"], 10),
    (5, "involution laws", ["involutions"], 10),
    (6, "fiber law", ["fiber-law"], 5),
    # both halves of the criterion; the rotation half is expected to fail
    (7, "K_3 quotient", ["k3-quotient", "k3-rotation"], 1),
    (8, "Zimin fingerprints", ["zimin-fingerprints"], 1),
    (9, "bounded isoterm", ["isoterm"], 60),
    (10, "refutation", ["refutation"], 5),
    (11, "embeddings", ["embeddings"], 10),
    (12, "Rees matrix", ["rees-matrix"], 5),
    (13, "cross-oracle", ["cross-oracle"], 30),
]

LINES: list[str] = []


def evaluate_criterion(number, title, scenarios, budget):
    results = [run_scenario(name, BUDGETS[name]) for name in scenarios]
    seconds = sum(r.seconds for r in results)
    passed = all(r.passed for r in results) and seconds <= budget
    line = f"{'PASS' if passed else 'FAIL'} criterion {number:>2} {title} ({seconds:.2f} s, budget {budget:g} s)"
    return passed, line, results


@pytest.mark.parametrize("number, title, scenarios, budget", CRITERIA, ids=[f"c{c[0]:02d}-{c[2][0]}" for c in CRITERIA])
def test_criterion(number, title, scenarios, budget):
    passed, line, results = evaluate_criterion(number, title, scenarios, budget)
    LINES.append(line)
    print(line)
    failed = [d for r in results for d in r.details if d.startswith("FAIL")]
    assert passed, "\n".join(failed) or f"over the {budget} s budget"


if __name__ == "__main__":
    for crit in CRITERIA:
        print(evaluate_criterion(*crit)[1])
