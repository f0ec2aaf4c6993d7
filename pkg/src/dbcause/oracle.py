"""Brute-force reference implementations, straight from the definitions.

Everything here enumerates powersets, so universes are capped by an
:class:`OracleBudget`.  This module deliberately imports nothing from the
engines (causality, repairs, bridge, diagnosis): only instances, query
evaluation and the plain result records.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceeded
from .query import as_boolean, evaluate_bcq, violation_view
from .relational import set_key
from .results import CauseReport, CauseSet, Diagnosis, RepairSet


@dataclass(frozen=True)
class OracleBudget:
    max_subset_universe: int = 12

    def check(self, size, what):
        if size > self.max_subset_universe:
            raise BudgetExceeded(
                f"{what} has {size} elements; oracle budget is "
                f"{self.max_subset_universe}")


def _budget(budget):
    if budget is None:
        return OracleBudget()
    if isinstance(budget, OracleBudget):
        return budget
    return OracleBudget(int(budget))


def _subset(universe, mask):
    return frozenset(universe[i] for i in range(len(universe)) if mask >> i & 1)


def _submasks_proper(mask):
    sub = (mask - 1) & mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def brute_causes(d, query, budget=None):
    """Actual causes by trying every contingency set ``Γ ⊆ D^n - {t}``."""
    query = as_boolean(query)
    endo = sorted(d.endogenous)
    n = len(endo)
    _budget(budget).check(n, "endogenous part")
    # holds[m]: query true after deleting the endogenous tuples in mask m
    holds = [evaluate_bcq(d.atoms - _subset(endo, m), query)
             for m in range(1 << n)]
    reports = []
    for i, t in enumerate(endo):
        bit = 1 << i
        valid = [m for m in range(1 << n)
                 if not m & bit and holds[m] and not holds[m | bit]]
        if not valid:
            continue
        minimal = [m for m in valid
                   if m == 0 or all(holds[s | bit] for s in _submasks_proper(m))]
        smallest = min(bin(m).count("1") for m in valid)
        reports.append(CauseReport(
            t, frozenset(_subset(endo, m) for m in minimal),
            Fraction(1, 1 + smallest)))
    return CauseSet(tuple(reports), query, d.fingerprint())


def _consistent_subsets(d, constraints, budget):
    universe = sorted(d.atoms)
    _budget(budget).check(len(universe), "instance")
    views = [violation_view(dc) for dc in constraints]
    for m in range(1 << len(universe)):
        kept = _subset(universe, m)
        if not any(evaluate_bcq(kept, v) for v in views):
            yield kept


def brute_s_repairs(d, constraints, budget=None):
    """Maximal consistent subsets of ``d``, found over the full powerset."""
    consistent = list(_consistent_subsets(d, constraints, budget))
    maximal = [s for s in consistent if not any(s < o for o in consistent)]
    return RepairSet.from_deletions(d, [d.atoms - s for s in maximal], "S")


def brute_c_repairs(d, constraints, budget=None):
    """Consistent subsets of ``d`` of maximum cardinality."""
    consistent = list(_consistent_subsets(d, constraints, budget))
    top = max(len(s) for s in consistent)
    return RepairSet.from_deletions(
        d, [d.atoms - s for s in consistent if len(s) == top], "C")


def brute_min_diagnoses(problem, budget=None):
    """Subset-minimal ``Δ ⊆ D^n`` with the query false on ``D - Δ``.

    ``problem`` only needs ``instance`` and ``query`` attributes.
    """
    d, query = problem.instance, as_boolean(problem.query)
    endo = sorted(d.endogenous)
    _budget(budget).check(len(endo), "endogenous part")
    diagnoses = [_subset(endo, m) for m in range(1 << len(endo))
                 if not evaluate_bcq(d.atoms - _subset(endo, m), query)]
    minimal = [s for s in diagnoses if not any(o < s for o in diagnoses)]
    return tuple(Diagnosis(s) for s in sorted(minimal, key=set_key))
