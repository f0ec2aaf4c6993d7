"""Actual causes, minimal contingency sets and responsibility for a BCQ.

A deletion set of endogenous tuples falsifies the query exactly when it
meets every minimal witness image (restricted to its endogenous part).  So
``Γ ∪ {t}`` with ``Γ`` an S-minimal contingency set for ``t`` is precisely a
minimal hitting set of those restricted images that contains ``t``; all the
causal information comes out of one hitting-set enumeration.
"""

from .budget import as_budget
from .errors import NotEndogenous, NotInInstance, QueryNotSatisfied
from .hitting import minimal_hitting_sets
from .query import as_boolean, evaluate_bcq, witness_images
from .relational import minimal_sets
from .results import CauseReport, CauseSet


def endogenous_conflicts(d, query, budget=None):
    """Minimal witness images cut down to their endogenous tuples.

    Returns ``None`` if the query is false in ``d``.  If some witness uses
    only exogenous tuples the result contains the empty set: no endogenous
    deletion can then make the query false.
    """
    images = witness_images(d, as_boolean(query), True, budget)
    if not images:
        return None
    return minimal_sets(e & d.endogenous for e in images)


def causal_hitting_sets(d, query, budget=None):
    """Minimal sets of endogenous tuples whose deletion falsifies the query."""
    budget = as_budget(budget)
    conflicts = endogenous_conflicts(d, query, budget)
    if conflicts is None or frozenset() in conflicts:
        return frozenset()
    return minimal_hitting_sets(conflicts, budget)


def _check_endogenous(d, t):
    if t not in d:
        raise NotInInstance(f"{t} is not in the instance")
    if t not in d.endogenous:
        raise NotEndogenous(f"{t} is exogenous")


def is_counterfactual_cause(d, query, t, budget=None):
    _check_endogenous(d, t)
    return (evaluate_bcq(d, query, budget)
            and not evaluate_bcq(d.delete({t}), query, budget))


def minimal_contingency_sets(d, query, t, budget=None):
    """All S-minimal contingency sets for ``t``; empty iff ``t`` is no cause."""
    _check_endogenous(d, t)
    return frozenset(h - {t} for h in causal_hitting_sets(d, query, budget)
                     if t in h)


def is_actual_cause(d, query, t, budget=None):
    return bool(minimal_contingency_sets(d, query, t, budget))


def responsibility(d, query, t, budget=None):
    """Exact responsibility of ``t``; 0 for tuples that are not actual causes.

    Raises :class:`QueryNotSatisfied` when the query is false in ``d``.
    """
    _check_endogenous(d, t)
    budget = as_budget(budget)
    if not evaluate_bcq(d, query, budget):
        raise QueryNotSatisfied("the query is false in the instance")
    return CauseReport.build(
        t, minimal_contingency_sets(d, query, t, budget)).responsibility


def actual_causes(d, query, budget=None):
    query = as_boolean(query)
    per_cause = {}
    for h in causal_hitting_sets(d, query, budget):
        for t in h:
            per_cause.setdefault(t, set()).add(h - {t})
    reports = [CauseReport.build(t, cs) for t, cs in per_cause.items()]
    return CauseSet(tuple(reports), query, d.fingerprint())


def most_responsible_causes(d, query, budget=None, causes=None):
    """Actual causes of maximum responsibility."""
    causes = actual_causes(d, query, budget) if causes is None else causes
    if not len(causes):
        return frozenset()
    top = max(r.responsibility for r in causes)
    return frozenset(r.cause for r in causes if r.responsibility == top)
