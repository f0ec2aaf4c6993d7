"""S-repairs and C-repairs under denial constraints.

For denial constraints a repair only ever deletes tuples, and a deletion set
restores consistency iff it meets every minimal violation witness.  The
S-repairs are therefore ``D - H`` for ``H`` ranging over the minimal hitting
sets of the conflict hypergraph; C-repairs are the ones with smallest ``H``.
The endogenous/exogenous partition plays no role here: any tuple may go.
"""

from dataclasses import dataclass

from .budget import as_budget
from .hitting import is_hitting_set, minimal_hitting_sets
from .query import evaluate_bcq, violation_view, witness_images
from .relational import sorted_sets
from .results import RepairSet

S, C = "S", "C"


@dataclass(frozen=True)
class ConflictHypergraph:
    """Tuples as vertices; minimal violation witnesses (per constraint) as edges."""

    vertices: frozenset
    edges: frozenset

    def sorted_edges(self):
        return sorted_sets(self.edges)


def conflict_hypergraph(d, constraints, budget=None):
    budget = as_budget(budget)
    edges = set()
    for dc in constraints:
        edges |= witness_images(d, violation_view(dc), True, budget)
    return ConflictHypergraph(frozenset(d.atoms), frozenset(edges))


def is_consistent(d, constraints, budget=None):
    return not any(evaluate_bcq(d, violation_view(dc), budget)
                   for dc in constraints)


def s_repairs(d, constraints, budget=None, hypergraph=None):
    budget = as_budget(budget)
    if hypergraph is None:
        hypergraph = conflict_hypergraph(d, constraints, budget)
    deletions = minimal_hitting_sets(hypergraph.edges, budget)
    return RepairSet.from_deletions(d, deletions, S)


def c_repairs(d, constraints, budget=None, hypergraph=None):
    srep = s_repairs(d, constraints, budget, hypergraph)
    deletions = srep.deletion_sets
    smallest = min(len(h) for h in deletions)
    return RepairSet.from_deletions(
        d, [h for h in deletions if len(h) == smallest], C)


def repairs(d, constraints, kind=S, budget=None):
    kind = kind.upper()
    if kind == S:
        return s_repairs(d, constraints, budget)
    if kind == C:
        return c_repairs(d, constraints, budget)
    raise ValueError(f"unknown repair kind {kind!r}; expected 'S' or 'C'")


def consistent_answer_ground(d, constraints, ground_atom, semantics=S,
                             budget=None):
    """True iff ``ground_atom`` survives in every repair of the given kind."""
    if ground_atom not in d:
        return False
    reps = repairs(d, constraints, semantics, budget)
    return all(ground_atom not in reps.deleted[r] for r in reps.repairs)


__all__ = [
    "ConflictHypergraph", "conflict_hypergraph", "is_consistent",
    "is_hitting_set", "minimal_hitting_sets", "s_repairs", "c_repairs",
    "repairs", "consistent_answer_ground",
]
