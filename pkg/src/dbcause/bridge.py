"""Reductions between causes and repairs.

* causes (and responsibilities) read off the S-repairs of ``κ(Q)``;
* S-repairs rebuilt from the causes of each constraint's violation view;
* C-repairs rebuilt from the most responsible causes;
* consistent answers to ground atoms from the cause set.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .budget import as_budget
from .causality import actual_causes
from .errors import InconsistentPackage, NotEndogenous, NotInInstance, PartitionNotSupported
from .hitting import minimal_hitting_sets
from .query import as_boolean, dc_of_query, evaluate_bcq, violation_view
from .relational import minimal_sets, sorted_sets
from .repairs import C, S, s_repairs
from .results import CauseReport, CauseSet, RepairSet


@dataclass(frozen=True)
class DFCollection:
    """Deletion sets of S-repairs that remove ``tuple`` and only endogenous atoms."""

    tuple: object
    difference_sets: frozenset

    def __bool__(self):
        return bool(self.difference_sets)


def df_sets(d, dc, t, budget=None, srep=None):
    if t not in d:
        raise NotInInstance(f"{t} is not in the instance")
    if t not in d.endogenous:
        raise NotEndogenous(f"{t} is exogenous")
    if srep is None:
        srep = s_repairs(d, [dc], budget)
    return DFCollection(t, frozenset(
        s for s in srep.deletion_sets if t in s and s <= d.endogenous))


def causes_from_repairs(d, query, budget=None):
    """Actual causes computed only from the S-repairs of the query's constraint.

    ``t`` is a cause iff some S-repair deletes ``t`` and nothing exogenous;
    its responsibility is ``1/|s|`` for the smallest such deletion set ``s``.
    """
    query = as_boolean(query)
    kappa = dc_of_query(query)
    srep = s_repairs(d, [kappa], budget)
    reports = []
    for t in sorted(d.endogenous):
        df = df_sets(d, kappa, t, srep=srep).difference_sets
        if not df:
            continue
        reports.append(CauseReport(
            t, frozenset(s - {t} for s in df),
            Fraction(1, min(len(s) for s in df))))
    return CauseSet(tuple(reports), query, d.fingerprint())


def repairs_from_cause_contingencies(d, dc, budget=None):
    """``{D - ({t} ∪ Γ)}`` over every cause ``t`` of ``V^κ`` and ``Γ`` in its CT set.

    Causes are taken with every tuple endogenous.  Yields ``{D}`` when ``d``
    satisfies ``dc``.
    """
    causes = actual_causes(d.all_endogenous(), violation_view(dc), budget)
    deletions = {frozenset({r.cause}) | g
                 for r in causes for g in r.minimal_contingencies}
    return RepairSet.from_deletions(d, deletions or {frozenset()}, S)


# --------------------------------------------------------------------------
# repairs from causes for a set of constraints


@dataclass(frozen=True)
class CausePackage:
    """Per constraint, each actual cause of its violation view with its
    S-minimal contingency sets.

    ``views`` is a tuple of ``(dc, {cause: frozenset of contingency sets})``
    in the order of the constraint list it was built for.
    """

    views: tuple

    def causes(self, i):
        return frozenset(self.views[i][1])

    def sorted_entries(self, i):
        table = self.views[i][1]
        return [(t, sorted_sets(table[t])) for t in sorted(table)]


def cause_package(d, constraints, budget=None):
    if d.is_partitioned:
        raise PartitionNotSupported(
            "cause packages are defined for instances with no exogenous tuples")
    budget = as_budget(budget)
    views = []
    for dc in constraints:
        cs = actual_causes(d, violation_view(dc), budget)
        views.append((dc, {r.cause: r.minimal_contingencies for r in cs}))
    return CausePackage(tuple(views))


def validate_package(d, constraints, package, budget=None):
    """Spot-check that every entry of ``package`` is a genuine cause/contingency."""
    constraints = list(constraints)
    if [dc for dc, _ in package.views] != constraints:
        raise InconsistentPackage("package constraints differ from the given ones")
    for dc, table in package.views:
        view = violation_view(dc)
        if evaluate_bcq(d, view, budget) and not table:
            raise InconsistentPackage(f"{dc} is violated but lists no causes")
        for t, contingencies in table.items():
            if t not in d:
                raise InconsistentPackage(f"cause {t} of {dc} is not in the instance")
            if not contingencies:
                raise InconsistentPackage(f"cause {t} of {dc} has no contingency set")
            for g in contingencies:
                if t in g or not g <= d.atoms:
                    raise InconsistentPackage(
                        f"bad contingency set for {t} under {dc}")
                if not evaluate_bcq(d.delete(g), view, budget) or \
                        evaluate_bcq(d.delete(g | {t}), view, budget):
                    raise InconsistentPackage(
                        f"{t} is not counterfactual for {dc} once "
                        f"{sorted(map(str, g))} is removed")


def _cont(chosen, violated, package):
    """Deletion sets from one cause-with-contingency pick per violated view.

    Every combination of picks is produced (the cartesian product).
    """
    per_view = []
    for i in violated:
        table = package.views[i][1]
        picks = [frozenset({t}) | g
                 for t in sorted(chosen) if t in table
                 for g in sorted_sets(table[t])]
        per_view.append(picks)
    for combo in product(*per_view):
        yield frozenset().union(*combo)


def repairs_from_causes(d, constraints, package, budget=None, complete=True):
    """S-repairs of ``d`` under ``constraints`` rebuilt from a cause package.

    Collects the cause sets of the violated views, enumerates hitting sets
    of that collection and, for each, unions one (cause, contingency) pick
    per violated view; results are cut down to the subset-minimal deletion
    sets.

    With ``complete=False`` only the *minimal* hitting sets of the cause
    collection are expanded.  That misses repairs whenever a repair's
    per-view picks do not fit inside one minimal hitting set, e.g. for
    ``{R(1,1), R(1,2), S(1)}`` under ``:- R(X,X).`` and
    ``:- S(X), R(X,Y).`` the repair deleting ``{R(1,1), S(1)}`` is lost.
    The default expands the full cause set ``S`` (itself a hitting set),
    which reaches every combination of picks.
    """
    if d.is_partitioned:
        raise PartitionNotSupported(
            "repairs from causes require an instance with no exogenous tuples")
    budget = as_budget(budget)
    constraints = list(constraints)
    validate_package(d, constraints, package, budget)

    all_causes = frozenset().union(*(package.causes(i)
                                     for i in range(len(package.views))))
    collection = [package.causes(i) for i in range(len(package.views))
                  if package.causes(i)]
    violated = [i for i, (dc, _) in enumerate(package.views)
                if evaluate_bcq(d, violation_view(dc), budget)]
    if complete:
        choices = [all_causes]
    else:
        choices = sorted_sets(minimal_hitting_sets(collection, budget))

    deletions = set()
    for h in choices:
        for c in _cont(h, violated, package):
            budget.tick()
            deletions.add(c)
    return RepairSet.from_deletions(d, minimal_sets(deletions), S)


def subset_repairs_literal(d, constraints, package, budget=None):
    """SubsetRepairs restricted to minimal hitting sets of the cause collection."""
    return repairs_from_causes(d, constraints, package, budget, complete=False)


# --------------------------------------------------------------------------


def c_repairs_from_mrc(d, dc, budget=None):
    """C-repairs as ``D - ({t} ∪ Γ)`` for ``t`` most responsible and ``Γ`` a
    smallest contingency set of ``t`` (all tuples treated as endogenous)."""
    causes = actual_causes(d.all_endogenous(), violation_view(dc), budget)
    if not len(causes):
        return RepairSet.from_deletions(d, [frozenset()], C)
    top = max(r.responsibility for r in causes)
    size = top.denominator - 1
    deletions = {frozenset({r.cause}) | g
                 for r in causes if r.responsibility == top
                 for g in r.minimal_contingencies if len(g) == size}
    return RepairSet.from_deletions(d, deletions, C)


def cqa_from_causes(d, dc, ground_atom, budget=None):
    """A ground atom is consistently true iff it is in ``d`` but is not an
    actual cause of the violation view (all tuples endogenous)."""
    if ground_atom not in d:
        return False
    causes = actual_causes(d.all_endogenous(), violation_view(dc), budget)
    return ground_atom not in causes.causes
