"""Consistency-based diagnosis of a query that is (unexpectedly) true.

The system description is the completion of the instance, unique names,
the query's denial constraint with a ``¬ab_P`` guard on every atom, and the
inclusion dependencies ``ab_P(x) → P(x)``.  With abnormality restricted to
endogenous tuples, that theory plus the observation is consistent for an
abnormality set ``Δ`` exactly when the query fails on ``D - Δ``.  Diagnoses
are decided that way (model checking on the finite instance); the logical
rendering is kept for display only.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .budget import as_budget
from .causality import causal_hitting_sets
from .errors import NotEndogenous, ObservationAbsent
from .query import Variable, as_boolean, evaluate_bcq
from .relational import render_constant, set_key
from .results import CauseReport, CauseSet, Diagnosis

_VAR_NAMES = "xyzwuv"


def _display_vars(n):
    if n <= len(_VAR_NAMES):
        return list(_VAR_NAMES[:n])
    return [f"x{i}" for i in range(1, n + 1)]


def _term(t):
    return t.name.lower() if isinstance(t, Variable) else render_constant(t)


@dataclass(frozen=True)
class ExtendedConstraint:
    """``∀x̄ ¬(P1(x̄1) ∧ ¬ab_P1(x̄1) ∧ ... ∧ Pm(x̄m) ∧ ¬ab_Pm(x̄m))``."""

    atoms: tuple

    @property
    def abnormality_guards(self):
        return tuple((f"ab_{a.predicate}", a.args) for a in self.atoms)

    def render(self):
        seen = []
        for a in self.atoms:
            for t in a.args:
                if isinstance(t, Variable) and _term(t) not in seen:
                    seen.append(_term(t))
        parts = []
        for a in self.atoms:
            args = ",".join(_term(t) for t in a.args)
            parts.append(f"{a.predicate}({args})")
            parts.append(f"¬ab_{a.predicate}({args})")
        return f"∀{''.join(seen)}¬({' ∧ '.join(parts)})"


@dataclass(frozen=True)
class SystemDescription:
    completion_axioms: tuple
    unique_names: tuple
    extended_constraint: ExtendedConstraint
    inclusion_dependencies: tuple
    normality_defaults: tuple

    def render(self):
        lines = ["(a) Predicate completion axioms:"]
        lines += [f"    {ax}" for ax in self.completion_axioms]
        lines.append("(b) Unique names assumption:")
        lines += [f"    {u}" for u in self.unique_names] or ["    (single constant)"]
        lines.append("(c) Extended denial constraint:")
        lines.append(f"    {self.extended_constraint.render()}")
        lines.append("(d) Inclusion dependencies:")
        lines += [f"    {dep}" for dep in self.inclusion_dependencies]
        lines.append("Normality assumption:")
        lines += [f"    {n}" for n in self.normality_defaults]
        return "\n".join(lines)


def _completion_axiom(pred, arity, tuples):
    xs = _display_vars(arity)
    head = f"{pred}({','.join(xs)})"
    quant = f"∀{''.join(xs)}"
    if not tuples:
        return f"{quant}¬{head}"
    disjuncts = []
    for args in tuples:
        eqs = [f"{x}={render_constant(c)}" for x, c in zip(xs, args)]
        conj = " ∧ ".join(eqs)
        disjuncts.append(f"({conj})" if len(tuples) > 1 and len(eqs) > 1 else conj)
    return f"{quant}({head} ↔ {' ∨ '.join(disjuncts)})"


def build_system_description(d, query):
    schema = dict(d.schema)
    for a in query.atoms:
        schema.setdefault(a.predicate, len(a.args))
    by_pred = {p: [] for p in schema}
    for a in sorted(d.atoms):
        by_pred[a.predicate].append(a.args)
    completion = tuple(_completion_axiom(p, schema[p], by_pred[p])
                       for p in sorted(schema))
    constants = sorted({c for a in d.atoms for c in a.args}
                       | {t for qa in query.atoms for t in qa.args
                          if not isinstance(t, Variable)})
    unique = tuple(f"{render_constant(a)}≠{render_constant(b)}"
                   for a, b in combinations(constants, 2))
    inclusion, normality = [], []
    for p in sorted(schema):
        xs = ",".join(_display_vars(schema[p]))
        quant = "∀" + xs.replace(",", "")
        inclusion.append(f"{quant}(ab_{p}({xs}) → {p}({xs}))")
        normality.append(f"{quant}(ab_{p}({xs}) → false)")
    return SystemDescription(completion, unique, ExtendedConstraint(query.atoms),
                             tuple(inclusion), tuple(normality))


@dataclass(frozen=True)
class DiagnosisProblem:
    """``M = (SD, D^n, Q)`` for a boolean query ``Q`` true in ``instance``."""

    instance: object
    query: object
    system_description: SystemDescription

    @property
    def components(self):
        return self.instance.endogenous


def build_diagnosis_problem(d, query, budget=None):
    query = as_boolean(query)
    if not evaluate_bcq(d, query, budget):
        raise ObservationAbsent("the query is false; nothing to diagnose")
    return DiagnosisProblem(d, query, build_system_description(d, query))


def is_diagnosis(problem, abnormal, budget=None):
    abnormal = frozenset(abnormal)
    if not abnormal <= problem.instance.endogenous:
        raise NotEndogenous("diagnoses may only contain endogenous tuples")
    return not evaluate_bcq(problem.instance.delete(abnormal), problem.query,
                            budget)


def minimal_diagnoses(problem, budget=None):
    hs = causal_hitting_sets(problem.instance, problem.query, as_budget(budget))
    return tuple(Diagnosis(h) for h in sorted(hs, key=set_key))


def _check_component(problem, t):
    if t not in problem.instance.endogenous:
        raise NotEndogenous(f"{t} is not an endogenous tuple")


def diagnoses_containing(problem, t, budget=None, minimal=None):
    """Subset-minimal diagnoses that contain ``t``."""
    _check_component(problem, t)
    minimal = minimal_diagnoses(problem, budget) if minimal is None else minimal
    return tuple(dg for dg in minimal if t in dg.abnormal)


def mcd(problem, t, budget=None, minimal=None):
    """Minimum-cardinality members of :func:`diagnoses_containing`.

    Minimising over *all* diagnoses containing ``t`` would be wrong: adding
    ``t`` to any diagnosis gives another diagnosis, so non-causes would get
    a non-empty set and causes could get a smaller one than their smallest
    contingency set warrants.
    """
    containing = diagnoses_containing(problem, t, budget, minimal)
    if not containing:
        return ()
    smallest = min(len(dg) for dg in containing)
    return tuple(dg for dg in containing if len(dg) == smallest)


def causes_from_diagnoses(problem, budget=None):
    """Causes are tuples in some minimal diagnosis; ``ρ(t) = 1/|s|`` for
    ``s`` in ``mcd(t)``; contingency sets are ``Δ - {t}``."""
    minimal = minimal_diagnoses(problem, budget)
    components = sorted({t for dg in minimal for t in dg.abnormal})
    reports = []
    for t in components:
        containing = diagnoses_containing(problem, t, minimal=minimal)
        smallest = mcd(problem, t, minimal=minimal)
        reports.append(CauseReport(
            t, frozenset(dg.abnormal - {t} for dg in containing),
            Fraction(1, len(smallest[0]))))
    return CauseSet(tuple(reports), problem.query,
                    problem.instance.fingerprint())
