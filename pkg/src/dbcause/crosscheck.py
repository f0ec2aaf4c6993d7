"""Run every cause/repair/diagnosis reduction on one input against the oracle."""

from dataclasses import dataclass, field

from .bridge import (c_repairs_from_mrc, cause_package, causes_from_repairs,
                     cqa_from_causes, repairs_from_cause_contingencies,
                     repairs_from_causes)
from .budget import as_budget
from .causality import actual_causes
from .errors import InconsistentPackage
from .diagnosis import (build_diagnosis_problem, causes_from_diagnoses,
                        minimal_diagnoses)
from .hitting import minimal_hitting_sets
from .oracle import (brute_c_repairs, brute_causes, brute_min_diagnoses,
                     brute_s_repairs)
from .query import as_boolean, dc_of_query, evaluate_bcq
from .relational import sorted_sets
from .repairs import c_repairs, conflict_hypergraph, s_repairs

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ""
    counterexample: dict = field(default_factory=dict)


@dataclass
class CrosscheckReport:
    checks: list

    @property
    def passed(self):
        return all(c.status != FAIL for c in self.checks)

    def __iter__(self):
        return iter(self.checks)


def _sets(family):
    return [sorted(map(str, s)) for s in sorted_sets(family)]


def _family_diff(expected, actual):
    expected, actual = frozenset(expected), frozenset(actual)
    return {"missing": _sets(expected - actual),
            "unexpected": _sets(actual - expected)}


def _compare_families(name, expected, actual, what):
    if frozenset(expected) == frozenset(actual):
        return CheckResult(name, PASS, f"{len(frozenset(actual))} {what} agree")
    return CheckResult(name, FAIL, f"{what} differ", _family_diff(expected, actual))


def _cause_table(cs):
    return {str(r.cause): {
        "responsibility": str(r.responsibility),
        "contingency_sets": _sets(r.minimal_contingencies)} for r in cs}


def _compare_causes(name, expected, actual):
    if expected.same_causes(actual):
        return CheckResult(name, PASS, f"{len(actual)} causes agree")
    exp, act = _cause_table(expected), _cause_table(actual)
    diff = {k: {"expected": exp.get(k), "actual": act.get(k)}
            for k in sorted(set(exp) | set(act)) if exp.get(k) != act.get(k)}
    return CheckResult(name, FAIL, "cause reports differ", {"causes": diff})


def crosscheck(d, query=None, constraints=(), budget=None, oracle_budget=None,
               package=None):
    """Check every applicable reduction on ``d``.

    ``query`` (boolean) drives the cause and diagnosis checks; the repair
    checks use ``constraints``, or ``κ(query)`` when none are given.
    ``package`` replaces the computed cause package in the repairs-from-causes
    check (used to exercise its failure path).
    """
    budget = as_budget(budget)
    checks = []
    constraints = list(constraints)

    if query is not None:
        query = as_boolean(query)
        oracle = brute_causes(d, query, oracle_budget)
        checks.append(_compare_causes(
            "direct_causes", oracle, actual_causes(d, query, budget)))
        checks.append(_compare_causes(
            "causes_from_repairs", oracle, causes_from_repairs(d, query, budget)))
        if evaluate_bcq(d, query, budget):
            problem = build_diagnosis_problem(d, query, budget)
            checks.append(_compare_causes(
                "causes_from_diagnoses", oracle,
                causes_from_diagnoses(problem, budget)))
            checks.append(_compare_families(
                "minimal_diagnoses",
                [dg.abnormal for dg in brute_min_diagnoses(problem, oracle_budget)],
                [dg.abnormal for dg in minimal_diagnoses(problem, budget)],
                "minimal diagnoses"))
            # minimal diagnoses are the all-endogenous S-repair deletion sets
            srep = brute_s_repairs(d, [dc_of_query(query)], oracle_budget)
            checks.append(_compare_families(
                "diagnoses_vs_repairs",
                [s for s in srep.deletion_sets if s <= d.endogenous],
                [dg.abnormal for dg in minimal_diagnoses(problem, budget)],
                "deletion sets"))
        else:
            ok = not len(oracle)
            checks.append(CheckResult(
                "causes_from_diagnoses", PASS if ok else FAIL,
                "query false: no diagnosis problem and no causes"))
        if not constraints:
            constraints = [dc_of_query(query)]

    if constraints:
        brute_s = brute_s_repairs(d, constraints, oracle_budget)
        brute_c = brute_c_repairs(d, constraints, oracle_budget)
        graph = conflict_hypergraph(d, constraints, budget)
        mhs = minimal_hitting_sets(graph.edges, budget)
        engine_s = s_repairs(d, constraints, budget, graph)
        checks.append(_compare_families(
            "hitting_set_duality", mhs, engine_s.deletion_sets, "deletion sets"))
        checks.append(_compare_families(
            "s_repairs", brute_s.deletion_sets, engine_s.deletion_sets,
            "S-repairs"))
        checks.append(_compare_families(
            "c_repairs", brute_c.deletion_sets,
            c_repairs(d, constraints, budget, graph).deletion_sets, "C-repairs"))

        for i, dc in enumerate(constraints):
            single_s = brute_s_repairs(d, [dc], oracle_budget)
            checks.append(_compare_families(
                f"repairs_from_cause_contingencies[{i}]", single_s.deletion_sets,
                repairs_from_cause_contingencies(d, dc, budget).deletion_sets,
                "S-repairs"))
            checks.append(_compare_families(
                f"c_repairs_from_mrc[{i}]",
                brute_c_repairs(d, [dc], oracle_budget).deletion_sets,
                c_repairs_from_mrc(d, dc, budget).deletion_sets, "C-repairs"))
            wrong = []
            for a in sorted(d.atoms):
                expected = all(a not in s for s in single_s.deletion_sets)
                if cqa_from_causes(d, dc, a, budget) != expected:
                    wrong.append({"atom": str(a), "expected": expected})
            checks.append(CheckResult(
                f"cqa_from_causes[{i}]", FAIL if wrong else PASS,
                f"{len(d)} ground atoms checked",
                {"mismatches": wrong} if wrong else {}))

        if d.is_partitioned:
            checks.append(CheckResult(
                "repairs_from_causes", SKIP,
                "defined only for instances with no exogenous tuples"))
        else:
            pkg = package if package is not None else cause_package(
                d, constraints, budget)
            try:
                rebuilt = repairs_from_causes(d, constraints, pkg, budget)
            except InconsistentPackage as err:
                checks.append(CheckResult(
                    "repairs_from_causes", FAIL, f"inconsistent package: {err}"))
            else:
                checks.append(_compare_families(
                    "repairs_from_causes", brute_s.deletion_sets,
                    rebuilt.deletion_sets, "S-repairs"))

    return CrosscheckReport(checks)
