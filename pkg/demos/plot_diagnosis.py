"""
A query that should not hold, as a diagnosis problem
====================================================

Treat the query as an observed failure and the tuples as components that
may be abnormal.  A diagnosis is a set of abnormal tuples whose removal
explains the failure away.
"""

from pathlib import Path

from dbcause import (build_diagnosis_problem, causes_from_diagnoses,
                     load_facts, mcd, minimal_diagnoses, parse_query)

DATA = Path(__file__).resolve().parent.parent / "data"

# %%
# Only the two ``S`` tuples are endogenous here; ``R(a4,a3)`` is taken as
# given.

d = load_facts(DATA / "path_partitioned.facts")
q = parse_query("q() :- S(X), R(X,Y), S(Y).")
problem = build_diagnosis_problem(d, q)
print(problem.system_description.render())

# %%
# Declaring either ``S`` tuple abnormal is enough.

for dg in minimal_diagnoses(problem):
    print(sorted(map(str, dg.abnormal)))

# %%
# A tuple's responsibility is one over the size of the smallest minimal
# diagnosis that contains it.

for report in causes_from_diagnoses(problem):
    smallest = mcd(problem, report.cause)[0]
    print(report.cause, report.responsibility, len(smallest))
