"""
Causes and responsibility on a small path query
===============================================

Six tuples, one boolean query, and the question of which tuples are to
blame for the query being true.
"""

from pathlib import Path

from dbcause import (actual_causes, is_counterfactual_cause, load_facts,
                     most_responsible_causes, parse_ground_atom,
                     parse_query)

DATA = Path(__file__).resolve().parent.parent / "data"

# %%
# The instance has a two-step path ``S(a4) -> R(a4,a3) -> S(a3)`` and a
# self loop ``S(a3) -> R(a3,a3) -> S(a3)``.  Every tuple is endogenous, so
# every tuple may be blamed.

d = load_facts(DATA / "path.facts")
q = parse_query("q() :- S(X), R(X,Y), S(Y).")
print(d)

# %%
# ``S(a3)`` sits on both paths.  Removing it alone makes the query false,
# so it is a counterfactual cause.

print(is_counterfactual_cause(d, q, parse_ground_atom("S(a3)")))

# %%
# The other tuples on a path are actual causes: each becomes counterfactual
# once some other tuples (a contingency set) are removed first.
# Responsibility shrinks with the size of the smallest contingency set.

for report in actual_causes(d, q):
    sets = ", ".join("{" + ", ".join(map(str, sorted(g))) + "}"
                     for g in report.sorted_contingencies())
    print(f"{report.cause}  rho={report.responsibility}  via {sets}")

# %%
# ``R(a2,a1)`` and ``S(a2)`` never take part in a witness, so they are not
# causes at all.  The most responsible cause is the one with the highest
# responsibility.

print(sorted(map(str, most_responsible_causes(d, q))))
