"""
Repairs read off from causes
============================

Two denial constraints share one tuple.  The subset-minimal repairs can be
computed by searching deletions directly, or rebuilt from the causes of
each constraint's violation.
"""

from pathlib import Path

from dbcause import (cause_package, load_facts, parse_dc, repairs_from_causes,
                     s_repairs)

DATA = Path(__file__).resolve().parent.parent / "data"

d = load_facts(DATA / "prs_chain.facts")
sigma = [parse_dc(":- P(X,Y), R(Y,Z)."), parse_dc(":- R(X,Y), S(Y,Z).")]

# %%
# Direct search: minimal hitting sets of the conflict hypergraph.

for deleted in s_repairs(d, sigma).sorted_deletions():
    print("delete", sorted(map(str, deleted)))

# %%
# Each constraint turns into a boolean query that is true exactly when the
# constraint is violated.  The package records, per constraint, every
# actual cause with its contingency sets.

pkg = cause_package(d, sigma)
for i in range(len(sigma)):
    print(sigma[i], "->", sorted(map(str, pkg.causes(i))))

# %%
# ``R(b,c)`` is a cause for both constraints, so deleting it alone repairs
# the instance.  The other repair must remove one cause from each side.

rebuilt = repairs_from_causes(d, sigma, pkg)
print(rebuilt.deletion_sets == s_repairs(d, sigma).deletion_sets)
