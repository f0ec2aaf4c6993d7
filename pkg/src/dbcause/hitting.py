"""Enumeration of subset-minimal hitting sets of a finite set family."""

from .budget import as_budget
from .relational import set_key


def is_hitting_set(candidate, collection):
    candidate = frozenset(candidate)
    return all(candidate & frozenset(member) for member in collection)


def minimal_hitting_sets(collection, budget=None):
    """All inclusion-minimal sets that intersect every member of ``collection``.

    An empty collection yields ``{frozenset()}``; a collection containing the
    empty set yields no hitting sets at all.

    The search branches on the smallest uncovered member (ties broken by the
    canonical order), adding one of its elements at a time.  Any branch in
    which some chosen element no longer has a private member (one hit by it
    alone) is cut, since every extension of it would be non-minimal.
    """
    budget = as_budget(budget)
    edges = sorted({frozenset(m) for m in collection}, key=set_key)
    if not edges:
        return frozenset({frozenset()})
    if not edges[0]:
        return frozenset()

    found = set()

    def has_dead_element(chosen):
        # an element with no private edge stays dead in every extension
        for v in chosen:
            if not any(e & chosen == {v} for e in edges if v in e):
                return True
        return False

    def search(chosen):
        budget.tick()
        uncovered = next((e for e in edges if not (e & chosen)), None)
        if uncovered is None:
            found.add(chosen)
            return
        for v in sorted(uncovered):
            nxt = chosen | {v}
            if any(f <= nxt for f in found) or has_dead_element(nxt):
                continue
            search(nxt)

    search(frozenset())
    return frozenset(found)
