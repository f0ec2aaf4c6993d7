"""Small random instances, queries and constraints for property tests.

Two front ends over the same shapes: hypothesis strategies (shrinkable) and
a seeded ``random.Random`` generator used by the acceptance suite.
"""

import random

from hypothesis import strategies as st

from dbcause.query import ConjunctiveQuery, DenialConstraint, QueryAtom, Variable
from dbcause.relational import EXO, GroundAtom, Instance, make_instance

SCHEMA = {"R": 2, "S": 1, "T": 2}
CONSTANTS = ("a", "b", "c")
VARIABLES = tuple(Variable(n) for n in ("X", "Y", "Z"))

ALL_ATOMS = tuple(sorted({
    GroundAtom(p, (x,) if n == 1 else (x, y))
    for p, n in SCHEMA.items()
    for x in CONSTANTS for y in CONSTANTS}))


# ---------------------------------------------------------------- hypothesis


@st.composite
def instances(draw, max_endo=8, max_exo=2):
    atoms = draw(st.lists(st.sampled_from(ALL_ATOMS), unique=True,
                          max_size=max_endo + max_exo))
    n_exo = draw(st.integers(0, min(max_exo, len(atoms))))
    endo = atoms[:len(atoms) - n_exo][:max_endo]
    return Instance(frozenset(endo), frozenset(atoms[len(atoms) - n_exo:]))


def endogenous_instances(max_size=8):
    return instances(max_endo=max_size, max_exo=0)


_terms = st.one_of(st.sampled_from(VARIABLES),
                   st.sampled_from(VARIABLES),
                   st.sampled_from(CONSTANTS))


@st.composite
def query_atoms(draw):
    pred = draw(st.sampled_from(sorted(SCHEMA)))
    return QueryAtom(pred, tuple(draw(_terms) for _ in range(SCHEMA[pred])))


def bcqs(max_atoms=3):
    return st.lists(query_atoms(), min_size=1, max_size=max_atoms).map(
        lambda atoms: ConjunctiveQuery((), tuple(atoms)))


def dcs(max_atoms=3):
    return st.lists(query_atoms(), min_size=1, max_size=max_atoms).map(
        lambda atoms: DenialConstraint(tuple(atoms)))


def dc_lists(max_dcs=3):
    return st.lists(dcs(), min_size=1, max_size=max_dcs)


# ---------------------------------------------------------- seeded random


class CaseGenerator:
    """Deterministic stream of random cases from one seed."""

    def __init__(self, seed):
        self.rng = random.Random(seed)

    def atoms(self, n):
        return self.rng.sample(ALL_ATOMS, n)

    def instance(self, max_endo=10, max_exo=2):
        n_endo = self.rng.randint(0, max_endo)
        n_exo = self.rng.randint(0, max_exo)
        atoms = self.atoms(n_endo + n_exo)
        return make_instance([(a, EXO) for a in atoms[n_endo:]] + atoms[:n_endo])

    def endogenous_instance(self, max_size=10):
        return Instance(frozenset(self.atoms(self.rng.randint(0, max_size))))

    def term(self):
        if self.rng.random() < 0.2:
            return self.rng.choice(CONSTANTS)
        return self.rng.choice(VARIABLES)

    def query_atom(self):
        pred = self.rng.choice(sorted(SCHEMA))
        return QueryAtom(pred, tuple(self.term() for _ in range(SCHEMA[pred])))

    def body(self, max_atoms=3):
        return tuple(self.query_atom()
                     for _ in range(self.rng.randint(1, max_atoms)))

    def bcq(self, max_atoms=3):
        return ConjunctiveQuery((), self.body(max_atoms))

    def dc(self, max_atoms=3):
        return DenialConstraint(self.body(max_atoms))

    def dcs(self, max_dcs=3):
        return [self.dc() for _ in range(self.rng.randint(1, max_dcs))]

    def fresh_atom(self, d):
        outside = [a for a in ALL_ATOMS if a not in d]
        return self.rng.choice(outside) if outside else None
