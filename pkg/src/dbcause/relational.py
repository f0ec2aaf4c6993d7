"""Ground atoms and relational instances split into endogenous/exogenous parts.

Constants are plain ``str`` symbols; two constants are the same iff their
symbols are identical.  Everything here is immutable.
"""

import hashlib
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import ArityMismatch, ConflictingTag

ENDO = "endo"
EXO = "exo"

_BARE_CONSTANT = re.compile(r"[a-z0-9][A-Za-z0-9_]*\Z")


class PredicateSig(NamedTuple):
    name: str
    arity: int


def render_constant(symbol):
    if _BARE_CONSTANT.match(symbol):
        return symbol
    escaped = symbol.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


@dataclass(frozen=True, order=True)
class GroundAtom:
    """``predicate(args...)`` over constants.

    Ordering is the canonical one used for every enumeration output:
    predicate name first, then the argument tuple, both lexicographic.
    """

    predicate: str
    args: tuple

    def __post_init__(self):
        if not isinstance(self.args, tuple):
            object.__setattr__(self, "args", tuple(self.args))

    @property
    def signature(self):
        return PredicateSig(self.predicate, len(self.args))

    def __str__(self):
        return f"{self.predicate}({','.join(map(render_constant, self.args))})"

    def __repr__(self):
        return f"GroundAtom({self})"


def atom(predicate, *args):
    """Shorthand constructor: ``atom("R", "a", "b")``."""
    return GroundAtom(predicate, tuple(args))


def sorted_atoms(atoms):
    return sorted(atoms)


def set_key(atoms):
    """Canonical sort key for a set of atoms: size first, then members."""
    return (len(atoms), tuple(sorted(atoms)))


def sorted_sets(sets):
    return sorted(sets, key=set_key)


def check_schema(atoms, schema=None):
    """Check that every predicate name is used with a single arity.

    Returns the resulting ``{name: arity}`` schema.  When ``schema`` is given
    it is extended in place (and checked against).
    """
    schema = {} if schema is None else schema
    for a in atoms:
        known = schema.setdefault(a.predicate, len(a.args))
        if known != len(a.args):
            raise ArityMismatch(
                f"{a} has arity {len(a.args)} but {a.predicate} has arity {known}")
    return schema


@dataclass(frozen=True)
class Instance:
    """A finite set of ground atoms, each tagged endogenous or exogenous."""

    endogenous: frozenset = frozenset()
    exogenous: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "endogenous", frozenset(self.endogenous))
        object.__setattr__(self, "exogenous", frozenset(self.exogenous))
        both = self.endogenous & self.exogenous
        if both:
            raise ConflictingTag(
                f"{min(both)} is tagged both endogenous and exogenous")
        check_schema(self.atoms)

    @classmethod
    def from_atoms(cls, atoms, exogenous=()):
        """All of ``atoms`` endogenous, plus the given exogenous ones."""
        return cls(frozenset(atoms), frozenset(exogenous))

    @property
    def atoms(self):
        return self.endogenous | self.exogenous

    @property
    def schema(self):
        return check_schema(sorted(self.atoms))

    @property
    def is_partitioned(self):
        """True when at least one tuple is exogenous."""
        return bool(self.exogenous)

    def tag(self, a):
        if a in self.endogenous:
            return ENDO
        if a in self.exogenous:
            return EXO
        return None

    def __contains__(self, a):
        return a in self.endogenous or a in self.exogenous

    def __len__(self):
        return len(self.endogenous) + len(self.exogenous)

    def __iter__(self):
        return iter(sorted(self.atoms))

    def delete(self, atoms):
        return delete(self, atoms)

    def all_endogenous(self):
        """The same atoms with the partition dropped (``D^n = D``)."""
        return Instance(self.atoms, frozenset())

    def fingerprint(self):
        """Short stable digest of the tagged contents."""
        h = hashlib.sha256()
        for a in sorted(self.atoms):
            h.update(f"{a}@{self.tag(a)}\n".encode())
        return h.hexdigest()[:16]

    def __str__(self):
        parts = [str(a) for a in sorted(self.endogenous)]
        parts += [f"{a}@exo" for a in sorted(self.exogenous)]
        return "{" + ", ".join(parts) + "}"


def make_instance(tagged: Iterable):
    """Build an instance from ``(atom, tag)`` pairs.

    ``tag`` is ``"endo"`` or ``"exo"``; a bare atom (no pair) is endogenous.
    Repeated identical pairs collapse.  An atom listed with both tags raises
    :class:`ConflictingTag`; inconsistent arities raise :class:`ArityMismatch`.
    """
    endo, exo = set(), set()
    for item in tagged:
        if isinstance(item, GroundAtom):
            a, tag = item, ENDO
        else:
            a, tag = item
        if tag == ENDO:
            endo.add(a)
        elif tag == EXO:
            exo.add(a)
        else:
            raise ValueError(f"unknown tag {tag!r}; expected 'endo' or 'exo'")
    return Instance(frozenset(endo), frozenset(exo))


def delete(instance, atoms):
    atoms = frozenset(atoms)
    return Instance(instance.endogenous - atoms, instance.exogenous - atoms)


def symmetric_difference(d1, d2):
    """Atoms in exactly one of the two instances; tags are ignored."""
    return frozenset(d1.atoms ^ d2.atoms)


def minimal_sets(sets):
    """The inclusion-minimal members of a family of sets, each kept once."""
    kept = []
    for s in sorted(set(map(frozenset, sets)), key=set_key):
        if not any(k <= s for k in kept):
            kept.append(s)
    return frozenset(kept)


def maximal_sets(sets):
    """The inclusion-maximal members of a family of sets, each kept once."""
    kept = []
    for s in sorted(set(map(frozenset, sets)), key=set_key, reverse=True):
        if not any(s <= k for k in kept):
            kept.append(s)
    return frozenset(kept)
