"""Plain result records shared by the engines and the brute-force oracle."""

from dataclasses import dataclass, field
from fractions import Fraction

from .relational import set_key, sorted_sets


def responsibility_from_sizes(sizes):
    """``1 / (1 + smallest contingency size)``, or 0 when there is none."""
    sizes = list(sizes)
    if not sizes:
        return Fraction(0)
    return Fraction(1, 1 + min(sizes))


@dataclass(frozen=True)
class CauseReport:
    cause: object
    minimal_contingencies: frozenset
    responsibility: Fraction

    @classmethod
    def build(cls, cause, contingencies):
        contingencies = frozenset(frozenset(c) for c in contingencies)
        return cls(cause, contingencies,
                   responsibility_from_sizes(len(c) for c in contingencies))

    @property
    def is_counterfactual(self):
        return frozenset() in self.minimal_contingencies

    def sorted_contingencies(self):
        return sorted_sets(self.minimal_contingencies)


@dataclass(frozen=True)
class CauseSet:
    """Actual causes of a boolean query on one instance.

    ``reports`` is sorted by cause in canonical atom order.
    """

    reports: tuple
    query: object = None
    instance_id: str = ""

    def __post_init__(self):
        reports = tuple(sorted(self.reports, key=lambda r: r.cause))
        causes = [r.cause for r in reports]
        if len(set(causes)) != len(causes):
            raise ValueError("duplicate cause in CauseSet")
        object.__setattr__(self, "reports", reports)

    @property
    def causes(self):
        return frozenset(r.cause for r in self.reports)

    def __len__(self):
        return len(self.reports)

    def __iter__(self):
        return iter(self.reports)

    def __contains__(self, atom):
        return any(r.cause == atom for r in self.reports)

    def get(self, atom):
        for r in self.reports:
            if r.cause == atom:
                return r
        return None

    def responsibility(self, atom):
        r = self.get(atom)
        return r.responsibility if r is not None else Fraction(0)

    def responsibilities(self):
        return {r.cause: r.responsibility for r in self.reports}

    def contingencies(self):
        return {r.cause: r.minimal_contingencies for r in self.reports}

    def same_causes(self, other):
        """Equal causes, contingency families and responsibilities."""
        return ({r.cause: (r.minimal_contingencies, r.responsibility)
                 for r in self.reports}
                == {r.cause: (r.minimal_contingencies, r.responsibility)
                    for r in other.reports})


@dataclass(frozen=True)
class RepairSet:
    """Repairs of one instance, kind ``"S"`` or ``"C"``.

    ``deleted`` maps each repair to the atoms removed from the original.
    ``repairs`` is ordered by the canonical order of those deletion sets.
    """

    kind: str
    repairs: tuple
    deleted: dict = field(default_factory=dict, compare=False, hash=False)

    @classmethod
    def from_deletions(cls, instance, deletions, kind):
        deletions = sorted_sets({frozenset(d) for d in deletions})
        repairs, deleted = [], {}
        for d in deletions:
            r = instance.delete(d)
            repairs.append(r)
            deleted[r] = d
        return cls(kind, tuple(repairs), deleted)

    @property
    def deletion_sets(self):
        return frozenset(self.deleted[r] for r in self.repairs)

    def sorted_deletions(self):
        return [self.deleted[r] for r in self.repairs]

    def __len__(self):
        return len(self.repairs)

    def __iter__(self):
        return iter(self.repairs)


@dataclass(frozen=True)
class Diagnosis:
    abnormal: frozenset

    def __len__(self):
        return len(self.abnormal)

    def sort_key(self):
        return set_key(self.abnormal)
