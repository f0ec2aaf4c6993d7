"""Actual causes, database repairs and consistency-based diagnosis for
conjunctive queries and denial constraints, with brute-force cross-checks."""

from .bridge import (CausePackage, c_repairs_from_mrc, cause_package,
                     causes_from_repairs, cqa_from_causes, df_sets,
                     repairs_from_cause_contingencies, repairs_from_causes,
                     subset_repairs_literal, validate_package)
from .budget import SearchBudget
from .causality import (actual_causes, is_actual_cause, is_counterfactual_cause,
                        minimal_contingency_sets, most_responsible_causes,
                        responsibility)
from .crosscheck import crosscheck
from .diagnosis import (build_diagnosis_problem, causes_from_diagnoses,
                        diagnoses_containing, is_diagnosis, mcd,
                        minimal_diagnoses)
from .errors import (ArityMismatch, BudgetExceeded, ConflictingTag,
                     DBCauseError, InconsistentPackage, NotBoolean,
                     NotEndogenous, NotInInstance, ObservationAbsent,
                     ParseError, PartitionNotSupported, QueryNotSatisfied,
                     ResourceExceeded, UnknownPredicate)
from .facts import format_facts, load_facts, parse_facts
from .hitting import is_hitting_set, minimal_hitting_sets
from .query import (ConjunctiveQuery, DenialConstraint, answers, dc_of_query,
                    evaluate_bcq, ground_query, parse_dc, parse_ground_atom,
                    parse_query, violation_view, violates, witness_images,
                    witnesses)
from .relational import ENDO, EXO, GroundAtom, Instance, atom, make_instance
from .repairs import (c_repairs, conflict_hypergraph, consistent_answer_ground,
                      is_consistent, repairs, s_repairs)
from .results import CauseReport, CauseSet, Diagnosis, RepairSet

__all__ = [
    "CausePackage", "c_repairs_from_mrc", "cause_package",
    "causes_from_repairs", "cqa_from_causes", "df_sets",
    "repairs_from_cause_contingencies", "repairs_from_causes",
    "subset_repairs_literal", "validate_package", "SearchBudget",
    "actual_causes", "is_actual_cause", "is_counterfactual_cause",
    "minimal_contingency_sets", "most_responsible_causes", "responsibility",
    "crosscheck", "build_diagnosis_problem", "causes_from_diagnoses",
    "diagnoses_containing", "is_diagnosis", "mcd", "minimal_diagnoses",
    "ArityMismatch", "BudgetExceeded", "ConflictingTag", "DBCauseError",
    "InconsistentPackage", "NotBoolean", "NotEndogenous", "NotInInstance",
    "ObservationAbsent", "ParseError", "PartitionNotSupported",
    "QueryNotSatisfied", "ResourceExceeded", "UnknownPredicate",
    "format_facts", "load_facts", "parse_facts", "is_hitting_set",
    "minimal_hitting_sets", "ConjunctiveQuery", "DenialConstraint",
    "answers", "dc_of_query", "evaluate_bcq", "ground_query", "parse_dc",
    "parse_ground_atom", "parse_query", "violation_view", "violates",
    "witness_images", "witnesses", "ENDO", "EXO", "GroundAtom", "Instance",
    "atom", "make_instance", "c_repairs", "conflict_hypergraph",
    "consistent_answer_ground", "is_consistent", "repairs", "s_repairs",
    "CauseReport", "CauseSet", "Diagnosis", "RepairSet"
]

__version__ = "0.1.0"
