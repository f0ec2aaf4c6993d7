"""Shorthand for writing expected values in tests."""

from pathlib import Path

from dbcause import parse_ground_atom

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"

PATH_QUERY = "q() :- S(X), R(X,Y), S(Y)."
PR_JOIN = ":- P(X,Y), R(Y,Z)."
RS_JOIN = ":- R(X,Y), S(Y,Z)."


def A(text):
    return parse_ground_atom(text)


def atoms(*texts):
    return frozenset(A(t) for t in texts)


def family(*groups):
    """Family of atom sets, one list of atom texts per set."""
    return frozenset(atoms(*g) for g in groups)


# one "PASS/FAIL" line per acceptance criterion, printed at session end
ACCEPTANCE_LINES = []
