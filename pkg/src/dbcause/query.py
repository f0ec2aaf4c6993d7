"""Conjunctive queries and denial constraints: parsing, conversion, evaluation.

Concrete syntax is Datalog style::

    q(X) :- R(X,Y), S(Y,Z).      % open query, free variable X
    q() :- S(X), R(X,Y), S(Y).   % boolean query
    :- P(X,Y), R(Y,Z).           % denial constraint

Identifiers starting with an uppercase letter or ``_`` are variables;
anything else (lowercase or digit initial, or double-quoted) is a constant.
"""

import re
from dataclasses import dataclass
from itertools import count

from .errors import ArityMismatch, NotBoolean, ParseError, UnknownPredicate
from .relational import GroundAtom, minimal_sets, render_constant, set_key


@dataclass(frozen=True, order=True)
class Variable:
    name: str

    def __str__(self):
        return self.name


def is_variable(term):
    return isinstance(term, Variable)


def render_term(term):
    return term.name if isinstance(term, Variable) else render_constant(term)


@dataclass(frozen=True)
class QueryAtom:
    predicate: str
    args: tuple

    @property
    def variables(self):
        return tuple(t for t in self.args if isinstance(t, Variable))

    def ground(self, assignment):
        return GroundAtom(self.predicate, tuple(
            assignment[t] if isinstance(t, Variable) else t for t in self.args))

    def substitute(self, mapping):
        return QueryAtom(self.predicate, tuple(
            mapping.get(t, t) if isinstance(t, Variable) else t
            for t in self.args))

    def __str__(self):
        return f"{self.predicate}({','.join(map(render_term, self.args))})"


def _ordered_variables(atoms):
    seen = {}
    for a in atoms:
        for v in a.variables:
            seen.setdefault(v, None)
    return tuple(seen)


@dataclass(frozen=True)
class ConjunctiveQuery:
    """``name(free_vars) :- atoms``; boolean when ``free_vars`` is empty."""

    free_vars: tuple
    atoms: tuple
    name: str = "q"

    def __post_init__(self):
        object.__setattr__(self, "free_vars", tuple(self.free_vars))
        object.__setattr__(self, "atoms", tuple(self.atoms))
        if not self.atoms:
            raise ValueError("a conjunctive query needs at least one atom")
        body_vars = set(_ordered_variables(self.atoms))
        for v in self.free_vars:
            if v not in body_vars:
                raise ValueError(f"free variable {v} does not occur in the body")
        _check_atom_arities(self.atoms)

    @property
    def is_boolean(self):
        return not self.free_vars

    @property
    def variables(self):
        return _ordered_variables(self.atoms)

    def __str__(self):
        head = f"{self.name}({','.join(v.name for v in self.free_vars)})"
        return f"{head} :- {', '.join(map(str, self.atoms))}."


@dataclass(frozen=True)
class DenialConstraint:
    """Forbids any joint match of ``atoms`` in an instance."""

    atoms: tuple

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        if not self.atoms:
            raise ValueError("a denial constraint needs at least one atom")
        _check_atom_arities(self.atoms)

    def __str__(self):
        return f":- {', '.join(map(str, self.atoms))}."


@dataclass(frozen=True)
class Witness:
    """A satisfying assignment together with the ground atoms it uses."""

    image: frozenset
    assignment: tuple  # sorted ((Variable, constant), ...) pairs

    def sort_key(self):
        return (set_key(self.image), tuple((v.name, c) for v, c in self.assignment))

    @property
    def mapping(self):
        return dict(self.assignment)


def _check_atom_arities(atoms, schema=None):
    arities = {}
    for a in atoms:
        known = arities.setdefault(a.predicate, len(a.args))
        if known != len(a.args):
            raise ArityMismatch(
                f"{a.predicate} used with arities {known} and {len(a.args)}")
        if schema is not None:
            if a.predicate not in schema:
                raise UnknownPredicate(f"unknown predicate {a.predicate}")
            if schema[a.predicate] != len(a.args):
                raise ArityMismatch(
                    f"{a.predicate} has arity {schema[a.predicate]}, "
                    f"used with {len(a.args)}")


# --------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"""
    (?P<ws>\s+|%[^\n]*)
  | (?P<implies>:-)
  | (?P<builtin><=|>=|!=|<>|=|<|>)
  | (?P<punct>[(),.])
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<ident>[A-Za-z0-9_][A-Za-z0-9_]*)
""", re.VERBOSE)


def _tokenize(text):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind == "builtin":
            raise ParseError(
                f"built-in comparison {m.group()!r} is not supported", text, pos)
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


def _unquote(raw):
    return re.sub(r"\\(.)", r"\1", raw[1:-1])


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self._fresh = count()

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ParseError(message, self.text, tok[2])

    def expect(self, value):
        tok = self.next()
        if tok[1] != value or tok[0] == "string":
            shown = tok[1] or "end of input"
            raise self.error(f"expected {value!r}, found {shown!r}", tok)
        return tok

    def term(self, ground=False):
        kind, value, pos = tok = self.next()
        if kind == "string":
            return _unquote(value)
        if kind != "ident":
            shown = value or "end of input"
            raise self.error(f"expected a term, found {shown!r}", tok)
        if value[0].isupper() or value[0] == "_":
            if ground:
                raise self.error(f"variable {value} not allowed in a ground atom", tok)
            if value == "_":
                return Variable(f"_{next(self._fresh)}")
            return Variable(value)
        return value

    def predicate_name(self):
        tok = self.next()
        if tok[0] != "ident":
            shown = tok[1] or "end of input"
            raise self.error(f"expected a predicate name, found {shown!r}", tok)
        return tok[1]

    def atom(self, ground=False):
        name = self.predicate_name()
        self.expect("(")
        args = [self.term(ground)]
        while self.peek()[1] == ",":
            self.next()
            args.append(self.term(ground))
        self.expect(")")
        return name, tuple(args)

    def body(self):
        atoms = [QueryAtom(*self.atom())]
        while self.peek()[1] == ",":
            self.next()
            atoms.append(QueryAtom(*self.atom()))
        return atoms

    def head(self):
        name = self.predicate_name()
        self.expect("(")
        free = []
        if self.peek()[1] != ")":
            while True:
                tok = self.peek()
                t = self.term()
                if not isinstance(t, Variable):
                    raise self.error("query heads may only contain variables", tok)
                if t in free:
                    raise self.error(f"variable {t} repeated in head", tok)
                free.append(t)
                if self.peek()[1] != ",":
                    break
                self.next()
        self.expect(")")
        return name, free

    def end(self):
        tok = self.peek()
        if tok[0] != "eof":
            raise self.error(f"unexpected trailing input {tok[1]!r}", tok)


def parse_query(text, schema=None):
    """Parse ``name(Vars) :- body.`` into a :class:`ConjunctiveQuery`.

    A headless rule ``:- body.`` is accepted as a boolean query.
    """
    p = _Parser(text)
    if p.peek()[0] == "implies":
        name, free = "q", []
    else:
        name, free = p.head()
    p.expect(":-")
    atoms = p.body()
    p.expect(".")
    p.end()
    body_vars = set(_ordered_variables(atoms))
    for v in free:
        if v not in body_vars:
            raise ParseError(f"head variable {v} does not occur in the body",
                             text, 0)
    _check_atom_arities(atoms, schema)
    return ConjunctiveQuery(tuple(free), tuple(atoms), name)


def parse_dc(text, schema=None):
    """Parse a headless rule ``:- A1, ..., An.`` into a denial constraint."""
    p = _Parser(text)
    p.expect(":-")
    atoms = p.body()
    p.expect(".")
    p.end()
    _check_atom_arities(atoms, schema)
    return DenialConstraint(tuple(atoms))


def parse_ground_atom(text):
    """Parse ``R(a,b)`` (optionally followed by a period) into a GroundAtom."""
    p = _Parser(text)
    name, args = p.atom(ground=True)
    if p.peek()[1] == ".":
        p.next()
    p.end()
    return GroundAtom(name, args)


# --------------------------------------------------------------------------
# conversions


def dc_of_query(query):
    """The denial constraint that holds exactly when the boolean query is false."""
    if not query.is_boolean:
        raise NotBoolean(f"query {query} has free variables")
    return DenialConstraint(query.atoms)


def violation_view(dc):
    """The boolean query that is true exactly when ``dc`` is violated."""
    return ConjunctiveQuery((), dc.atoms)


def ground_query(query, answer):
    """Substitute an answer tuple for the free variables; yields a BCQ."""
    answer = tuple(answer)
    if len(answer) != len(query.free_vars):
        raise ArityMismatch(
            f"answer has {len(answer)} values, query has "
            f"{len(query.free_vars)} free variables")
    mapping = dict(zip(query.free_vars, answer))
    return ConjunctiveQuery((), tuple(a.substitute(mapping) for a in query.atoms),
                            query.name)


def ground_answer_dc(query, answer):
    """Denial constraint forbidding ``answer`` from being an answer to ``query``."""
    return dc_of_query(ground_query(query, answer))


def as_boolean(query):
    """Accept a boolean query or a denial constraint (its violation view)."""
    if isinstance(query, DenialConstraint):
        return violation_view(query)
    if not query.is_boolean:
        raise NotBoolean(f"query {query} has free variables")
    return query


# --------------------------------------------------------------------------
# evaluation


def _index(atoms):
    rel = {}
    for a in sorted(atoms):
        rel.setdefault(a.predicate, []).append(a.args)
    return rel


def _assignments(atoms, query_atoms, budget=None, stop_at_first=False):
    """Yield every assignment of the query's variables into ``atoms``.

    Naive backtracking join; atoms are visited in ascending relation size
    (ties keep query order) so the enumeration order is deterministic.
    """
    rel = _index(atoms)
    order = sorted(range(len(query_atoms)),
                   key=lambda i: (len(rel.get(query_atoms[i].predicate, ())), i))
    plan = [query_atoms[i] for i in order]
    if any(qa.predicate not in rel for qa in plan):
        return
    tick = budget.tick if budget is not None else None

    def extend(k, binding):
        if k == len(plan):
            yield dict(binding)
            return
        qa = plan[k]
        for tup in rel[qa.predicate]:
            if tick is not None:
                tick()
            if len(tup) != len(qa.args):
                continue
            added = []
            ok = True
            for term, value in zip(qa.args, tup):
                if isinstance(term, Variable):
                    bound = binding.get(term)
                    if bound is None:
                        binding[term] = value
                        added.append(term)
                    elif bound != value:
                        ok = False
                        break
                elif term != value:
                    ok = False
                    break
            if ok:
                yield from extend(k + 1, binding)
            for v in added:
                del binding[v]

    yield from extend(0, {})


def _atoms_of(d):
    return d.atoms if hasattr(d, "atoms") else frozenset(d)


def evaluate_bcq(d, query, budget=None):
    """``D |= Q`` for a boolean query (or a denial constraint's violation view).

    ``d`` may be an :class:`Instance` or any iterable of ground atoms.
    """
    query = as_boolean(query)
    for _ in _assignments(_atoms_of(d), query.atoms, budget):
        return True
    return False


def violates(d, dc, budget=None):
    return evaluate_bcq(d, violation_view(dc), budget)


def answers(d, query, budget=None):
    """All answer tuples; a boolean query yields ``{()}`` when true."""
    found = set()
    for binding in _assignments(_atoms_of(d), query.atoms, budget):
        found.add(tuple(binding[v] for v in query.free_vars))
    return frozenset(found)


def witnesses(d, query, minimal_only=False, budget=None):
    """Satisfying assignments of a boolean query with their atom images.

    Returned as a tuple in canonical order.  With ``minimal_only`` only one
    witness is kept per inclusion-minimal image.
    """
    query = as_boolean(query)
    found = {}
    for binding in _assignments(_atoms_of(d), query.atoms, budget):
        image = frozenset(qa.ground(binding) for qa in query.atoms)
        w = Witness(image, tuple(sorted(binding.items())))
        found[w] = None
    ws = sorted(found, key=Witness.sort_key)
    if not minimal_only:
        return tuple(ws)
    keep = minimal_sets(w.image for w in ws)
    out, seen = [], set()
    for w in ws:
        if w.image in keep and w.image not in seen:
            seen.add(w.image)
            out.append(w)
    return tuple(out)


def witness_images(d, query, minimal_only=True, budget=None):
    """Just the image sets of :func:`witnesses`, as a frozenset of frozensets."""
    query = as_boolean(query)
    images = {frozenset(qa.ground(b) for qa in query.atoms)
              for b in _assignments(_atoms_of(d), query.atoms, budget)}
    return minimal_sets(images) if minimal_only else frozenset(images)
