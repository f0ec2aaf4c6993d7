"""Reader for the line-oriented facts format.

::

    % comment
    [endogenous]            % default tag for the facts that follow
    R(a4,a3).
    S(a3). @exo             % per-fact override
    [exogenous]
    R(a2,a1).

Facts before any section header are endogenous.
"""

import re

from .errors import ParseError
from .query import parse_ground_atom
from .relational import ENDO, EXO, Instance, make_instance

_SECTION = re.compile(r"\[(endogenous|exogenous)\]\Z")
_TAG = re.compile(r"(?P<fact>.*\.)\s*@(?P<tag>exo|endo)\Z", re.S)


def _strip_comment(line):
    in_string = escaped = False
    for i, ch in enumerate(line):
        if escaped:
            escaped = False
        elif ch == "\\" and in_string:
            escaped = True
        elif ch == '"':
            in_string = not in_string
        elif ch == "%" and not in_string:
            return line[:i]
    return line


def parse_facts(text):
    """Parse facts text into an :class:`Instance`."""
    tagged = []
    default = ENDO
    offset = 0
    for raw in text.splitlines(keepends=True):
        line_start = offset
        offset += len(raw)
        body = _strip_comment(raw.rstrip("\r\n")).strip()
        if not body:
            continue
        lead = len(raw) - len(raw.lstrip())
        section = _SECTION.match(body)
        if section:
            default = ENDO if section.group(1) == "endogenous" else EXO
            continue
        tag = default
        m = _TAG.match(body)
        if m:
            body, tag = m.group("fact").strip(), m.group("tag")
        if not body.endswith("."):
            raise ParseError("a fact must end with '.'", text, line_start + lead)
        try:
            a = parse_ground_atom(body)
        except ParseError as err:
            pos = line_start + lead + (err.pos or 0)
            raise ParseError(str(err).split(" (line")[0], text, pos) from None
        tagged.append((a, tag))
    return make_instance(tagged)


def load_facts(path):
    with open(path, encoding="utf-8") as fh:
        return parse_facts(fh.read())


def format_facts(instance):
    """Render an instance back into facts text (round-trips through
    :func:`parse_facts`)."""
    lines = ["[endogenous]"]
    lines += [f"{a}." for a in sorted(instance.endogenous)]
    if instance.exogenous:
        lines.append("[exogenous]")
        lines += [f"{a}." for a in sorted(instance.exogenous)]
    return "\n".join(lines) + "\n"


__all__ = ["parse_facts", "load_facts", "format_facts", "Instance"]
