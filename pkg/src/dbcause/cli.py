"""Command-line entry point: ``dbcause <command> --facts FILE ...``.

Exit status: 0 on success, 1 when ``crosscheck`` reports a failing check,
2 on parse or validation errors, 3 when a search or oracle budget runs out.
"""

import argparse
import json
import sys
import time

from . import bridge, causality, diagnosis
from .budget import DEFAULT_NODE_LIMIT, SearchBudget
from .crosscheck import crosscheck
from .errors import DBCauseError, NotBoolean, ResourceExceeded
from .facts import load_facts
from .oracle import OracleBudget
from .query import (answers, dc_of_query, evaluate_bcq, ground_query, parse_dc,
                    parse_ground_atom, parse_query, violation_view, witness_images)
from .relational import sorted_sets
from .repairs import consistent_answer_ground, repairs

COMMANDS = ("check", "eval", "causes", "responsibility", "repairs", "cqa",
            "diagnose", "crosscheck")


# --------------------------------------------------------------------------
# serialization


def fraction_json(value):
    return {"num": value.numerator, "den": value.denominator,
            "decimal": float(value)}


def atoms_json(atoms):
    return [str(a) for a in sorted(atoms)]


def sets_json(family):
    return [atoms_json(s) for s in sorted_sets(family)]


def instance_json(d):
    return {"endogenous": atoms_json(d.endogenous),
            "exogenous": atoms_json(d.exogenous)}


def causes_json(cs, mrc):
    return [{"tuple": str(r.cause),
             "responsibility": fraction_json(r.responsibility),
             "counterfactual": r.is_counterfactual,
             "most_responsible": r.cause in mrc,
             "contingency_sets": sets_json(r.minimal_contingencies)}
            for r in cs]


def repairs_json(rs):
    return [{"deleted": atoms_json(rs.deleted[r]), "repair": instance_json(r)}
            for r in rs.repairs]


def _fmt_set(atoms):
    return "{" + ", ".join(atoms_json(atoms)) + "}"


def _fmt_fraction(f):
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


# --------------------------------------------------------------------------
# argument handling


def _text_arg(value):
    """``STR`` or ``@PATH`` (file contents)."""
    if value.startswith("@"):
        with open(value[1:], encoding="utf-8") as fh:
            return fh.read().strip()
    return value


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="dbcause",
        description="Causes, repairs and diagnoses for conjunctive queries "
                    "and denial constraints.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, help_text, query=False, dc=False):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--facts", required=True, metavar="PATH",
                       help="facts file")
        if query:
            p.add_argument("--query", metavar="STR|@PATH",
                           required=query == "required",
                           help="conjunctive query, e.g. 'q() :- S(X), R(X,Y), S(Y).'")
            p.add_argument("--answer", metavar="C1,C2,...",
                           help="answer tuple grounding an open query's head")
        if dc:
            p.add_argument("--dc", action="append", default=[],
                           metavar="STR|@PATH",
                           help="denial constraint ':- A1, ..., An.' (repeatable)")
        p.add_argument("--json", action="store_true",
                       help="emit one JSON document")
        p.add_argument("--budget", type=int, default=DEFAULT_NODE_LIMIT,
                       metavar="N", help="search node limit (default %(default)s)")
        p.add_argument("--timing", action="store_true",
                       help="add wall time to the stats (output no longer "
                            "byte-stable)")
        return p

    add("check", "Check the instance against denial constraints.", dc=True)
    add("eval", "Evaluate a query.", query="required")
    p = add("causes", "Actual causes and responsibilities of a true BCQ.",
            query="required")
    p.add_argument("--method", choices=("direct", "repairs", "diagnosis"),
                   default="direct", help="computation route (default direct)")
    p = add("responsibility", "Responsibility of one tuple.", query="required")
    p.add_argument("--tuple", required=True, metavar="ATOM")
    p = add("repairs", "S- or C-repairs under denial constraints.",
            query=True, dc=True)
    p.add_argument("--kind", choices=("s", "c", "S", "C"), default="s")
    p = add("cqa", "Consistent answer for a ground atomic query.",
            query=True, dc=True)
    p.add_argument("--atom", required=True, metavar="ATOM")
    p.add_argument("--semantics", choices=("s", "c", "S", "C"), default="s")
    p = add("diagnose", "Minimal diagnoses for a true BCQ.", query="required")
    p.add_argument("--show-sd", action="store_true",
                   help="include the rendered system description")
    p = add("crosscheck", "Check every reduction against brute force.",
            query=True, dc=True)
    p.add_argument("--oracle-budget", type=int, default=12, metavar="N",
                   help="largest powerset universe for the oracle "
                        "(default %(default)s)")
    return parser


def _query(args, required_boolean=True):
    text = getattr(args, "query", None)
    if text is None:
        return None
    q = parse_query(_text_arg(text))
    if args.answer is not None:
        values = [v.strip() for v in args.answer.split(",")] if args.answer else []
        q = ground_query(q, values)
    if required_boolean and not q.is_boolean:
        raise NotBoolean(f"query {q} has free variables; pass --answer to ground it")
    return q


def _constraints(args, query=None):
    dcs = [parse_dc(_text_arg(t)) for t in getattr(args, "dc", [])]
    if not dcs and query is not None:
        dcs = [dc_of_query(query)]
    return dcs


# --------------------------------------------------------------------------
# commands; each returns (input extras, result, human lines, exit code)


def _cmd_check(d, args, budget):
    dcs = _constraints(args)
    rows = []
    for dc in dcs:
        images = witness_images(d, violation_view(dc), True, budget)
        rows.append({"dc": str(dc), "violated": bool(images),
                     "witnesses": sets_json(images)})
    consistent = not any(r["violated"] for r in rows)
    lines = [f"consistent: {str(consistent).lower()}"]
    for r in rows:
        lines.append(f"{r['dc']}  {'VIOLATED' if r['violated'] else 'ok'}")
        lines += [f"  witness {{{', '.join(w)}}}" for w in r["witnesses"]]
    return ({"dcs": [str(dc) for dc in dcs]},
            {"consistent": consistent, "constraints": rows}, lines, 0)


def _cmd_eval(d, args, budget):
    q = _query(args, required_boolean=False)
    if q.is_boolean:
        value = evaluate_bcq(d, q, budget)
        return ({"query": str(q)}, {"boolean": True, "value": value},
                [f"{str(value).lower()}"], 0)
    rows = sorted(answers(d, q, budget))
    return ({"query": str(q)},
            {"boolean": False, "free_vars": [v.name for v in q.free_vars],
             "answers": [list(r) for r in rows]},
            [f"({', '.join(r)})" for r in rows] or ["no answers"], 0)


def _cmd_causes(d, args, budget):
    q = _query(args)
    true = evaluate_bcq(d, q, budget)
    if args.method == "repairs":
        cs = bridge.causes_from_repairs(d, q, budget)
    elif args.method == "diagnosis" and true:
        cs = diagnosis.causes_from_diagnoses(
            diagnosis.build_diagnosis_problem(d, q, budget), budget)
    elif args.method == "diagnosis":
        cs = causality.actual_causes(d, q, budget)  # empty: nothing to diagnose
    else:
        cs = causality.actual_causes(d, q, budget)
    mrc = causality.most_responsible_causes(d, q, causes=cs)
    lines = [f"query true: {str(true).lower()}", f"{len(cs)} actual cause(s)"]
    for r in cs:
        conts = ", ".join(_fmt_set(c) for c in r.sorted_contingencies())
        star = " *" if r.cause in mrc else ""
        lines.append(f"{r.cause}  rho={_fmt_fraction(r.responsibility)}{star}  "
                     f"contingencies: {conts}")
    return ({"query": str(q), "method": args.method},
            {"query_true": true, "causes": causes_json(cs, mrc),
             "most_responsible": atoms_json(mrc)}, lines, 0)


def _cmd_responsibility(d, args, budget):
    q = _query(args)
    t = parse_ground_atom(args.tuple)
    rho = causality.responsibility(d, q, t, budget)
    conts = causality.minimal_contingency_sets(d, q, t, budget)
    return ({"query": str(q), "tuple": str(t)},
            {"tuple": str(t), "actual_cause": bool(conts),
             "counterfactual": frozenset() in conts,
             "responsibility": fraction_json(rho),
             "contingency_sets": sets_json(conts)},
            [f"{t}  rho={_fmt_fraction(rho)}"]
            + [f"  contingency {_fmt_set(c)}" for c in sorted_sets(conts)], 0)


def _cmd_repairs(d, args, budget):
    q = _query(args)
    dcs = _constraints(args, q)
    kind = args.kind.upper()
    rs = repairs(d, dcs, kind, budget)
    lines = [f"{len(rs)} {kind}-repair(s)"]
    lines += [f"delete {_fmt_set(rs.deleted[r])} -> {r}" for r in rs.repairs]
    return ({"dcs": [str(dc) for dc in dcs], "kind": kind},
            {"kind": kind, "count": len(rs), "repairs": repairs_json(rs)},
            lines, 0)


def _cmd_cqa(d, args, budget):
    q = _query(args)
    dcs = _constraints(args, q)
    a = parse_ground_atom(args.atom)
    sem = args.semantics.upper()
    value = consistent_answer_ground(d, dcs, a, sem, budget)
    result = {"atom": str(a), "semantics": sem, "consistently_true": value}
    if sem == "S" and len(dcs) == 1:
        result["non_causes_route"] = bridge.cqa_from_causes(d, dcs[0], a, budget)
    return ({"dcs": [str(dc) for dc in dcs], "atom": str(a), "semantics": sem},
            result,
            [f"{a} consistently true under {sem}-repairs: {str(value).lower()}"], 0)


def _cmd_diagnose(d, args, budget):
    q = _query(args)
    problem = diagnosis.build_diagnosis_problem(d, q, budget)
    minimal = diagnosis.minimal_diagnoses(problem, budget)
    per_tuple = []
    for t in sorted(d.endogenous):
        containing = diagnosis.diagnoses_containing(problem, t, minimal=minimal)
        per_tuple.append({
            "tuple": str(t),
            "diagnoses": sets_json(dg.abnormal for dg in containing),
            "mcd": sets_json(dg.abnormal for dg in
                             diagnosis.mcd(problem, t, minimal=minimal))})
    cs = diagnosis.causes_from_diagnoses(problem, budget)
    mrc = causality.most_responsible_causes(d, q, causes=cs)
    result = {"minimal_diagnoses": sets_json(dg.abnormal for dg in minimal),
              "per_tuple": per_tuple, "causes": causes_json(cs, mrc)}
    lines = [f"{len(minimal)} minimal diagnosis(es)"]
    lines += [f"  {_fmt_set(dg.abnormal)}" for dg in minimal]
    lines += [f"{r.cause}  rho={_fmt_fraction(r.responsibility)}" for r in cs]
    if args.show_sd:
        sd = problem.system_description.render()
        result["system_description"] = sd.splitlines()
        lines += ["", sd]
    return {"query": str(q)}, result, lines, 0


def _cmd_crosscheck(d, args, budget):
    q = _query(args)
    dcs = [parse_dc(_text_arg(t)) for t in args.dc]
    report = crosscheck(d, q, dcs, budget, OracleBudget(args.oracle_budget))
    checks = [{"name": c.name, "status": c.status, "detail": c.detail,
               "counterexample": c.counterexample} for c in report]
    lines = [f"{c.status}  {c.name}: {c.detail}" for c in report]
    for c in report:
        if c.counterexample:
            lines.append(f"  {c.name} counterexample: "
                         f"{json.dumps(c.counterexample, sort_keys=True)}")
    return ({"query": str(q) if q else None, "dcs": [str(dc) for dc in dcs]},
            {"passed": report.passed, "checks": checks}, lines,
            0 if report.passed else 1)


_HANDLERS = {
    "check": _cmd_check, "eval": _cmd_eval, "causes": _cmd_causes,
    "responsibility": _cmd_responsibility, "repairs": _cmd_repairs,
    "cqa": _cmd_cqa, "diagnose": _cmd_diagnose, "crosscheck": _cmd_crosscheck,
}


def _error(args, err, stderr):
    kind = type(err).__name__
    if getattr(args, "json", False):
        stderr.write(json.dumps({"error": {"type": kind, "message": str(err)}},
                                sort_keys=True) + "\n")
    else:
        stderr.write(f"error: {kind}: {err}\n")


def run(argv=None, stdout=None, stderr=None):
    """Run one command; returns the exit status."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    budget = SearchBudget(args.budget)
    started = time.perf_counter()
    try:
        d = load_facts(args.facts)
        extra, result, lines, code = _HANDLERS[args.command](d, args, budget)
    except ResourceExceeded as err:
        _error(args, err, stderr)
        return 3
    except (DBCauseError, OSError) as err:
        _error(args, err, stderr)
        return 2

    if args.json:
        stats = {"nodes": budget.nodes}
        if args.timing:
            stats["wall_time_s"] = round(time.perf_counter() - started, 6)
        doc = {"input": {"command": args.command, "facts": args.facts,
                         "instance": instance_json(d), **extra},
               "result": result, "stats": stats}
        stdout.write(json.dumps(doc, indent=2, sort_keys=True,
                                ensure_ascii=False) + "\n")
    else:
        stdout.write("\n".join(lines) + "\n")
        if args.timing:
            stdout.write(f"nodes: {budget.nodes}  "
                         f"time: {time.perf_counter() - started:.3f}s\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
