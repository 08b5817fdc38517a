"""Command-line front end.

    foxpoly analyze "a,b|AbaBAbaBBAbabABBab" --char 0,1
    foxpoly verify --seed 42 --count 500

Exit codes for ``analyze``: 0 ok, 2 parse error, 3 presentation outside the
construction (free_rank2 / other_b1_1), 4 invalid character.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import __version__
from .abelian import Character, make_character
from .errors import CharacterError, ClassificationError, TorsionError, WordParseError
from .invariants import (Kind, PolytopeInvariant, classify, compute_polytope,
                         default_characters, is_marked, markings, splitting_complexity,
                         term_images, two_formula_agree)
from .polytope import faces_and_duals, hull, thickness
from .words import Presentation

REPORT_SCHEMA = 1

EXIT_PARSE = 2
EXIT_CLASSIFICATION = 3
EXIT_CHARACTER = 4


def _parse_char(text: str):
    try:
        a, b = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"character must be 'p,q' with integers, got {text!r}")
    return a, b


def _term_json(images, names):
    return [{"sign": t.sign, "word": t.word.render(names) or "1",
             "position": t.position, "image": list(t.point)} for t in images]


def _character_for_covector(c, covector) -> Character:
    rows = c.abelianization.projection
    if c.abelianization.b1 == 2:
        return Character(tuple(covector), tuple(covector))
    k = covector[0]
    return Character((k * rows[0][0], k * rows[0][1]), (k,))


def _faces_json(inv: PolytopeInvariant):
    c = inv.classification
    if inv.single is not None:
        target, which = inv.single, "single"
    elif inv.class_PT.positive.is_point:
        target, which = inv.class_PT.negative, "negated"
    else:
        return None
    faces = []
    for fd in faces_and_duals(target):
        duals = []
        for cone in fd.duals:
            sample = cone.sample()
            phi = _character_for_covector(c, sample)
            entry = cone.to_json()
            entry.update(sample=list(sample), marked=is_marked(c, phi))
            duals.append(entry)
        faces.append({"face": fd.face.to_json(), "duals": duals})
    return {"of": which, "faces": faces}


def _polytope_json(inv: PolytopeInvariant):
    cancelled = inv.cancelled_support
    out = {
        "witness_generator": inv.witness_generator.name.lower(),
        "derivative_hull": inv.derivative_hull.to_json(),
        "subtrahend": inv.subtrahend.to_json(),
        "class": {"positive": inv.class_PT.positive.to_json(),
                  "negative": inv.class_PT.negative.to_json()},
        "single": inv.single.to_json() if inv.single is not None else None,
        "cancelled_support": [{"point": list(pt), "coefficient": k} for pt, k in cancelled.items()],
        "marked_faces": _faces_json(inv),
    }
    if not cancelled:
        out["cancellation_note"] = "signed term images cancel completely in Z[H]"
    elif hull(cancelled) != inv.derivative_hull:
        out["cancellation_note"] = (
            "summing signs in Z[H] would shrink the hull to "
            f"{hull(cancelled).to_json()}; the terms are distinct group elements, "
            "so the support used here is the set of term images")
    return out


def build_report(p: Presentation, chars: List[Character], trace: bool = False,
                 raw_input: Optional[str] = None) -> dict:
    c = classify(p)
    names = p.names
    ab = c.abelianization
    warnings = []
    if c.was_reduced:
        warnings.append(f"relator was cyclically reduced; conjugator {c.conjugator.render(names)}")
    report = {
        "version": {"foxpoly": __version__, "schema": REPORT_SCHEMA},
        "presentation": {
            "input": raw_input if raw_input is not None else p.render(),
            "generators": list(names),
            "relator": c.relator.render(names),
            "conjugator": c.conjugator.render(names),
            "cyclically_reduced_input": p.cyclically_reduced,
        },
        "classification": {
            "kind": c.kind.value,
            "torsion_free": c.torsion_free,
            "proper_power": (None if c.proper_power is None else
                             {"root": c.proper_power[0].render(names),
                              "exponent": c.proper_power[1]}),
        },
        "abelianization": {
            "exponent_sums": list(ab.exponent_sums),
            "b1": ab.b1,
            "projection": [list(r) for r in ab.projection],
            "torsion_order": ab.torsion_order,
            "generator_images": [list(g) for g in ab.generator_images],
        },
        "warnings": warnings,
    }

    inv = None
    try:
        inv = compute_polytope(p)
    except ClassificationError as exc:
        report["polytope"] = None
        report["polytope_unavailable"] = str(exc)
    if inv is not None:
        z = inv.witness_generator
        report["fox_terms"] = {"generator": names[z - 1],
                               "terms": _term_json(inv.term_images, names)}
        report["polytope"] = _polytope_json(inv)
        report["thickness"] = [
            {"character": list(phi.values), "induced": list(phi.induced),
             "thickness": thickness(inv.class_PT, phi)} for phi in chars]
        if trace:
            other = z.other
            if c.relator.count(other):
                report["fox_terms_other"] = {
                    "generator": names[other - 1],
                    "terms": _term_json(term_images(c.relator, other, ab), names)}
            report["two_formula_agree"] = two_formula_agree(p)

    table, reason = [], None
    if not c.torsion_free:
        reason = "torsion"
    elif inv is None:
        reason = report["polytope_unavailable"]
    else:
        for phi in chars:
            try:
                s = splitting_complexity(p, phi)
            except (TorsionError, ClassificationError) as exc:
                reason = str(exc)
                table = []
                break
            table.append({"character": list(phi.values), "primitive": list(s.primitive.values),
                          "thickness": s.thickness, "complexity": s.complexity})
    report["splitting"] = {"reason": reason, "table": table}

    m = markings(p, chars)
    report["markings"] = {
        "rule": m.reason,
        "verdicts": [{"character": list(k), "marked": v} for k, v in m.verdicts.items()],
        "marked": [list(k) for k in m.marked],
    }
    return report


def cmd_analyze(args) -> int:
    try:
        p = Presentation.parse(args.presentation)
    except WordParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    c = classify(p)
    if c.kind in (Kind.FREE_RANK2, Kind.OTHER_B1_1):
        why = ("relator is trivial: the group is free of rank 2"
               if c.kind is Kind.FREE_RANK2 else
               "b1 = 1 but neither generator is trivial in the free part of the "
               "abelianization: the presentation is neither nice nor simple")
        print(f"rejected ({c.kind.value}): {why}", file=sys.stderr)
        return EXIT_CLASSIFICATION
    try:
        if args.char:
            chars = [make_character(p, a, b) for a, b in args.char]
        else:
            chars = default_characters(p)
    except CharacterError as exc:
        print(f"invalid character: {exc}", file=sys.stderr)
        return EXIT_CHARACTER
    report = build_report(p, chars, trace=args.trace, raw_input=args.presentation)
    print(json.dumps(report, sort_keys=True, indent=2))
    return 0


def cmd_verify(args) -> int:
    from .verify import SUITES, run_all
    only = args.suite or None
    if only:
        unknown = [s for s in only if s not in SUITES]
        if unknown:
            print(f"unknown suite(s): {', '.join(unknown)}; choose from {', '.join(SUITES)}",
                  file=sys.stderr)
            return 2
    results = run_all(args.seed, args.count, only)
    first = None
    for res in results:
        status = "ok" if not res.failures else "FAIL"
        print(f"{res.name:<18} {res.passed}/{args.count} {status}")
        if res.failures and first is None:
            first = res.failures[0]
    if first is not None:
        print(f"first failure: {first.replay()}")
        return 1
    print(f"all suites passed (seed {args.seed}, {args.count} cases each)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="foxpoly", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"foxpoly {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="compute the polytope, thickness, splitting and markings")
    a.add_argument("presentation", help="'g1,g2|word'; uppercase letters are inverses")
    a.add_argument("--char", action="append", type=_parse_char, metavar="P,Q",
                   help="character given by its values on the two generators (repeatable)")
    a.add_argument("--json", action="store_true", help="emit the JSON report (the default)")
    a.add_argument("--trace", action="store_true",
                   help="also list the Fox terms of the other generator and the two-formula check")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="run the seeded property suites")
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--count", type=int, default=500)
    v.add_argument("--suite", action="append", help="restrict to one suite (repeatable)")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
