"""One test per acceptance criterion.  Each prints a PASS/FAIL line."""
import time

import pytest

from foxpoly.abelian import make_character
from foxpoly.errors import TorsionError
from foxpoly.foxcalc import fox_derivative, fox_term_list
from foxpoly.invariants import (Kind, classify, compute_polytope, default_characters, is_marked,
                                markings, splitting_complexity, term_images)
from foxpoly.polytope import TranslationClass, VirtualPolytope, hull, origin, resolve_single
from foxpoly.verify import run_all
from foxpoly.words import Presentation, parse_word

CORPUS = [
    "a,b|AbaBAbaBBAbabABBab", "a,b|BAbaBAbaBBAbabABBabb", "x,y|xyXY", "x,y|yy", "x,y|yyy",
    "x,y|yyyyy", "x,y|x", "x,y|y", "x,y|xyXYY", "x,y|xyXYYY", "x,y|xxy", "x,y|xxYYYYY",
    "x,y|xyxyXYXY", "x,y|yxyXYY",
]


def report(name, ok, detail):
    print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    return ok


def test_criterion_1_closing_example():
    classify.cache_clear()
    t0 = time.perf_counter()
    p = Presentation.parse("a,b|AbaBAbaBBAbabABBab")
    c = classify(p)
    ab = c.abelianization
    conjugated = parse_word("B", p.names) * p.relator * parse_word("b", p.names)
    images = term_images(conjugated, 1, ab)
    signs = [t.sign for t in images]
    points = [t.point for t in images]
    inv = compute_polytope(p)
    phi_b = make_character(p, 0, 1)
    s = splitting_complexity(p, phi_b)
    m = markings(p, default_characters(p, bound=5))
    elapsed = time.perf_counter() - t0
    checks = {
        "exponent sums": ab.exponent_sums == (0, 0),
        "b1": ab.b1 == 2,
        "signs": signs == [-1, 1, -1, 1, -1, 1, -1, 1],
        "images": points == [(-1, -1), (-1, 0), (-1, -1), (-1, 0), (-1, -2), (-1, -1), (-1, 0), (-1, -2)],
        "hull": hull(points) == hull([(-1, -2), (-1, 0)]),
        "single": resolve_single(inv.class_PT) == hull([(0, 0), (0, 1)]),
        "thickness": s.thickness == 1,
        "complexity": s.complexity == 2,
        "unmarked": m.marked == [] and len(m.verdicts) > 0,
        "runtime": elapsed < 1.0,
    }
    bad = [k for k, v in checks.items() if not v]
    assert report("1 closing example", not bad, f"failed={bad} time={elapsed:.3f}s (< 1 s)")


def test_criterion_2_torsion_free_product():
    classify.cache_clear()
    t0 = time.perf_counter()
    p = Presentation.parse("x,y|yy")
    c = classify(p)
    inv = compute_polytope(p)
    minus_unit = TranslationClass(VirtualPolytope(origin(1), hull([(0,), (1,)])))
    try:
        splitting_complexity(p, make_character(p, 1, 0))
        refused = False
    except TorsionError:
        refused = True
    elapsed = time.perf_counter() - t0
    ok = (c.kind is Kind.SIMPLE and not c.torsion_free and inv.class_PT == minus_unit
          and resolve_single(inv.class_PT) is None and refused and elapsed < 0.1)
    assert report("2 <x,y|y^2>", ok, f"kind={c.kind.value} torsion_free={c.torsion_free} "
                  f"refused={refused} time={elapsed:.4f}s (< 0.1 s)")


def test_criterion_3_trivial_generators():
    p = Presentation.parse("x,y|x")
    s = splitting_complexity(p, make_character(p, 0, 1))
    q = Presentation.parse("x,y|y")
    cq = classify(q)
    both = [is_marked(cq, make_character(q, v, 0)) for v in (1, -1)]
    powers = {}
    for n in (2, 3, 5):
        r = Presentation.parse("x,y|" + "y" * n)
        powers[n] = markings(r, [make_character(r, 1, 0), make_character(r, -1, 0)]).marked
    ok = (s.thickness, s.complexity) == (-1, 0) and all(both) and all(v == [] for v in powers.values())
    assert report("3 <x,y|x>, <x,y|y^n>", ok,
                  f"thickness={s.thickness} complexity={s.complexity} y-marked={both} powers={powers}")


@pytest.mark.parametrize("n", [2, 3])
def test_criterion_4_baumslag_solitar(n):
    p = Presentation.parse("x,y|xyX" + "Y" * n)
    c = classify(p)
    cls = compute_polytope(p).class_PT
    plus, minus = make_character(p, 1, 0), make_character(p, -1, 0)
    marks = (is_marked(c, plus), is_marked(c, minus))
    s = splitting_complexity(p, plus)
    ok = cls.positive.is_point and cls.negative.is_point and marks == (True, False) and s.complexity == 1
    assert report(f"4 B(1,{n})", ok, f"point={cls.positive.is_point and cls.negative.is_point} "
                  f"marked(+x,-x)={marks} complexity={s.complexity}")


PROPERTY_SUITES = ["fundamental", "chain_rule", "product_inverse", "two_formula", "invariance",
                   "minkowski", "thickness", "faces"]


def test_criterion_5_property_suites():
    t0 = time.perf_counter()
    results = run_all(seed=42, count=500, only=PROPERTY_SUITES)
    elapsed = time.perf_counter() - t0
    failures = {r.name: len(r.failures) for r in results if r.failures}
    counts = {r.name: r.passed for r in results}
    ok = not failures and all(v == 500 for v in counts.values()) and elapsed < 30
    assert report("5 property suites", ok, f"suites={len(results)} x 500 failures={failures} "
                  f"time={elapsed:.1f}s (< 30 s)")


def test_criterion_6_oracle_equivalence():
    mismatches = []
    for text in CORPUS:
        r = Presentation.parse(text).relator
        for z in (1, 2):
            if fox_term_list(r, z).collapse() != fox_derivative(r, z):
                mismatches.append((text, z))
    results = run_all(seed=42, count=500, only=["scan_vs_recursion", "hull_oracle", "proper_power"])
    failures = {r.name: len(r.failures) for r in results if r.failures}
    ok = not mismatches and not failures
    assert report("6 oracle equivalence", ok, f"corpus={len(CORPUS)} mismatches={mismatches} "
                  f"random failures={failures}")
