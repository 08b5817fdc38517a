"""Seeded property suites behind ``foxpoly verify``.

Every suite draws ``count`` cases from its own ``random.Random`` stream so a
failure can be replayed from ``(suite, seed, case)`` alone.  Word-valued
failures are shrunk by deleting letters while the property still fails.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from . import foxcalc, invariants, oracles, polytope
from .polytope import (IntegralPolytope, VirtualPolytope, face,
                       faces_and_duals, hull, resolve_single, thickness, virtual_equal)
from .words import (NielsenMove, Presentation, Word, cyclic_reduce, is_proper_power)


@dataclass
class Failure:
    suite: str
    seed: int
    case: int
    detail: str

    def replay(self) -> str:
        return (f"[{self.suite} case {self.case}] {self.detail}  "
                f"(replay: foxpoly verify --seed {self.seed} --suite {self.suite} --count {self.case + 1})")


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failures: List[Failure] = field(default_factory=list)


def random_word(rng: random.Random, max_len: int, min_len: int = 0) -> Word:
    n = rng.randint(min_len, max_len)
    letters = []
    for _ in range(n):
        choices = [l for l in (1, -1, 2, -2) if not letters or l != -letters[-1]]
        letters.append(rng.choice(choices))
    return Word(tuple(letters))


def random_cyclic_word(rng: random.Random, max_len: int) -> Word:
    while True:
        w, _ = cyclic_reduce(random_word(rng, max_len, 1))
        if w:
            return w


def random_nice_relator(rng: random.Random, max_len: int = 24) -> Word:
    """A cyclically reduced product of one or two commutators of short words."""
    while True:
        r = Word()
        for _ in range(rng.randint(1, 2)):
            u = random_word(rng, 4, 1)
            v = random_word(rng, 4, 1)
            r = r * u * v * ~u * ~v
        r, _ = cyclic_reduce(r)
        if r and len(r) <= max_len:
            return r


def random_polytope(rng: random.Random, rank: int = 2, npts: int = 6, bound: int = 10) -> IntegralPolytope:
    k = rng.randint(1, npts)
    return hull(tuple(rng.randint(-bound, bound) for _ in range(rank)) for _ in range(k))


def shrink_word(w: Word, fails: Callable[[Word], bool]) -> Word:
    changed = True
    while changed:
        changed = False
        for i in range(len(w)):
            cand = Word(w.letters[:i] + w.letters[i + 1:])
            if fails(cand):
                w, changed = cand, True
                break
    return w


def _word_suite(name, seed, count, gen, prop, render=lambda w: w.render() or "1"):
    res = SuiteResult(name)
    rng = random.Random(f"{name}:{seed}")
    for i in range(count):
        w = gen(rng)
        if prop(w):
            res.passed += 1
        else:
            small = shrink_word(w, lambda v: not prop(v))
            res.failures.append(Failure(name, seed, i, f"input={render(w)} minimal={render(small)}"))
    return res


def _case_suite(name, seed, count, check):
    """``check(rng)`` returns None on success or a description of the failing case."""
    res = SuiteResult(name)
    rng = random.Random(f"{name}:{seed}")
    for i in range(count):
        bad = check(rng)
        if bad is None:
            res.passed += 1
        else:
            res.failures.append(Failure(name, seed, i, bad))
    return res


# -- individual suites ---------------------------------------------------------

def suite_fundamental(seed, count):
    return _word_suite("fundamental", seed, count, lambda rng: random_word(rng, 30),
                       foxcalc.fundamental_formula_check)


def suite_chain_rule(seed, count):
    def prop(w):
        return all(foxcalc.chain_rule_check(m, w, z) for m in NielsenMove for z in (1, 2))
    return _word_suite("chain_rule", seed, count, lambda rng: random_word(rng, 20), prop)


def suite_product_inverse(seed, count):
    def check(rng):
        u, v = random_word(rng, 15), random_word(rng, 15)
        for z in (1, 2):
            if not foxcalc.product_rule_check(u, v, z):
                return f"product rule u={u} v={v} z={z}"
            if not foxcalc.inverse_rule_check(u, z):
                return f"inverse rule w={u} z={z}"
        return None
    return _case_suite("product_inverse", seed, count, check)


def suite_scan_vs_recursion(seed, count):
    def prop(w):
        for z in (1, 2):
            terms = foxcalc.fox_term_list(w, z)
            if terms.collapse() != foxcalc.fox_derivative(w, z):
                return False
            if len(terms) != w.count(z):
                return False
            core, _ = cyclic_reduce(w)
            if core == w and len({t.word for t in terms}) != len(terms):
                return False
        return True
    return _word_suite("scan_vs_recursion", seed, count, lambda rng: random_word(rng, 30), prop)


def suite_two_formula(seed, count):
    def prop(r):
        if not r:
            return True
        return invariants.two_formula_agree(Presentation(r))
    return _word_suite("two_formula", seed, count, random_nice_relator, prop)


def suite_invariance(seed, count):
    def check(rng):
        r = random_nice_relator(rng)
        moves = [rng.choice(list(NielsenMove)) for _ in range(rng.randint(0, 4))]
        shifts = [rng.randrange(len(r)) for _ in range(2)]
        if invariants.invariance_suite(Presentation(r), moves, shifts):
            return None
        return f"relator={r} moves={[m.value for m in moves]} shifts={shifts}"
    return _case_suite("invariance", seed, count, check)


def suite_minkowski(seed, count):
    def check(rng):
        rank = rng.choice((1, 2))
        p, q, r = (random_polytope(rng, rank) for _ in range(3))
        zero = polytope.origin(rank)
        if p + q != q + p:
            return f"commutativity P={p.vertices} Q={q.vertices}"
        if (p + q) + r != p + (q + r):
            return f"associativity P={p.vertices} Q={q.vertices} R={r.vertices}"
        if p + zero != p:
            return f"neutral P={p.vertices}"
        if list((p + q).vertices) != oracles.pairwise_sum_vertices(p.vertices, q.vertices):
            return f"pairwise-sum oracle P={p.vertices} Q={q.vertices}"
        if not virtual_equal(VirtualPolytope(p + r, q + r), VirtualPolytope(p, q)):
            return f"cancellation P={p.vertices} Q={q.vertices} R={r.vertices}"
        if (p == q) != (p + r == q + r):
            return f"cancellation converse P={p.vertices} Q={q.vertices} R={r.vertices}"
        if resolve_single(VirtualPolytope(p + q, q)) != p:
            return f"resolve_single P={p.vertices} Q={q.vertices}"
        return None
    return _case_suite("minkowski", seed, count, check)


def suite_thickness(seed, count):
    def check(rng):
        rank = rng.choice((1, 2))
        a = VirtualPolytope(random_polytope(rng, rank), random_polytope(rng, rank))
        b = VirtualPolytope(random_polytope(rng, rank), random_polytope(rng, rank))
        phi = tuple(rng.randint(-6, 6) for _ in range(rank))
        t = tuple(rng.randint(-20, 20) for _ in range(rank))
        if thickness(a + b, phi) != thickness(a, phi) + thickness(b, phi):
            return f"homomorphism A={a} B={b} phi={phi}"
        if thickness(a.translate(t), phi) != thickness(a, phi):
            return f"translation A={a} t={t} phi={phi}"
        if thickness(polytope.IntegralPolytope((t,)), phi) != 0:
            return f"point t={t}"
        pts = [(rng.choice((1, -1)), tuple(rng.randint(-9, 9) for _ in range(rank)))
               for _ in range(rng.randint(1, 8))]
        if thickness(hull(pt for _, pt in pts), phi) != oracles.newton_width(pts, phi):
            return f"newton width pts={pts} phi={phi}"
        return None
    return _case_suite("thickness", seed, count, check)


GRID = [(a, b) for a in range(-8, 9) for b in range(-8, 9) if (a, b) != (0, 0)]


def suite_faces(seed, count):
    def check(rng):
        rank = rng.choice((1, 2, 2, 2))
        p = random_polytope(rng, rank, npts=7, bound=6)
        fds = faces_and_duals(p)
        grid = [(a,) for a in range(-8, 9) if a] if rank == 1 else GRID
        for phi in grid:
            owners = [fd for fd in fds for cone in fd.duals if cone.contains(phi)]
            if len(owners) != 1:
                return f"P={p.vertices} phi={phi} lands in {len(owners)} duals"
            if owners[0].face != face(p, phi):
                return f"P={p.vertices} phi={phi} face mismatch"
        for fd in fds:
            for cone in fd.duals:
                if face(p, cone.sample()) != fd.face:
                    return f"P={p.vertices} sample of dual of {fd.face.vertices} misplaced"
        return None
    return _case_suite("faces", seed, count, check)


def suite_hull_oracle(seed, count):
    def check(rng):
        rank = rng.choice((1, 2, 2))
        pts = [tuple(rng.randint(-100, 100) if rng.random() < 0.5 else rng.randint(-3, 3)
                     for _ in range(rank)) for _ in range(rng.randint(1, 12))]
        got = list(hull(pts).vertices)
        want = oracles.extreme_points(pts) if rank == 2 else oracles.extreme_points_1d(pts)
        return None if got == want else f"points={pts} hull={got} oracle={want}"
    return _case_suite("hull_oracle", seed, count, check)


def suite_proper_power(seed, count):
    def gen(rng):
        if rng.random() < 0.5:
            return random_cyclic_word(rng, 40)
        while True:
            root = random_cyclic_word(rng, 10)
            w = root ** rng.randint(2, 4)
            if len(w) <= 40 and w.is_cyclically_reduced():
                return w

    def prop(w):
        if not w or not w.is_cyclically_reduced():
            return True
        got = is_proper_power(w)
        want = oracles.proper_power_bruteforce(w.letters)
        return (got is None and want is None) or (
            got is not None and want is not None and (got[0].letters, got[1]) == want)
    return _word_suite("proper_power", seed, count, gen, prop)


def suite_abelian(seed, count):
    def check(rng):
        w = random_cyclic_word(rng, 12)
        p = Presentation(w)
        ab = invariants.classify(p).abelianization
        proj = ab.projection
        want = oracles.smith_projection(*ab.exponent_sums)
        if ab.b1 == 1 and proj[0] not in (want[0], tuple(-c for c in want[0])):
            return f"relator={w} projection={proj} smith={want}"
        if ab.b1 == 2 and proj != want:
            return f"relator={w} projection={proj}"
        if any(ab.project(ab.exponent_sums)):
            return f"relator={w} relation not killed"
        return None
    return _case_suite("abelian", seed, count, check)


SUITES: Dict[str, Callable[[int, int], SuiteResult]] = {
    "fundamental": suite_fundamental,
    "chain_rule": suite_chain_rule,
    "product_inverse": suite_product_inverse,
    "scan_vs_recursion": suite_scan_vs_recursion,
    "two_formula": suite_two_formula,
    "invariance": suite_invariance,
    "minkowski": suite_minkowski,
    "thickness": suite_thickness,
    "faces": suite_faces,
    "hull_oracle": suite_hull_oracle,
    "proper_power": suite_proper_power,
    "abelian": suite_abelian,
}


def run_all(seed: int = 42, count: int = 500, only: Optional[List[str]] = None) -> List[SuiteResult]:
    names = only or list(SUITES)
    return [SUITES[n](seed, count) for n in names]
