"""Named property suites behind ``polyadic verify``.

Each suite takes a seeded :class:`random.Random` plus options and returns
one :class:`PropertyResult` per property, carrying the first
counterexample found.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from math import factorial, gcd, lcm
from typing import Callable, Iterable, Optional

from . import arith, characters as ch, periodic as pf, stabilizers as st
from . import topology as tp
from .arith import embed, min_depth_for, tower_modulus
from .errors import UnknownSuite

TOL = 1e-9


@dataclass
class PropertyResult:
    name: str
    passed: bool
    checked: int
    counterexample: Optional[str] = None

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed,
               "checked": self.checked}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class SuiteReport:
    suite: str
    seed: int
    properties: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties)

    def to_json(self) -> dict:
        return {"suite": self.suite, "seed": self.seed,
                "passed": self.passed,
                "properties": [p.to_json() for p in self.properties]}


def check(name: str, cases: Iterable, predicate: Callable[..., bool]
          ) -> PropertyResult:
    count = 0
    for case in cases:
        count += 1
        args = case if isinstance(case, tuple) else (case,)
        if not predicate(*args):
            return PropertyResult(name, False, count, repr(case))
    return PropertyResult(name, True, count)


def random_tower(rng: random.Random, depth: int) -> arith.PolyadicInt:
    return embed(rng.randrange(tower_modulus(depth)), depth)


def random_function(rng: random.Random, period: int) -> pf.PeriodicFunction:
    return pf.PeriodicFunction(period, tuple(
        complex(rng.randint(-9, 9), rng.randint(-9, 9))
        for _ in range(period)))


def _close(a: complex, b: complex) -> bool:
    return abs(a - b) <= TOL


def suite_digits(rng, depth=6, **_):
    top = min(depth, 6)
    cases = [(k, v) for k in range(top + 1)
             for v in range(tower_modulus(k))]
    return [
        check("round-trip", cases,
              lambda k, v: arith.from_digits(arith.to_digits(embed(v, k)), k)
              == embed(v, k) and embed(v, k).value == v),
        check("digit-bounds", cases,
              lambda k, v: all(0 <= nu <= r for r, nu in
                               enumerate(embed(v, k).digits, 1))),
        check("minus-one", range(9),
              lambda k: list(embed(-1, k).digits) == list(range(1, k + 1))),
    ]


def suite_ring_axioms(rng, depth=6, samples=300, **_):
    trip = [tuple(random_tower(rng, depth) for _ in range(3))
            for _ in range(samples)]
    ints = [(rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6))
            for _ in range(samples)]
    divs = arith.divisors(tower_modulus(depth))
    pairs = [(random_tower(rng, depth), rng.choice(divs), rng.choice(divs))
             for _ in range(samples)]
    return [
        check("add-associative", trip,
              lambda a, b, c: (a + b) + c == a + (b + c)),
        check("mul-associative", trip,
              lambda a, b, c: (a * b) * c == a * (b * c)),
        check("commutative", trip,
              lambda a, b, c: a + b == b + a and a * b == b * a),
        check("distributive", trip,
              lambda a, b, c: (a + b) * c == a * c + b * c),
        check("additive-inverse", trip, lambda a, b, c: a + (-a) == embed(0, depth)),
        check("embed-homomorphism", ints,
              lambda x, y: embed(x, depth) + embed(y, depth) == embed(x + y, depth)
              and embed(x, depth) * embed(y, depth) == embed(x * y, depth)),
        check("residue-coherence", pairs,
              lambda a, m, n: (arith.residue_mod(a, m) - arith.residue_mod(a, n))
              % gcd(m, n) == 0),
    ]


def suite_indicators(rng, pmax=8, **_):
    periods = range(1, pmax + 1)
    pairs = [(p, m, n) for p in periods for m in range(p) for n in range(p)]

    def idempotent_orthogonal(p, m, n):
        prod_ = pf.indicator(p, m) * pf.indicator(p, n)
        expect = pf.indicator(p, m) if m == n else pf.constant(0, p)
        return prod_.isclose(expect)

    def partition_of_unity(p):
        total = sum((pf.indicator(p, m) for m in range(p)), pf.constant(0, p))
        return total.isclose(pf.constant(1, p))

    def expansion(p):
        u = random_function(rng, p)
        coeffs = pf.decompose(u)
        rebuilt = sum((c * pf.indicator(p, m) for m, c in enumerate(coeffs)),
                      pf.constant(0, p))
        return rebuilt.isclose(u)

    def independence(p):
        # a combination vanishes only with zero coefficients
        coeffs = [complex(rng.randint(-3, 3), 0) for _ in range(p)]
        combo = sum((c * pf.indicator(p, m) for m, c in enumerate(coeffs)),
                    pf.constant(0, p))
        return (combo.uniform_norm() <= TOL) == all(c == 0 for c in coeffs)

    def periodicity(p, m, n):
        e = pf.indicator(p, m)
        return all(e(k) == e(k + p) for k in range(-2 * p, 2 * p))

    def separation(p, j, k):
        if j >= k:
            return True
        return any(pf.indicator(p, m)(j) != pf.indicator(p, m)(k)
                   for m in range(p))

    return [
        check("idempotent-orthogonal", pairs, idempotent_orthogonal),
        check("partition-of-unity", periods, partition_of_unity),
        check("expansion", [p for p in periods for _ in range(5)], expansion),
        check("independence", [p for p in periods for _ in range(20)],
              independence),
        check("periodic", pairs, periodicity),
        check("separates-points", pairs, separation),
    ]


def suite_kappa_consistency(rng, depth=8, samples=50, **_):
    divs = arith.divisors(tower_modulus(depth))

    def consistent(psi):
        ks = {n: ch.kappa(psi, n) for n in divs}
        return all((ks[m] - ks[n]) % gcd(m, n) == 0
                   for m in divs for n in divs if m < n)

    return [check("kappa-consistency",
                  [ch.char_of(random_tower(rng, depth))
                   for _ in range(samples)], consistent)]


def _small_periods(depth: int, limit: int = 12) -> list[int]:
    return [p for p in arith.divisors(tower_modulus(depth)) if p <= limit]


def suite_characters(rng, depth=6, samples=200, **_):
    periods = _small_periods(depth)
    cases = []
    for _ in range(samples):
        p = rng.choice(periods)
        cases.append((ch.char_of(random_tower(rng, depth)),
                      random_function(rng, p), random_function(rng, p)))
    return [
        check("multiplicative", cases,
              lambda psi, u, v: _close(psi(u * v), psi(u) * psi(v))),
        check("additive", cases,
              lambda psi, u, v: _close(psi(u + v), psi(u) + psi(v))),
        check("unital", cases,
              lambda psi, u, v: psi(pf.constant(1)) == 1),
        check("is-point-evaluation", cases,
              lambda psi, u, v: psi(u) == u(psi.tower.value)),
    ]


def _ring_of_characters(rng, depth, samples):
    periods = _small_periods(depth)
    cases = []
    for _ in range(samples):
        phi, psi, chi = (ch.char_of(random_tower(rng, depth)) for _ in range(3))
        cases.append((phi, psi, chi, random_function(rng, rng.choice(periods))))
    th, ep = ch.theta(depth), ch.epsilon(depth)
    return [
        check("plus-associative", cases,
              lambda a, b, c, u: (a + b) + c == a + (b + c)),
        check("dot-associative", cases,
              lambda a, b, c, u: (a * b) * c == a * (b * c)),
        check("commutative", cases,
              lambda a, b, c, u: a + b == b + a and a * b == b * a),
        check("neutrals", cases,
              lambda a, b, c, u: a + th == a and a * ep == a),
        check("additive-inverse", cases, lambda a, b, c, u: a + (-a) == th),
        check("distributive", cases,
              lambda a, b, c, u: (a + b) * c == (a * c) + (b * c)),
        check("plus-by-double-sum", cases,
              lambda a, b, c, u: _close((a + b)(u), ch.direct_product_apply(
                  a, b, pf.sym_from_sum(u)))),
        check("dot-by-double-sum", cases,
              lambda a, b, c, u: _close((a * b)(u), ch.direct_product_apply(
                  a, b, pf.sym_from_product(u)))),
        check("reflect-by-definition", cases,
              lambda a, b, c, u: _close((-a)(u), a(pf.reflect_fn(u)))),
        check("distributive-evaluated", cases,
              lambda a, b, c, u: _close(((a + b) * c)(u),
                                        ((a * c) + (b * c))(u))),
    ]


def suite_isomorphism(rng, depth=6, samples=100, **_):
    results = _ring_of_characters(rng, depth, samples)
    towers = [(random_tower(rng, k), random_tower(rng, k))
              for k in range(1, depth + 1) for _ in range(samples // 4 + 1)]
    divs = arith.divisors(tower_modulus(depth))
    pairs = [(random_tower(rng, depth), random_tower(rng, depth),
              rng.choice(divs)) for _ in range(samples)]

    def via_sequence(a, b):
        seq = st.sequence_of_character(ch.char_of(a))
        lim, _ = st.limit_upto(seq, a.depth, horizon=3 * a.depth + 4)
        return lim == a

    results += [
        check("inverse-pair", towers,
              lambda a, b: ch.tower_of(ch.char_of(a)) == a
              and ch.char_of(ch.tower_of(ch.Character(b))) == ch.Character(b)),
        check("preserves-operations", towers,
              lambda a, b: ch.char_of(a + b) == ch.char_of(a) + ch.char_of(b)
              and ch.char_of(a * b) == ch.char_of(a) * ch.char_of(b)),
        check("image-of-character-sequence", towers, via_sequence),
        check("clusters-are-grids", pairs,
              lambda a, b, n: ch.cluster_equal(ch.char_of(a), ch.char_of(b), n)
              == tp.grid_contains(tp.Grid(n, b), a)),
    ]
    return results


def suite_gelfand_cluster(rng, n=12, radius=0.5, **_):
    cases = []
    for width in range(1, n + 1):
        depth = min_depth_for(width)
        for a in range(width):
            for b in range(width):
                shift = rng.randrange(tower_modulus(depth) // width)
                cases.append((width, ch.point_evaluation(a + width * shift, depth),
                              ch.point_evaluation(b, depth)))
    return [check(
        "intersection-equals-cluster", cases,
        lambda w, phi, psi: ch.in_cluster_intersection(phi, psi, w, radius)
        == ch.cluster_equal(phi, psi, w))]


def suite_divrem(rng, nmax=20, span=200, **_):
    depth = min_depth_for(lcm(*range(1, nmax + 1))) + 1
    cases = [(n, a) for n in range(1, nmax + 1) for a in range(-span, span + 1)]

    def reconstructs(n, a):
        gamma, r = arith.div_rem(embed(a, depth), n)
        return (r == a % n and gamma == embed(a // n, gamma.depth)
                and arith.eq_at_depth(gamma * n + r, embed(a, depth),
                                      gamma.depth))

    def unique(n, a):
        alpha = embed(a, depth)
        hits = [r for r in range(n)
                if arith.residue_mod(alpha - r, n) == 0]
        return hits == [arith.div_rem(alpha, n)[1]]

    return [check("reconstructs", cases, reconstructs),
            check("unique-remainder", cases, unique)]


def suite_grids(rng, nmax=12, probe=30, **_):
    def partition_ok(n):
        grids = tp.partition(n)
        depth = grids[0].center.depth
        return all(sum(tp.grid_contains(g, embed(x, depth)) for g in grids) == 1
                   for x in range(-probe, probe + 1))

    def refine_ok(n, k):
        outer = tp.Grid(factorial(n), embed(k, n))
        parts = tp.refine(n, k)
        for x in range(-probe, probe + 1):
            xp = embed(x, n)
            hits = sum(tp.grid_contains(g, xp) for g in parts)
            if hits != int(tp.grid_contains(outer, xp)):
                return False
        return True

    def intersect_ok(m, n, a, b):
        depth = min_depth_for(lcm(m, n))
        g = tp.intersect(tp.Grid(m, embed(a, depth)), tp.Grid(n, embed(b, depth)))
        common = [x for x in range(lcm(m, n)) if x % m == a and x % n == b]
        if g is None:
            return not common
        return common == [g.residue] and g.width == lcm(m, n)

    rcases = [(n, k) for n in range(1, 5) for k in range(factorial(n))]
    icases = [(m, n, rng.randrange(m), rng.randrange(n))
              for m, n in product(range(1, nmax + 1), repeat=2)]
    return [check("partition", range(1, nmax + 1), partition_ok),
            check("refine", rcases, refine_ok),
            check("intersect", icases, intersect_ok)]


def suite_stabilizers(rng, depth=6, horizon=st.DEFAULT_HORIZON, **_):
    fsum = st.named_sequence("factorial-sum")
    fact = st.named_sequence("factorial")

    def fsum_digits(k):
        lim, _ = st.limit_upto(fsum, k, horizon)
        return list(lim.digits) == [1] * k

    def constant_value(m):
        return st.classify_absolute_upto(st.IntSequence.constant(m), depth,
                                         horizon) == m

    def factorial_zero(k):
        return st.is_zero_sequence_upto(fact, k, horizon)

    def shifted(m):
        seq = st.IntSequence(lambda k, m=m: m + factorial(k), f"{m}+k!")
        return st.limit_upto(seq, depth, horizon)[0] == \
            st.limit_upto(seq.shift(3), depth, horizon)[0]

    bound = factorial(depth) // 2
    four = st.IntSequence.constant(4)
    return [
        check("factorial-sum-digits", range(depth + 1), fsum_digits),
        check("constants-absolute", range(-bound, bound + 1, max(1, bound // 20)),
              constant_value),
        check("factorial-is-zero", range(depth + 1), factorial_zero),
        check("prezero-constant-4",
              [(2, True), (4, True), (3, False)],
              lambda p, want: st.is_prezero_upto(four, p, horizon) == want),
        check("shift-invariance", range(-5, 6), shifted),
    ]


SUITES = {
    "digits": suite_digits,
    "ring-axioms": suite_ring_axioms,
    "indicators": suite_indicators,
    "kappa-consistency": suite_kappa_consistency,
    "characters": suite_characters,
    "isomorphism": suite_isomorphism,
    "gelfand-cluster": suite_gelfand_cluster,
    "divrem": suite_divrem,
    "grids": suite_grids,
    "stabilizers": suite_stabilizers,
}


def run_suite(name: str, seed: int = 0, **options) -> SuiteReport:
    try:
        suite = SUITES[name]
    except KeyError:
        raise UnknownSuite(
            f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    rng = random.Random(seed)
    options = {k: v for k, v in options.items() if v is not None}
    return SuiteReport(name, seed, suite(rng, **options))
