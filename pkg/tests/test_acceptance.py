"""One test per acceptance criterion, each at its stated tolerance.

The terminal summary prints a PASS/FAIL line per criterion (see conftest).
"""

import random
import time
from math import factorial, gcd, lcm

import pytest

from polyadic import (Grid, IntSequence, PeriodicFunction, char_of,
                      classify_absolute_upto, cluster_equal, constant,
                      converges_check, decompose, direct_product_apply,
                      div_rem, embed, epsilon, evaluate, from_digits,
                      grid_contains, indicator, intersect, is_prezero_upto,
                      is_zero_sequence_upto, kappa, limit_upto, padic_digits,
                      partition, refine, residue_mod, sym_from_product,
                      sym_from_sum, theta, to_digits, tower_of)
from polyadic.arith import divisors, min_depth_for, tower_modulus
from polyadic.characters import in_cluster_intersection
from polyadic.stabilizers import named_sequence

from oracles import base_p_table, factorial_sum, factorial_table

TOL = 1e-9
TIME_LIMIT = 60.0
NINE_FACT = factorial(9)


@pytest.fixture(autouse=True)
def time_budget():
    start = time.perf_counter()
    yield
    assert time.perf_counter() - start < TIME_LIMIT


def rand_fn(rng, p):
    return PeriodicFunction(p, tuple(
        complex(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(p)))


@pytest.mark.criterion(1, "factorial digits round trip on [0, 7!)")
def test_factorial_representation():
    table = factorial_table(6)
    for x in range(factorial(7)):
        digits = to_digits(embed(x, 6))
        assert all(0 <= nu <= r for r, nu in enumerate(digits.digits, start=1))
        assert digits.digits == table[x]
        assert from_digits(digits, 6).value == x


@pytest.mark.criterion(2, "p-adic digits match base-p expansion")
def test_padic_representation():
    rng = random.Random(2)
    samples = [rng.randrange(-10 ** 12, 10 ** 12) for _ in range(1000)]
    for p in (2, 3, 5):
        ks = [k for k in range(1, 20) if NINE_FACT % p ** k == 0]
        assert ks
        for k in ks:
            table = base_p_table(p, k)
            for x in samples:
                assert padic_digits(embed(x, 8), p, k) == table[x % p ** k]


@pytest.mark.criterion(3, "indicator basis laws for p <= 8")
def test_indicator_laws():
    rng = random.Random(3)
    for p in range(1, 9):
        e = [indicator(p, m) for m in range(p)]
        for m in range(p):
            for n in range(p):
                expect = e[m] if m == n else constant(0, p)
                assert (e[m] * e[n]).isclose(expect, TOL)
        assert sum(e, constant(0)).isclose(constant(), TOL)
        for _ in range(20):
            u = rand_fn(rng, p)
            coef = decompose(u)
            assert sum((c * e[m] for m, c in enumerate(coef)),
                       constant(0)).isclose(u, TOL)
        # independence: every indicator has exactly one nonzero coefficient
        for m in range(p):
            assert decompose(e[m]) == [int(j == m) for j in range(p)]


@pytest.mark.criterion(4, "kappa residues agree mod gcd on divisors of 9!")
def test_kappa_consistency():
    rng = random.Random(4)
    divs = divisors(NINE_FACT)
    pairs = [(i, j, gcd(m, n)) for i, m in enumerate(divs)
             for j, n in enumerate(divs)]
    for _ in range(500):
        psi = char_of(embed(rng.randrange(NINE_FACT), 8))
        ks = [kappa(psi, n) for n in divs]
        assert all((ks[i] - ks[j]) % g == 0 for i, j, g in pairs)


@pytest.mark.criterion(5, "ring of characters at depth 6")
def test_ring_of_characters():
    rng = random.Random(5)
    mod = tower_modulus(6)
    periods = [p for p in range(1, 13) if mod % p == 0]
    for _ in range(1000):
        phi, psi, chi = (char_of(embed(rng.randrange(mod), 6)) for _ in range(3))
        assert (phi + psi) + chi == phi + (psi + chi)
        assert (phi * psi) * chi == phi * (psi * chi)
        assert phi + psi == psi + phi and phi * psi == psi * phi
        assert phi + theta(6) == phi and phi * epsilon(6) == phi
        assert psi + (-psi) == theta(6)
        assert (phi + psi) * chi == (phi * chi) + (psi * chi)

        u = rand_fn(rng, rng.choice(periods))
        assert abs(((phi + psi) + chi)(u) - (phi + (psi + chi))(u)) <= TOL
        assert abs(((phi + psi) * chi)(u) - ((phi * chi) + (psi * chi))(u)) <= TOL
        assert abs((phi + psi)(u)
                   - direct_product_apply(phi, psi, sym_from_sum(u))) <= TOL
        assert abs((phi * psi)(u)
                   - direct_product_apply(phi, psi, sym_from_product(u))) <= TOL
        assert abs((psi + (-psi))(u) - u(0)) <= TOL


@pytest.mark.criterion(6, "characters and towers are isomorphic rings")
def test_isomorphism():
    rng = random.Random(6)
    for depth in range(1, 9):
        mod = tower_modulus(depth)
        xs = range(mod) if mod <= 24 else [rng.randrange(mod) for _ in range(300)]
        for x in xs:
            alpha = embed(x, depth)
            beta = embed(rng.randrange(mod), depth)
            assert tower_of(char_of(alpha)) == alpha
            assert char_of(tower_of(char_of(alpha))) == char_of(alpha)
            assert char_of(alpha + beta) == char_of(alpha) + char_of(beta)
            assert char_of(alpha * beta) == char_of(alpha) * char_of(beta)
            assert tower_of(char_of(alpha) + char_of(beta)) == alpha + beta
            assert tower_of(char_of(alpha) * char_of(beta)) == alpha * beta
    divs = divisors(NINE_FACT)
    for _ in range(500):
        alpha = embed(rng.randrange(NINE_FACT), 8)
        beta = embed(rng.randrange(NINE_FACT), 8)
        for p in divs:
            assert cluster_equal(char_of(alpha), char_of(beta), p) == \
                grid_contains(Grid(p, beta), alpha)


@pytest.mark.criterion(7, "cluster equals Gelfand indicator intersection")
def test_cluster_gelfand():
    for radius in (0.5, 0.99):
        for n in range(1, 13):
            depth = min_depth_for(n)
            for i in range(n):
                for j in range(n):
                    phi, psi = char_of(embed(i, depth)), char_of(embed(j, depth))
                    assert in_cluster_intersection(phi, psi, n, radius) == \
                        cluster_equal(phi, psi, n)


@pytest.mark.criterion(8, "division with remainder matches floor division")
def test_division_with_remainder():
    for n in range(1, 21):
        depth = min_depth_for(n) + 1
        for a in range(-1000, 1001):
            alpha = embed(a, depth)
            gamma, r = div_rem(alpha, n)
            q, expect_r = divmod(a, n)
            assert r == expect_r
            assert gamma == embed(q, gamma.depth)
            assert (n * gamma.value + r - a) % (n * tower_modulus(gamma.depth)) == 0
            assert [s for s in range(n) if residue_mod(alpha - s, n) == 0] == [r]


@pytest.mark.criterion(9, "grid partitions, refinements and intersections")
def test_grid_combinatorics():
    top = 23
    probes = [embed(k, top) for k in range(-50, 51)]
    for size in range(1, 25):
        grids = partition(size, top)
        for x in probes:
            assert sum(grid_contains(g, x) for g in grids) == 1
    for n in range(1, 5):
        for k in range(factorial(n)):
            parent = Grid(factorial(n), embed(k, top))
            parts = refine(n, k)
            for x in probes:
                inside = [g for g in parts if grid_contains(g, x)]
                assert len(inside) == int(grid_contains(parent, x))
        assert sorted(g.residue for k in range(factorial(n))
                      for g in refine(n, k)) == list(range(factorial(n + 1)))
    small = probes[::4]
    for m in range(1, 25):
        for n in range(1, 25):
            table = {}
            for x in range(lcm(m, n)):
                table[(x % m, x % n)] = x
            for a in range(m):
                for b in range(n):
                    g1, g2 = Grid(m, embed(a, top)), Grid(n, embed(b, top))
                    out = intersect(g1, g2)
                    expect = table.get((a, b))
                    if expect is None:
                        assert out is None
                        continue
                    assert out.width == lcm(m, n) and out.residue == expect
                    if m <= 8 and n <= 8:
                        for x in small:
                            assert grid_contains(out, x) == \
                                (grid_contains(g1, x) and grid_contains(g2, x))


@pytest.mark.criterion(10, "stabilizer limits and classifications")
def test_stabilizers():
    limit, _ = limit_upto(named_sequence("factorial-sum"), 6, 60)
    assert limit.digits.digits == (1,) * 6
    assert limit.value == factorial_sum(6)

    for c in range(-300, 301):
        assert classify_absolute_upto(IntSequence.constant(c), 6, 40) == c

    fact = named_sequence("factorial")
    for depth in range(1, 9):
        # the tail k >= K+1 is already zero, so two agreeing terms suffice
        assert is_zero_sequence_upto(fact, depth, depth + 2, window=2)
        assert classify_absolute_upto(fact, depth, depth + 2, window=2) == 0
        # with the default window the horizon has to cover 2(K+1) zero terms
        assert is_zero_sequence_upto(fact, depth, 3 * depth + 2)

    four = IntSequence.constant(4)
    assert is_prezero_upto(four, 2, 40)
    assert is_prezero_upto(four, 4, 40)
    assert not is_prezero_upto(four, 3, 40)


@pytest.mark.criterion(11, "finite-list convergence check")
def test_convergence_criterion():
    sums = [embed(factorial_sum(n), 5) for n in range(1, 11)]
    assert converges_check(sums, 5) is True
    assert converges_check([embed(77, 5)] * 10, 5) is True
    assert converges_check([embed(n, 5) for n in range(1, 11)], 5) is False
