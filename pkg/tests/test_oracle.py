import random

import pytest

from zonoehrhart.errors import EnumerationLimitError, LatticeMathError, NotFullDimensionalError
from zonoehrhart.matroid import VectorConfiguration
from zonoehrhart.oracle import (bounding_box, contains_point,
                                count_lattice_points, hstar_via_oracle,
                                interpolate_ehrhart)
from zonoehrhart.polycore import Poly
from zonoehrhart.zonotope import ZonotopeSpec

HEXAGON = ZonotopeSpec(VectorConfiguration([(1, 0), (0, 1), (1, 1)]))
SKEW = ZonotopeSpec(VectorConfiguration([(1, 1), (1, -1)]))


def test_contains_point_examples():
    assert contains_point(HEXAGON, 1, (2, 1))
    assert contains_point(HEXAGON, 1, (2, 2))
    assert not contains_point(HEXAGON, 1, (3, 0))
    assert contains_point(HEXAGON, 0, (0, 0))
    assert not contains_point(HEXAGON, 0, (1, 0))


def test_contains_point_validation():
    with pytest.raises(LatticeMathError):
        contains_point(HEXAGON, 1, (1, 2, 3))
    with pytest.raises(LatticeMathError):
        contains_point(HEXAGON, -1, (0, 0))


def test_count_examples():
    assert count_lattice_points(HEXAGON, 0) == 1
    assert count_lattice_points(HEXAGON, 1) == 7
    assert count_lattice_points(HEXAGON, 2) == 19
    assert [count_lattice_points(SKEW, n) for n in range(3)] == [1, 5, 13]


def test_count_type_b():
    square = ZonotopeSpec(VectorConfiguration([(1, 0), (0, 1)]), "typeB")
    assert [count_lattice_points(square, n) for n in range(3)] == [1, 9, 25]
    segment = ZonotopeSpec(VectorConfiguration([(2,)]), "typeB")
    assert [count_lattice_points(segment, n) for n in range(3)] == [1, 5, 9]


def test_resource_guard():
    huge = ZonotopeSpec(VectorConfiguration([(4000, 0), (0, 4000)]))
    with pytest.raises(EnumerationLimitError):
        count_lattice_points(huge, 1)


def test_bounding_box_sign_decomposition():
    box = bounding_box(SKEW, 2)
    assert box == [(0, 4), (-2, 2)]
    box = bounding_box(ZonotopeSpec(SKEW.config, "typeB"), 1)
    assert box == [(-2, 2), (-2, 2)]


def test_interpolate_examples():
    assert interpolate_ehrhart([1, 7, 19], 2) == Poly((1, 3, 3))
    assert interpolate_ehrhart([1, 5, 13], 2) == Poly((1, 2, 2))
    assert interpolate_ehrhart([1, 1, 1], 0) == Poly((1,))
    assert interpolate_ehrhart([1, 1, 1], 2) == Poly((1,))


def test_interpolate_guards():
    with pytest.raises(LatticeMathError):
        interpolate_ehrhart([1, 7], 2)
    with pytest.raises(LatticeMathError):
        interpolate_ehrhart([1, 7, 19, 38], 2)  # 38 is off the polynomial


def test_hstar_via_oracle_examples():
    assert hstar_via_oracle(HEXAGON).h == (1, 4, 1)
    assert hstar_via_oracle(SKEW).h == (1, 2, 1)
    square_b = ZonotopeSpec(VectorConfiguration([(1, 0), (0, 1)]), "typeB")
    assert hstar_via_oracle(square_b).h == (1, 6, 1)
    with pytest.raises(NotFullDimensionalError):
        hstar_via_oracle(ZonotopeSpec(VectorConfiguration([(1, 0), (2, 0)])))


def _random_full_rank(rng, d, n_max=4):
    while True:
        n = rng.randint(d, n_max)
        config = VectorConfiguration(
            [tuple(rng.randint(-2, 2) for _ in range(d)) for _ in range(n)], d)
        if config.full_rank == d:
            return config


def test_counts_monotone_and_positive():
    rng = random.Random(61)
    for _ in range(10):
        z = ZonotopeSpec(_random_full_rank(rng, rng.randint(1, 2)))
        counts = [count_lattice_points(z, n) for n in range(4)]
        assert counts[0] == 1
        assert all(a <= b for a, b in zip(counts, counts[1:]))


def test_counts_invariant_under_generator_permutation():
    rng = random.Random(67)
    for _ in range(8):
        config = _random_full_rank(rng, 2)
        shuffled = list(config.vectors)
        rng.shuffle(shuffled)
        z1, z2 = ZonotopeSpec(config), ZonotopeSpec(VectorConfiguration(shuffled, 2))
        for n in range(3):
            assert count_lattice_points(z1, n) == count_lattice_points(z2, n)


def test_counts_invariant_under_generator_negation():
    # Negating a generator translates the standard body, preserving counts.
    rng = random.Random(71)
    for _ in range(8):
        config = _random_full_rank(rng, 2)
        flipped = [tuple(-x for x in v) if i == 0 else v
                   for i, v in enumerate(config.vectors)]
        z1 = ZonotopeSpec(config)
        z2 = ZonotopeSpec(VectorConfiguration(flipped, 2))
        for n in range(3):
            assert count_lattice_points(z1, n) == count_lattice_points(z2, n)


def test_type_b_membership_invariant_under_negation():
    # The [-1,1]-coefficient body itself is unchanged by negating a generator.
    rng = random.Random(73)
    for _ in range(5):
        config = _random_full_rank(rng, 2)
        flipped = VectorConfiguration(
            [tuple(-x for x in v) if i == 0 else v
             for i, v in enumerate(config.vectors)], 2)
        z1 = ZonotopeSpec(config, "typeB")
        z2 = ZonotopeSpec(flipped, "typeB")
        box = bounding_box(z1, 1)
        for x in range(box[0][0], box[0][1] + 1):
            for y in range(box[1][0], box[1][1] + 1):
                assert contains_point(z1, 1, (x, y)) == contains_point(z2, 1, (x, y))


def test_point_zonotope():
    point = ZonotopeSpec(VectorConfiguration([], dim=0))
    assert count_lattice_points(point, 5) == 1
    assert hstar_via_oracle(point).h == (1,)


def test_loop_generators_are_harmless():
    z = ZonotopeSpec(VectorConfiguration([(0, 0), (1, 0), (0, 1)]))
    assert [count_lattice_points(z, n) for n in range(3)] == [1, 4, 9]
    assert hstar_via_oracle(z).h == (1, 1, 0)


def _naive_member(z, n, point):
    """From-scratch rational Fourier-Motzkin over all coefficient variables.

    Equalities enter as opposite inequality pairs and nothing is cached or
    precompiled, so this is an independent check of the library's membership.
    """
    from fractions import Fraction

    vectors = z.config.vectors
    d, m = z.config.dim, z.config.n
    lo = -n if z.mode == "typeB" else 0
    # rows: (coeffs over lam, const) meaning coeffs . lam <= const
    rows = []
    for r in range(d):
        coeffs = [Fraction(vectors[c][r]) for c in range(m)]
        rows.append((coeffs, Fraction(point[r])))
        rows.append(([-x for x in coeffs], Fraction(-point[r])))
    for i in range(m):
        unit = [Fraction(1 if j == i else 0) for j in range(m)]
        rows.append((unit, Fraction(n)))
        rows.append(([-x for x in unit], Fraction(-lo)))
    for var in range(m):
        pos = [(c, b) for c, b in rows if c[var] > 0]
        neg = [(c, b) for c, b in rows if c[var] < 0]
        rest = [(c, b) for c, b in rows if c[var] == 0]
        for cp, bp in pos:
            for cn, bn in neg:
                scale = -cp[var] / cn[var]
                combined = [x + scale * y for x, y in zip(cp, cn)]
                rest.append((combined, bp + scale * bn))
        rows = rest
    return all(b >= 0 for _, b in rows)


def test_membership_against_naive_elimination():
    rng = random.Random(79)
    for _ in range(20):
        d = rng.randint(1, 2)
        m = rng.randint(1, 4)
        config = VectorConfiguration(
            [tuple(rng.randint(-2, 2) for _ in range(d)) for _ in range(m)], d)
        mode = rng.choice(["standard", "typeB"])
        z = ZonotopeSpec(config, mode)
        n = rng.randint(0, 2)
        box = bounding_box(z, n)
        points = [tuple(rng.randint(lo - 1, hi + 1) for lo, hi in box)
                  for _ in range(25)]
        for p in points:
            assert contains_point(z, n, p) == _naive_member(z, n, p), (config, mode, n, p)
