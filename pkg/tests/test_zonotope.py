import random
from fractions import Fraction

import pytest

from zonoehrhart.errors import (DependentSetError, LatticeMathError,
                                NotFullDimensionalError)
from zonoehrhart.eulerian import a_j_polynomial, eulerian_b
from zonoehrhart.matroid import VectorConfiguration
from zonoehrhart.oracle import count_lattice_points, hstar_via_oracle, interpolate_ehrhart
from zonoehrhart.polycore import HStarVector, Poly, hstar_from_ehrhart
from zonoehrhart.zonotope import (BoxValuationTable, ZonotopeSpec,
                                  box_halfopen_count, default_box_table,
                                  ehrhart_halfopen_cube,
                                  ehrhart_type_b_zonotope, ehrhart_zonotope,
                                  eulerian_ray_parallelepiped,
                                  express_in_eulerian_basis,
                                  hstar_halfopen_cube,
                                  hstar_halfopen_parallelepiped,
                                  hstar_totally_unimodular,
                                  hstar_type_b_parallelepiped,
                                  hstar_type_b_zonotope, hstar_zonotope,
                                  is_in_zonotope_cone, is_reflexive_by_ehrhart)

HEXAGON = VectorConfiguration([(1, 0), (0, 1), (1, 1)])
SKEW = VectorConfiguration([(1, 1), (1, -1)])


def test_box_halfopen_count_examples():
    assert box_halfopen_count(HEXAGON, ()) == 1
    assert box_halfopen_count(SKEW, (1, 2)) == 2
    assert box_halfopen_count(HEXAGON, (1, 3)) == 1


def test_default_box_table_examples():
    table = default_box_table(HEXAGON)
    assert table.value(()) == 1
    assert all(table.value(s) == 0 for s in HEXAGON.independent_sets() if s)

    table = default_box_table(SKEW)
    assert table.value(()) == 1
    assert table.value((1,)) == table.value((2,)) == 0
    assert table.value((1, 2)) == 1

    stretched = VectorConfiguration([(4, 0), (0, 1)])
    table = default_box_table(stretched)
    assert table.value((1,)) == 3
    assert table.value(()) == 1
    assert table.value((2,)) == 0 and table.value((1, 2)) == 0


def test_box_table_requires_complete_domain():
    with pytest.raises(LatticeMathError):
        BoxValuationTable(SKEW, {(): 1})
    with pytest.raises(DependentSetError):
        default_box_table(SKEW).value((3,))


def test_ehrhart_zonotope_examples():
    assert ehrhart_zonotope(ZonotopeSpec(HEXAGON)) == Poly((1, 3, 3))
    assert ehrhart_zonotope(ZonotopeSpec(SKEW)) == Poly((1, 2, 2))
    point = ZonotopeSpec(VectorConfiguration([], dim=0))
    assert ehrhart_zonotope(point) == Poly((1,))


def test_halfopen_cube_examples():
    assert ehrhart_halfopen_cube(2, 0) == Poly((1, 2, 1))
    assert ehrhart_halfopen_cube(2, 2) == Poly((0, 0, 1))
    assert ehrhart_halfopen_cube(1, 1) == Poly((0, 1))
    assert hstar_halfopen_cube(2, 0).h == (1, 1, 0)
    assert hstar_halfopen_cube(2, 2).h == (0, 1, 1)
    assert hstar_halfopen_cube(1, 1).h == (0, 1)


def test_halfopen_cube_consistency():
    for d in range(7):
        for j in range(d + 1):
            assert hstar_from_ehrhart(ehrhart_halfopen_cube(d, j), d) == \
                hstar_halfopen_cube(d, j), (d, j)


def test_hstar_halfopen_parallelepiped_examples():
    square = [(1, 0), (0, 1)]
    assert hstar_halfopen_parallelepiped(square).h == (1, 1, 0)
    assert hstar_halfopen_parallelepiped(square, (1, 2)).h == (0, 1, 1)
    assert hstar_halfopen_parallelepiped([(4, 0), (0, 1)]).h == (1, 7, 0)
    with pytest.raises(DependentSetError):
        hstar_halfopen_parallelepiped([(1, 0), (2, 0)])


def test_hstar_zonotope_examples():
    assert hstar_zonotope(ZonotopeSpec(HEXAGON)).h == (1, 4, 1)
    assert hstar_zonotope(ZonotopeSpec(SKEW)).h == (1, 2, 1)
    assert hstar_zonotope(ZonotopeSpec(VectorConfiguration([(4, 0), (0, 1)]))).h == (1, 7, 0)
    with pytest.raises(NotFullDimensionalError):
        hstar_zonotope(ZonotopeSpec(VectorConfiguration([(1, 0), (2, 0)])))


def test_hstar_totally_unimodular():
    assert hstar_totally_unimodular(ZonotopeSpec(HEXAGON)).h == (1, 4, 1)
    cube3 = ZonotopeSpec(VectorConfiguration([(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert hstar_totally_unimodular(cube3).h == (1, 4, 1, 0)
    doubled = ZonotopeSpec(VectorConfiguration([(1, 0), (0, 1), (1, 0)]))
    assert hstar_totally_unimodular(doubled) == hstar_zonotope(doubled) == \
        hstar_via_oracle(doubled)
    with pytest.raises(LatticeMathError):
        hstar_totally_unimodular(ZonotopeSpec(SKEW))


def test_hstar_totally_unimodular_matches_general_formula():
    rng = random.Random(41)
    checked = 0
    while checked < 25:
        d = rng.randint(1, 3)
        n = rng.randint(d, 5)
        config = VectorConfiguration(
            [tuple(rng.randint(-1, 1) for _ in range(d)) for _ in range(n)], d)
        if config.full_rank != d:
            continue
        z = ZonotopeSpec(config)
        try:
            tu = hstar_totally_unimodular(z)
        except LatticeMathError:
            continue
        assert tu == hstar_zonotope(z)
        checked += 1


def test_hstar_type_b_parallelepiped_examples():
    assert hstar_type_b_parallelepiped([(1,)]).h == (1, 1)
    assert hstar_type_b_parallelepiped([(1, 0), (0, 1)]).h == (1, 6, 1)
    assert hstar_type_b_parallelepiped([(1,)], (1,)).h == (0, 2)


def test_hstar_type_b_zonotope_examples():
    square = ZonotopeSpec(VectorConfiguration([(1, 0), (0, 1)]), "typeB")
    assert hstar_type_b_zonotope(square).h == (1, 6, 1)
    segment = ZonotopeSpec(VectorConfiguration([(1,)]), "typeB")
    assert hstar_type_b_zonotope(segment).h == (1, 1)
    hexagon = ZonotopeSpec(HEXAGON, "typeB")
    assert hstar_type_b_zonotope(hexagon) == hstar_via_oracle(hexagon)
    skewed = ZonotopeSpec(SKEW, "typeB")
    assert hstar_type_b_zonotope(skewed).h == (1, 10, 5)
    assert hstar_via_oracle(skewed).h == (1, 10, 5)


def test_type_b_matches_unit_cube_eulerian():
    for d in range(1, 6):
        units = VectorConfiguration(
            [tuple(1 if r == i else 0 for r in range(d)) for i in range(d)], d)
        z = ZonotopeSpec(units, "typeB")
        expected = HStarVector(eulerian_b(d).padded(d + 1), d)
        assert hstar_type_b_zonotope(z) == expected, d


def test_ehrhart_type_b_is_standard_at_doubled_dilate():
    z = ZonotopeSpec(HEXAGON, "typeB")
    assert ehrhart_type_b_zonotope(z) == Poly((1, 6, 12))
    assert hstar_from_ehrhart(Poly((1, 6, 12)), 2) == hstar_type_b_zonotope(z)


def test_mode_mismatch_errors():
    with pytest.raises(LatticeMathError):
        hstar_zonotope(ZonotopeSpec(HEXAGON, "typeB"))
    with pytest.raises(LatticeMathError):
        hstar_type_b_zonotope(ZonotopeSpec(HEXAGON))
    with pytest.raises(LatticeMathError):
        ZonotopeSpec(HEXAGON, "diag")


def test_express_in_eulerian_basis_examples():
    assert express_in_eulerian_basis(HStarVector((1, 4, 1))) == (1, 1, 1)
    assert express_in_eulerian_basis(HStarVector((1, 7, 0))) == (1, 3, 0)
    for d in range(1, 6):
        for j in range(1, d + 2):
            h = HStarVector(a_j_polynomial(d + 1, j).padded(d + 1), d)
            coords = express_in_eulerian_basis(h)
            assert coords == tuple(1 if i == j - 1 else 0 for i in range(d + 1))


def test_is_in_zonotope_cone_examples():
    assert is_in_zonotope_cone(HStarVector((1, 4, 1)))
    assert not is_in_zonotope_cone(HStarVector((2, 0, 0)))
    assert not is_in_zonotope_cone(HStarVector((1, 0, 1)))
    assert express_in_eulerian_basis(HStarVector((1, 0, 1))) == (1, -1, 1)


def test_eulerian_ray_parallelepiped():
    z = eulerian_ray_parallelepiped(2, 3, 3)
    assert z.config.vectors == ((1, 0), (1, 4))
    assert hstar_zonotope(z).h == (1, 4, 3)
    z = eulerian_ray_parallelepiped(2, 2, 3)
    assert z.config.vectors == ((4, 0), (0, 1))
    assert hstar_zonotope(z).h == (1, 7, 0)
    for k in (2, 3, 4):
        assert hstar_zonotope(eulerian_ray_parallelepiped(3, k, 0)).h == \
            a_j_polynomial(4, 1).padded(4)
    with pytest.raises(LatticeMathError):
        eulerian_ray_parallelepiped(2, 4, 1)
    with pytest.raises(LatticeMathError):
        eulerian_ray_parallelepiped(2, 2, -1)


def test_reflexive_examples():
    assert is_reflexive_by_ehrhart(Poly((1, 2, 2)), 2)
    assert not is_reflexive_by_ehrhart(Poly((1, 2, 1)), 2)
    assert is_reflexive_by_ehrhart(Poly((1, 3, 3)), 2)


def _count_halfopen_parallelepiped(vectors, removed, n):
    """Inclusion-exclusion over closed faces; independent of the h* formulas."""
    from itertools import combinations
    total = 0
    base = list(vectors)
    for k in range(len(removed) + 1):
        for dropped in combinations(removed, k):
            kept = [v for i, v in enumerate(base, start=1) if i not in dropped]
            d = len(base[0])
            config = VectorConfiguration(kept, d)
            total += (-1) ** k * count_lattice_points(ZonotopeSpec(config), n)
    return total


def test_halfopen_dilation_counts_match_box_sums():
    # phi(n * halfopen(I)) = sum over supersets J of I of n^|J| phi(box(J))
    rng = random.Random(43)
    cases = 0
    while cases < 12:
        d = rng.randint(1, 3)
        vectors = [tuple(rng.randint(-2, 2) for _ in range(d)) for _ in range(d)]
        config = VectorConfiguration(vectors, d)
        if config.full_rank != d:
            continue
        r = d
        removed = tuple(i for i in range(1, r + 1) if rng.random() < 0.5)
        removed_set = set(removed)
        for n in range(5):
            direct = _count_halfopen_parallelepiped(vectors, removed, n)
            from itertools import combinations
            predicted = 0
            for k in range(r + 1):
                for sup in combinations(range(1, r + 1), k):
                    if removed_set <= set(sup):
                        predicted += n ** len(sup) * config.minor_gcd(sup)
            assert direct == predicted, (vectors, removed, n)
        cases += 1


def test_halfopen_parallelepiped_hstar_matches_oracle():
    rng = random.Random(47)
    cases = 0
    while cases < 10:
        d = rng.randint(1, 3)
        vectors = [tuple(rng.randint(-2, 2) for _ in range(d)) for _ in range(d)]
        config = VectorConfiguration(vectors, d)
        if config.full_rank != d:
            continue
        removed = tuple(i for i in range(1, d + 1) if rng.random() < 0.5)
        counts = [_count_halfopen_parallelepiped(vectors, removed, n)
                  for n in range(d + 2)]
        ehr = interpolate_ehrhart(counts, d)
        assert hstar_halfopen_parallelepiped(vectors, removed) == \
            hstar_from_ehrhart(ehr, d), (vectors, removed)
        cases += 1


def test_hstar_linear_in_box_table():
    rng = random.Random(53)
    for config in (HEXAGON, SKEW):
        z = ZonotopeSpec(config)
        sets = config.independent_sets()
        t1 = BoxValuationTable(config, {s: Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                                        for s in sets})
        t2 = BoxValuationTable(config, {s: Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                                        for s in sets})
        alpha, beta = Fraction(2, 3), Fraction(-1, 2)
        combo = BoxValuationTable(
            config, {s: alpha * t1.value(s) + beta * t2.value(s) for s in sets})
        lhs = hstar_zonotope(z, combo).poly()
        rhs = alpha * hstar_zonotope(z, t1).poly() + beta * hstar_zonotope(z, t2).poly()
        assert lhs == rhs


def test_custom_table_override():
    table = default_box_table(SKEW).override({(1, 2): 0})
    assert hstar_zonotope(ZonotopeSpec(SKEW), table).h == (1, 1, 0)
    with pytest.raises(DependentSetError):
        default_box_table(SKEW).override({(3,): 1})
    with pytest.raises(LatticeMathError):
        hstar_zonotope(ZonotopeSpec(HEXAGON), table)  # table bound to SKEW
    with pytest.raises(DependentSetError):
        BoxValuationTable(SKEW, {s: 1 for s in (*SKEW.independent_sets(), (1, 2, 3))})


def test_hstar_independent_of_ground_order():
    # The decomposition into half-open pieces depends on the ground-set order,
    # but the assembled h* does not.
    rng = random.Random(59)
    for _ in range(15):
        d = rng.randint(1, 3)
        while True:
            config = VectorConfiguration(
                [tuple(rng.randint(-2, 2) for _ in range(d))
                 for _ in range(rng.randint(d, 5))], d)
            if config.full_rank == d:
                break
        forward = hstar_zonotope(ZonotopeSpec(config))
        backward = hstar_zonotope(ZonotopeSpec(config.with_reverse_order()))
        assert forward == backward, config
        shuffled = list(config.vectors)
        rng.shuffle(shuffled)
        permuted = hstar_zonotope(ZonotopeSpec(VectorConfiguration(shuffled, d)))
        assert permuted == forward, (config, shuffled)
