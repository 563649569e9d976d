"""The cone of zonotope h*-vectors in a fixed dimension.

Every zonotope h*-vector is A_1(d+1) plus a nonnegative integer combination
of A_2(d+1), ..., A_{d+1}(d+1).  This script expresses sample h*-vectors in
that basis and then walks the extreme rays: for each k, a one-parameter
family of parallelepipeds whose h* moves along A_1 + m * A_k, verified
against the brute-force oracle.
"""

from zonoehrhart import (a_j_polynomial, eulerian_ray_parallelepiped,
                         express_in_eulerian_basis, hstar_via_oracle,
                         hstar_zonotope, is_in_zonotope_cone)
from zonoehrhart.matroid import VectorConfiguration
from zonoehrhart.polycore import HStarVector
from zonoehrhart.zonotope import ZonotopeSpec


def main():
    d = 2
    print(f"Refined Eulerian basis in ambient degree {d}:")
    for j in range(1, d + 2):
        print(f"  A_{j}({d + 1}) = {list(a_j_polynomial(d + 1, j).padded(d + 1))}")
    print()

    samples = [
        ("hexagon", ZonotopeSpec(VectorConfiguration([(1, 0), (0, 1), (1, 1)]))),
        ("skew square", ZonotopeSpec(VectorConfiguration([(1, 1), (1, -1)]))),
        ("stretched box", ZonotopeSpec(VectorConfiguration([(4, 0), (0, 1)]))),
    ]
    for name, z in samples:
        h = hstar_zonotope(z)
        coords = express_in_eulerian_basis(h)
        print(f"{name}: h* = {h.h}, coordinates {coords}, "
              f"in cone: {is_in_zonotope_cone(h)}")
    print()

    outside = HStarVector((1, 0, 1))
    print(f"Not every lattice vector qualifies: {outside.h} has coordinates "
          f"{express_in_eulerian_basis(outside)} -> in cone: "
          f"{is_in_zonotope_cone(outside)}")
    print()

    print("Walking the extreme rays with explicit parallelepipeds (d = 3):")
    d = 3
    for k in range(2, d + 2):
        for m in (0, 2, 5):
            z = eulerian_ray_parallelepiped(d, k, m)
            h = hstar_zonotope(z)
            assert h == hstar_via_oracle(z)
            expected = (a_j_polynomial(d + 1, 1) + m * a_j_polynomial(d + 1, k))
            assert h.poly() == expected
            print(f"  k={k}, m={m}: generators {list(z.config.vectors)} "
                  f"-> h* = {h.h}")
        print()


if __name__ == "__main__":
    main()
