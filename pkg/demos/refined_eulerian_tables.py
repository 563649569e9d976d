"""Tables of refined Eulerian polynomials and the identities relating them.

The type-A family A_j(d,t) refines the classical Eulerian polynomial by the
last letter of the permutation; the type-B family B_l(d,t) does the same for
signed permutations.  Enumeration and recurrence/identity paths are computed
independently and compared.
"""

from zonoehrhart import (a_j_polynomial, a_j_polynomial_enumerate,
                         b_l_polynomial_enumerate, b_l_polynomial_via_a,
                         eulerian_a, eulerian_b)
from zonoehrhart.polycore import Poly


def main():
    print("Type-A refined triangle A_j(d,t), rows d = 1..6:")
    for d in range(1, 7):
        row = [a_j_polynomial(d, j).padded(d) for j in range(1, d + 1)]
        print(f"  d={d}: " + "  ".join(str(list(v)) for v in row))
        for j in range(1, d + 1):
            assert a_j_polynomial(d, j) == a_j_polynomial_enumerate(d, j)
    print("  (each row was re-derived by brute-force enumeration)")
    print()

    print("Row sums give the classical Eulerian polynomials:")
    for d in range(1, 7):
        total = sum((a_j_polynomial(d, j) for j in range(1, d + 1)), Poly())
        assert total == eulerian_a(d)
        print(f"  sum_j A_j({d},t) = {list(total.coeffs)}")
    print()

    print("Reversal symmetry pairs A_j with A_(d+1-j):")
    d = 5
    for j in range(1, d + 1):
        left = a_j_polynomial(d, j)
        right = a_j_polynomial(d, d + 1 - j).reversed(d - 1)
        print(f"  A_{j}({d}) = reverse(A_{d + 1 - j}({d})) = {list(left.padded(d))}")
        assert left == right
    print()

    print("Type-B refined family via the binomial identity, checked against")
    print("signed-permutation enumeration:")
    for d in range(1, 5):
        for l in range(1, d + 1):
            via_identity = b_l_polynomial_via_a(d - 1, l - 1)
            via_words = b_l_polynomial_enumerate(d, l)
            assert via_identity == via_words
            print(f"  B_{l}({d},t) = {list(via_identity.padded(d + 1))}")
    print()

    print("Summing the refined family over the last signed letter recovers the")
    print("full type-B Eulerian polynomial:")
    for d in range(1, 5):
        print(f"  B({d},t) = {list(eulerian_b(d).coeffs)}")


if __name__ == "__main__":
    main()
