"""Descent statistics on permutations and signed permutations.

Permutations are 1-indexed words over [d] in one-line notation; signed
permutations are a (word, signs) pair with signs in {+1, -1}.  Descent
positions are likewise 1-based; signed descents may additionally use the
virtual position 0 (word_0 = 0 with positive sign, never stored).

Each polynomial family has two deliberately independent computation paths,
enumeration and recurrence/identity, so that one can serve as the other's
oracle in tests.
"""

from __future__ import annotations

from functools import cache
from itertools import permutations, product
from math import comb, factorial
from typing import Iterator, Sequence

from .errors import EnumerationLimitError, LatticeMathError
from .polycore import Poly

MAX_ENUMERATION_D_TYPE_A = 12
MAX_ENUMERATION_D_TYPE_B = 10


def _validate_word(word: Sequence[int]) -> tuple:
    w = tuple(word)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise LatticeMathError(f"{w!r} is not a permutation of 1..{len(w)}")
    return w


def _validate_signs(word: tuple, signs: Sequence[int]) -> tuple:
    s = tuple(signs)
    if len(s) != len(word) or any(e not in (1, -1) for e in s):
        raise LatticeMathError("signs must be a +1/-1 vector matching the word length")
    return s


def descent_set(word: Sequence[int]) -> frozenset:
    """Positions i in [d-1] with word_i > word_{i+1}."""
    w = _validate_word(word)
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def descent_count(word: Sequence[int]) -> int:
    return len(descent_set(word))


def j_descent_set(word: Sequence[int], j: int) -> frozenset:
    """descent_set(word) plus {d} exactly when the last letter is at least d+1-j."""
    w = _validate_word(word)
    d = len(w)
    if not 0 <= j <= d:
        raise LatticeMathError(f"j must lie in 0..{d}, got {j}")
    des = descent_set(w)
    if w and w[-1] >= d + 1 - j:
        des = des | {d}
    return des


def signed_descent_set(word: Sequence[int], signs: Sequence[int]) -> frozenset:
    """Positions i in {0} u [d-1] with eps_i w_i > eps_{i+1} w_{i+1}, using w_0 = 0."""
    w = _validate_word(word)
    s = _validate_signs(w, signs)
    values = (0,) + tuple(e * x for e, x in zip(s, w))
    return frozenset(i for i in range(len(w)) if values[i] > values[i + 1])


def signed_descent_count(word: Sequence[int], signs: Sequence[int]) -> int:
    return len(signed_descent_set(word, signs))


def l_descent_set_b(word: Sequence[int], signs: Sequence[int], l: int) -> frozenset:
    """signed_descent_set plus {d} exactly when the last signed letter is at least d+1-l."""
    w = _validate_word(word)
    s = _validate_signs(w, signs)
    d = len(w)
    if not 0 <= l <= d:
        raise LatticeMathError(f"l must lie in 0..{d}, got {l}")
    des = signed_descent_set(w, s)
    if d and s[-1] * w[-1] >= d + 1 - l:
        des = des | {d}
    return des


def signed_permutations(d: int) -> Iterator[tuple[tuple, tuple]]:
    """All 2^d d! signed permutations on [d] as (word, signs) pairs."""
    for word in permutations(range(1, d + 1)):
        for signs in product((1, -1), repeat=d):
            yield word, signs


# ---------------------------------------------------------------------------
# Refined Eulerian polynomials, type A
# ---------------------------------------------------------------------------

def a_j_polynomial_enumerate(d: int, j: int) -> Poly:
    """Descent generating polynomial over words in S_d with last letter d+1-j."""
    _check_a_args(d, j)
    if d > MAX_ENUMERATION_D_TYPE_A:
        raise EnumerationLimitError(
            f"enumerating (d-1)! = {factorial(d - 1)} words exceeds the d <= "
            f"{MAX_ENUMERATION_D_TYPE_A} guard"
        )
    last = d + 1 - j
    rest = [x for x in range(1, d + 1) if x != last]
    counts = [0] * d
    for head in permutations(rest):
        word = head + (last,)
        counts[sum(1 for i in range(d - 1) if word[i] > word[i + 1])] += 1
    return Poly(counts)


@cache
def _a_row(d: int) -> tuple[Poly, ...]:
    """The tuple (A_1(d,t), ..., A_d(d,t)) built bottom-up from A_1(1,t) = 1."""
    if d == 1:
        return (Poly((1,)),)
    prev = _a_row(d - 1)
    t = Poly((0, 1))
    prefix = [Poly()]
    for p in prev:
        prefix.append(prefix[-1] + p)
    total = prefix[-1]
    row = []
    for j in range(1, d + 1):
        below = prefix[j - 1]
        row.append(t * below + (total - below))
    return tuple(row)


def a_j_polynomial(d: int, j: int) -> Poly:
    """A_j(d,t) by the one-step recurrence; no factorial blowup."""
    _check_a_args(d, j)
    return _a_row(d)[j - 1]


def _check_a_args(d: int, j: int) -> None:
    if d < 1:
        raise LatticeMathError(f"d must be at least 1, got {d}")
    if not 1 <= j <= d:
        raise LatticeMathError(f"j must lie in 1..{d}, got {j}")


def eulerian_a(d: int) -> Poly:
    """Classical Eulerian polynomial of S_d (coefficient sum d!)."""
    if d < 1:
        raise LatticeMathError(f"d must be at least 1, got {d}")
    return a_j_polynomial(d + 1, 1)


def eulerian_a_enumerate(d: int) -> Poly:
    """Classical Eulerian polynomial by direct enumeration of S_d."""
    if d < 1:
        raise LatticeMathError(f"d must be at least 1, got {d}")
    if d > MAX_ENUMERATION_D_TYPE_A:
        raise EnumerationLimitError(
            f"enumerating d! = {factorial(d)} words exceeds the d <= "
            f"{MAX_ENUMERATION_D_TYPE_A} guard"
        )
    counts = [0] * d
    for word in permutations(range(1, d + 1)):
        counts[sum(1 for i in range(d - 1) if word[i] > word[i + 1])] += 1
    return Poly(counts)


# ---------------------------------------------------------------------------
# Refined Eulerian polynomials, type B
# ---------------------------------------------------------------------------

def _check_b_enumeration(d: int) -> None:
    if d > MAX_ENUMERATION_D_TYPE_B:
        raise EnumerationLimitError(
            f"enumerating 2^d d! = {2**d * factorial(d)} signed words exceeds "
            f"the d <= {MAX_ENUMERATION_D_TYPE_B} guard"
        )


def b_l_polynomial_enumerate(d: int, l: int) -> Poly:
    """Signed-descent generating polynomial over B_d with last signed letter d+1-l."""
    if d < 1:
        raise LatticeMathError(f"d must be at least 1, got {d}")
    if not 1 <= l <= d:
        raise LatticeMathError(f"l must lie in 1..{d}, got {l}")
    _check_b_enumeration(d)
    last = d + 1 - l
    rest = [x for x in range(1, d + 1) if x != last]
    counts = [0] * (d + 1)
    for head in permutations(rest):
        word = head + (last,)
        for head_signs in product((1, -1), repeat=d - 1):
            signs = head_signs + (1,)
            values = (0,) + tuple(e * x for e, x in zip(signs, word))
            counts[sum(1 for i in range(d) if values[i] > values[i + 1])] += 1
    return Poly(counts)


def b_l_polynomial_via_a(d: int, l: int) -> Poly:
    """B_{l+1}(d+1,t) = 2^l sum_j C(d-l, j) A_{j+l+1}(d+1,t), for 0 <= l <= d."""
    if d < 0:
        raise LatticeMathError(f"d must be nonnegative, got {d}")
    if not 0 <= l <= d:
        raise LatticeMathError(f"l must lie in 0..{d}, got {l}")
    total = Poly()
    for j in range(d - l + 1):
        total = total + a_j_polynomial(d + 1, j + l + 1) * comb(d - l, j)
    return total * 2**l


def eulerian_b(d: int) -> Poly:
    """Type-B Eulerian polynomial over all signed permutations (sum 2^d d!)."""
    if d < 1:
        raise LatticeMathError(f"d must be at least 1, got {d}")
    _check_b_enumeration(d)
    counts = [0] * (d + 1)
    for word, signs in signed_permutations(d):
        counts[signed_descent_count(word, signs)] += 1
    return Poly(counts)


def eulerian_b_via_a(d: int) -> Poly:
    """Type-B Eulerian polynomial assembled from the refined family.

    Splits B_d by the sign of the last signed letter; the negative half is the
    coefficient reversal of the positive half (negate every letter).
    """
    if d < 1:
        raise LatticeMathError(f"d must be at least 1, got {d}")
    total = Poly()
    for l in range(1, d + 1):
        half = b_l_polynomial_via_a(d - 1, l - 1)
        total = total + half + half.reversed(d)
    return total
