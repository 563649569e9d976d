"""Linear matroid of an ordered integer vector configuration.

Indices are 1-based throughout, matching the convention that the ground set
is [n] with the matroid order v_1 < ... < v_n given by the input order.  The
`reverse_order` flag exposes the same configuration under the reversed order
v_n < ... < v_1 without mutating or copying the vectors; it affects every
order-sensitive notion (lexicographic basis order, internally passive
elements, minimal completing bases).

Duplicate vectors are distinct parallel elements; zero vectors are loops and
never independent.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from . import _linalg
from .errors import DependentSetError, LatticeMathError


def _as_index_set(indices: Iterable[int], n: int) -> tuple:
    s = tuple(sorted(indices))
    if len(set(s)) != len(s):
        raise LatticeMathError(f"index set {s!r} has repeats")
    if s and (s[0] < 1 or s[-1] > n):
        raise LatticeMathError(f"index set {s!r} not contained in 1..{n}")
    return s


class VectorConfiguration:
    """Ordered list of integer vectors in a fixed ambient dimension."""

    def __init__(self, vectors: Sequence[Sequence[int]], dim: int | None = None,
                 reverse_order: bool = False):
        vecs = tuple(tuple(int(x) for x in v) for v in vectors)
        for v in vecs:
            for x in v:
                if not isinstance(x, int):
                    raise LatticeMathError("generator entries must be integers")
        if dim is None:
            if not vecs:
                raise LatticeMathError("dimension is required for an empty configuration")
            dim = len(vecs[0])
        if any(len(v) != dim for v in vecs):
            raise LatticeMathError("all generators must have the same length")
        self.vectors = vecs
        self.dim = dim
        self.n = len(vecs)
        self.reverse_order = bool(reverse_order)

    def __eq__(self, other):
        if isinstance(other, VectorConfiguration):
            return (self.vectors, self.dim, self.reverse_order) == \
                   (other.vectors, other.dim, other.reverse_order)
        return NotImplemented

    def __hash__(self):
        return hash((self.vectors, self.dim, self.reverse_order))

    def __repr__(self):
        flag = ", reverse_order=True" if self.reverse_order else ""
        return f"VectorConfiguration({list(self.vectors)!r}, dim={self.dim}{flag})"

    def with_reverse_order(self) -> "VectorConfiguration":
        return VectorConfiguration(self.vectors, self.dim, not self.reverse_order)

    def _order_pos(self, i: int) -> int:
        return self.n + 1 - i if self.reverse_order else i

    def _matrix_columns(self, indices: Sequence[int]):
        """Rows of the d x |I| matrix whose columns are the selected vectors."""
        return [[self.vectors[i - 1][r] for i in indices] for r in range(self.dim)]

    # -- rank and independence ------------------------------------------------

    def rank(self, indices: Iterable[int] | None = None) -> int:
        """Rank of the selected columns (all of them by default)."""
        s = _as_index_set(indices, self.n) if indices is not None else \
            tuple(range(1, self.n + 1))
        if not s:
            return 0
        return _linalg.rank([list(self.vectors[i - 1]) for i in s])

    def is_independent(self, indices: Iterable[int]) -> bool:
        s = _as_index_set(indices, self.n)
        return self.rank(s) == len(s)

    @cached_property
    def full_rank(self) -> int:
        return self.rank()

    def independent_sets(self) -> tuple[tuple, ...]:
        """All independent index sets including (), in sorted order."""
        return self._independent_sets

    @cached_property
    def _independent_sets(self) -> tuple[tuple, ...]:
        found = [()]
        def grow(prefix: tuple, start: int):
            for i in range(start, self.n + 1):
                cand = prefix + (i,)
                if self.rank(cand) == len(cand):
                    found.append(cand)
                    grow(cand, i + 1)
        grow((), 1)
        return tuple(sorted(found, key=lambda s: (len(s), s)))

    def bases(self) -> tuple[tuple, ...]:
        """Maximal independent sets in lexicographic order of the active ordering."""
        return self._bases

    @cached_property
    def _bases(self) -> tuple[tuple, ...]:
        r = self.full_rank
        maximal = [s for s in self._independent_sets if len(s) == r]
        return tuple(sorted(maximal, key=lambda b: tuple(sorted(self._order_pos(i) for i in b))))

    # -- minor gcd ------------------------------------------------------------

    def minor_gcd(self, indices: Iterable[int]) -> int:
        """gcd of all maximal minors of the column matrix of an independent set.

        Equals the number of lattice points in the half-open box spanned by
        the selected vectors; 1 for the empty set by convention.
        """
        s = _as_index_set(indices, self.n)
        if not s:
            return 1
        if not self.is_independent(s):
            raise DependentSetError(f"{s!r} is not independent")
        k = len(s)
        cols = self._matrix_columns(s)
        g = 0
        for rows in combinations(range(self.dim), k):
            minor = _linalg.det_bareiss([cols[r] for r in rows])
            g = gcd(g, abs(minor))
            if g == 1:
                break
        return g

    # -- order-sensitive structure ---------------------------------------------

    def is_basis(self, indices: Iterable[int]) -> bool:
        s = _as_index_set(indices, self.n)
        return len(s) == self.full_rank and self.is_independent(s)

    def internally_passive(self, basis: Iterable[int]) -> tuple:
        """Elements of the basis exchangeable for an order-smaller outside element."""
        b = _as_index_set(basis, self.n)
        if not self.is_basis(b):
            raise DependentSetError(f"{b!r} is not a basis")
        inside = set(b)
        passive = []
        for i in b:
            for j in range(1, self.n + 1):
                if j in inside or self._order_pos(j) >= self._order_pos(i):
                    continue
                if self.is_independent(tuple(sorted(set(b) - {i} | {j}))):
                    passive.append(i)
                    break
        return tuple(sorted(passive))

    def min_basis_containing(self, indices: Iterable[int]) -> tuple:
        """Lexicographically least basis containing the independent set."""
        s = _as_index_set(indices, self.n)
        if not self.is_independent(s):
            raise DependentSetError(f"{s!r} is not independent")
        chosen = set(s)
        order = sorted(range(1, self.n + 1), key=self._order_pos)
        current_rank = len(s)
        for j in order:
            if current_rank == self.full_rank:
                break
            if j in chosen:
                continue
            cand = tuple(sorted(chosen | {j}))
            if self.rank(cand) == len(cand):
                chosen.add(j)
                current_rank += 1
        return tuple(sorted(chosen))

    def is_coloop_free(self) -> bool:
        """True iff removing any single vector leaves the rank unchanged."""
        r = self.full_rank
        everything = range(1, self.n + 1)
        return all(self.rank([j for j in everything if j != i]) == r
                   for i in everything)
