"""Exact polynomial arithmetic and coefficient-shape predicates.

Polynomials carry integer or rational coefficients and are immutable.
h*-vectors pair a coefficient tuple (h_0, ..., h_d) with an explicit ambient
degree d, because the shape predicates (palindromicity, alternating increase)
depend on d and not just on the nonzero support.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd, lcm
from typing import Iterable, Sequence, Union

from .errors import LatticeMathError

Scalar = Union[int, Fraction]


def _exact(x) -> Scalar:
    """Coerce to int or reduced Fraction; floats are rejected."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    raise TypeError(f"expected an int or Fraction, got {type(x).__name__}")


class Poly:
    """Univariate polynomial with exact coefficients, index i = coeff of t^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_exact(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self.coeffs!r})"

    def __add__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Poly":
        return self + (-other if isinstance(other, Poly) else Poly((-other,)))

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        if not self or not other:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _exact(acc) if isinstance(acc, Fraction) else acc

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def scale_argument(self, k: Scalar) -> "Poly":
        """p(k*t) as a polynomial in t."""
        return Poly(tuple(c * k**i for i, c in enumerate(self.coeffs)))

    def reversed(self, d: int) -> "Poly":
        """t^d * p(1/t), the coefficient reversal at ambient degree d."""
        if self.degree > d:
            raise LatticeMathError(f"degree {self.degree} exceeds ambient degree {d}")
        padded = list(self.coeffs) + [0] * (d + 1 - len(self.coeffs))
        return Poly(tuple(reversed(padded)))

    def padded(self, length: int) -> tuple:
        """Coefficients padded with zeros to the requested length."""
        if len(self.coeffs) > length:
            raise LatticeMathError(f"degree {self.degree} does not fit in length {length}")
        return self.coeffs + (0,) * (length - len(self.coeffs))

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)


class HStarVector:
    """Coefficient vector (h_0, ..., h_d) with explicit ambient degree d."""

    __slots__ = ("h", "d")

    def __init__(self, entries: Sequence[Scalar], d: int | None = None):
        h = tuple(_exact(x) for x in entries)
        if not h:
            raise LatticeMathError("empty h*-vector")
        if d is None:
            d = len(h) - 1
        if len(h) != d + 1:
            raise LatticeMathError(f"expected {d + 1} entries for ambient degree {d}, got {len(h)}")
        self.h = h
        self.d = d

    @classmethod
    def from_poly(cls, p: Poly, d: int) -> "HStarVector":
        return cls(p.padded(d + 1), d)

    def poly(self) -> Poly:
        return Poly(self.h)

    def __iter__(self):
        return iter(self.h)

    def __getitem__(self, i):
        return self.h[i]

    def __len__(self):
        return len(self.h)

    def __eq__(self, other) -> bool:
        if isinstance(other, HStarVector):
            return self.h == other.h and self.d == other.d
        return NotImplemented

    def __hash__(self):
        return hash((self.h, self.d))

    def __repr__(self) -> str:
        return f"HStarVector({self.h!r}, d={self.d})"


def _as_hstar(h, d: int | None = None) -> HStarVector:
    if isinstance(h, HStarVector):
        return h
    return HStarVector(tuple(h), d)


# ---------------------------------------------------------------------------
# Basis transformations
# ---------------------------------------------------------------------------

def _binomial_poly(shift: int, r: int) -> Poly:
    """C(n + shift, r) as an exact polynomial in n."""
    p = Poly((Fraction(1, 1),))
    for s in range(r):
        p = p * Poly((shift - s, 1))
    denom = 1
    for s in range(1, r + 1):
        denom *= s
    return p * Fraction(1, denom)


def hstar_from_ehrhart(ehr: Poly, r: int) -> HStarVector:
    """h*-vector of a counting polynomial of an r-dimensional body.

    Uses h_k = sum_{i<=k} (-1)^(k-i) C(r+1, k-i) ehr(i); the result satisfies
    sum_i h_i C(n+r-i, r) = ehr(n) for all n.  Non-integer entries mean the
    input was not integer-valued of the declared degree.
    """
    if r < 0:
        raise LatticeMathError("ambient degree must be nonnegative")
    if ehr.degree > r:
        raise LatticeMathError(f"polynomial degree {ehr.degree} exceeds ambient degree {r}")
    values = [ehr(i) for i in range(r + 1)]
    h = []
    for k in range(r + 1):
        hk = sum((-1) ** (k - i) * comb(r + 1, k - i) * values[i] for i in range(k + 1))
        hk = _exact(Fraction(hk)) if not isinstance(hk, int) else hk
        if not isinstance(hk, int):
            raise LatticeMathError(
                f"h*-entry h_{k} = {hk} is not an integer; the input is not an "
                f"integer-valued polynomial of degree at most {r}"
            )
        h.append(hk)
    return HStarVector(h, r)


def ehrhart_from_hstar(h: HStarVector) -> Poly:
    """Counting polynomial sum_i h_i C(n+d-i, d); exact inverse of hstar_from_ehrhart."""
    h = _as_hstar(h)
    out = Poly()
    for i, hi in enumerate(h.h):
        if hi != 0:
            out = out + _binomial_poly(h.d - i, h.d) * hi
    return out


def express_in_shifted_power_basis(p: Poly, d: int) -> tuple:
    """Coordinates (c_0, ..., c_d) with p(n) = sum_j c_j n^j (1+n)^(d-j)."""
    if p.degree > d:
        raise LatticeMathError(f"degree {p.degree} exceeds basis degree {d}")
    one_plus_n = Poly((1, 1))
    coords = []
    q = p
    for j in range(d + 1):
        c = q(0)
        coords.append(c)
        q = q - one_plus_n ** (d - j) * c
        assert (not q) or q.coeffs[0] == 0
        q = Poly(q.coeffs[1:])
    assert not q
    return tuple(coords)


# ---------------------------------------------------------------------------
# Real-rootedness via Sturm chains
# ---------------------------------------------------------------------------

def _primitive(p: Poly) -> Poly:
    """Scale by a positive rational so coefficients are coprime integers."""
    if not p:
        return p
    denom = lcm(*(c.denominator for c in map(Fraction, p.coeffs)))
    ints = [int(c * denom) for c in p.coeffs]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return Poly(tuple(v // g for v in ints))


def _poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * max(0, a.degree - b.degree + 1)
    rem = list(a.coeffs)
    lead = Fraction(b.coeffs[-1])
    db = b.degree
    for i in range(len(rem) - 1, db - 1, -1):
        if rem[i] == 0:
            continue
        f = rem[i] / lead
        q[i - db] = f
        for j, c in enumerate(b.coeffs):
            rem[i - db + j] -= f * c
        rem[i] = 0
    return Poly(q), Poly(rem)


def _poly_gcd(a: Poly, b: Poly) -> Poly:
    a, b = _primitive(a), _primitive(b)
    while b:
        a, b = b, _primitive(_poly_divmod(a, b)[1])
    return a


def _sign_at_infinity(p: Poly, positive: bool) -> int:
    lc = p.coeffs[-1]
    s = 1 if lc > 0 else -1
    if not positive and p.degree % 2 == 1:
        s = -s
    return s


def count_distinct_real_roots(p: Poly) -> int:
    """Number of distinct real roots, by a Sturm chain over (-oo, oo)."""
    if not p:
        raise LatticeMathError("the zero polynomial has no well-defined root count")
    p = _primitive(p)
    if p.degree <= 0:
        return 0
    chain = [p, _primitive(p.derivative())]
    while chain[-1].degree >= 1:
        rem = _poly_divmod(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append(_primitive(-rem))
    def variations(positive: bool) -> int:
        signs = [_sign_at_infinity(q, positive) for q in chain if q]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    return variations(False) - variations(True)


def is_real_rooted(p: Poly) -> bool:
    """True iff every complex root of p is real, counted with multiplicity.

    Splits off the squarefree part q = p/gcd(p, p'), checks that q has
    deg(q) distinct real roots, and recurses on the repeated-root part.
    """
    if not p:
        raise LatticeMathError("the zero polynomial is not a valid input")
    p = _primitive(p)
    while p.degree > 0:
        g = _poly_gcd(p, p.derivative())
        q, rem = _poly_divmod(p, g)
        assert not rem
        q = _primitive(q)
        if count_distinct_real_roots(q) != q.degree:
            return False
        p = g
    return True


# ---------------------------------------------------------------------------
# Coefficient-shape predicates
# ---------------------------------------------------------------------------

def is_unimodal(h) -> tuple[bool, frozenset]:
    """Whether h rises then falls weakly; on success also the set of argmax indices."""
    h = _as_hstar(h)
    seq = h.h
    peak = max(seq)
    k = seq.index(peak)
    rising = all(seq[i] <= seq[i + 1] for i in range(k))
    falling = all(seq[i] >= seq[i + 1] for i in range(k, len(seq) - 1))
    if rising and falling:
        return True, frozenset(i for i, v in enumerate(seq) if v == peak)
    return False, frozenset()


def is_palindromic(h) -> bool:
    """True iff h_i = h_{d-i} for all i (trailing zeros participate via d)."""
    h = _as_hstar(h)
    return all(h.h[i] == h.h[h.d - i] for i in range(h.d + 1))


def is_alternatingly_increasing(h) -> bool:
    """True iff h_0 <= h_d <= h_1 <= h_{d-1} <= ... <= h_{floor((d+1)/2)}."""
    h = _as_hstar(h)
    lo, hi = 0, h.d
    chain = []
    while lo <= hi:
        chain.append(h.h[lo])
        if hi > lo:
            chain.append(h.h[hi])
        lo += 1
        hi -= 1
    return all(a <= b for a, b in zip(chain, chain[1:]))


def unimodality_violation(h):
    """Index witnessing a failure of unimodality, or None (a rise after a fall)."""
    h = _as_hstar(h)
    seq = h.h
    fallen = False
    for i in range(1, len(seq)):
        if seq[i] < seq[i - 1]:
            fallen = True
        elif seq[i] > seq[i - 1] and fallen:
            return i
    return None


def alternating_increase_violation(h):
    """Pair of indices (i, j) with h_i > h_j violating the alternating chain, or None."""
    h = _as_hstar(h)
    order = []
    lo, hi = 0, h.d
    while lo <= hi:
        order.append(lo)
        if hi > lo:
            order.append(hi)
        lo += 1
        hi -= 1
    for a, b in zip(order, order[1:]):
        if h.h[a] > h.h[b]:
            return a, b
    return None


def symmetric_decomposition(h) -> tuple[Poly, Poly]:
    """Unique split h(t) = a(t) + t*b(t) with a, b palindromic at d/2 and (d-1)/2."""
    h = _as_hstar(h)
    d = h.d
    a = [0] * (d + 1)
    b = [0] * d
    for i in range(d // 2 + 1):
        a[i] = h.h[i] - (b[i - 1] if i > 0 else 0)
        a[d - i] = a[i]
        if d - 1 - i >= 0:
            b[d - 1 - i] = h.h[d - i] - a[d - i]
            b[i] = b[d - 1 - i]
    assert all(h.h[i] == a[i] + (b[i - 1] if i > 0 else 0) for i in range(d + 1))
    assert all(a[i] == a[d - i] for i in range(d + 1))
    assert all(b[i] == b[d - 1 - i] for i in range(d))
    return Poly(a), Poly(b)
