"""Rational tangles and their classes under 5-moves.

p/q = a_k + 1/(a_{k-1} + ... + 1/a_1), all a_i of one sign. The tangle is
built from a_1 upwards. The step for a_k is a horizontal twist, and the steps
alternate between vertical and horizontal going down, so a horizontal step
sends f to f + a and a vertical step sends f to 1/(1/f + a).

Bracket vectors: <T> = a1 e_h + a2 e_v with e_h = [0], e_v = [inf], so that
<T^N> = d a1 + a2 and <T^D> = a1 + d a2. Here [1] = A^-1 e_h + A e_v.

Up to 5-moves (taking p/q ~ -p/-q mod 5) there are 12 classes of rational
tangles, with representatives 1/0, 0/1, +-1/1, +-2/1, +-1/2, +-3/2, 2/5 and 5/2.
The numerator closure of p/q is the rational link p/q. Its class is T2, 4_1,
T1 or H, according to the residues of p and q mod 5.
"""

from __future__ import annotations

from enum import Enum
from typing import Dict, List, Optional, Tuple

from .algebra.laurent import LaurentPoly
from .bracket import LOOP, bracket
from .diagram.core import LinkDiagram
from .diagram.tangle import Tangle
from .notation import Frac

__all__ = [
    "cf_of",
    "frac_of_cf",
    "rational_tangle",
    "rational_link",
    "classify12",
    "CLASS12",
    "RationalLinkClass",
    "classify_rational_link",
    "tangle_bracket_vector",
    "tangle_star",
    "vector_numerator",
    "vector_denominator",
    "coloring_pair_table",
    "integer_vector",
]


def cf_of(f: Frac) -> Tuple[List[int], bool]:
    """Continued fraction [a_k, ..., a_1] and an infinity flag."""
    if f.is_infinite:
        return [], True
    p, q = f.p, f.q
    sign = -1 if p < 0 else 1
    p = abs(p)
    out = []
    while q:
        a, r = divmod(p, q)
        out.append(a)
        p, q = q, r
    return [sign * a for a in out], False


def frac_of_cf(cf: List[int], infinite: bool = False) -> Frac:
    if infinite:
        return Frac(1, 0)
    p, q = cf[-1], 1
    for a in reversed(cf[:-1]):
        p, q = a * p + q, p
    return Frac(p, q)


def rational_tangle(f: Frac) -> Tangle:
    cf, inf = cf_of(f)
    if inf:
        return Tangle.infinity()
    k = len(cf)
    t = Tangle.zero() if k % 2 == 1 else Tangle.infinity()
    for idx in range(k - 1, -1, -1):  # a_1 first
        a = cf[idx]
        horizontal = idx % 2 == 0
        for _ in range(abs(a)):
            sign = 1 if a > 0 else -1
            t = t.twist_h(sign) if horizontal else t.twist_v(sign)
    return t


def rational_link(f: Frac) -> LinkDiagram:
    return rational_tangle(f).numerator()


# --- 5-move classes ---------------------------------------------------------

CLASS12 = [
    Frac(1, 0), Frac(2, 5), Frac(0, 1), Frac(5, 2),
    Frac(-1, 1), Frac(3, 2), Frac(1, 1), Frac(-3, 2),
    Frac(-2, 1), Frac(1, 2), Frac(2, 1), Frac(-1, 2),
]


def classify12(f: Frac) -> Frac:
    """Representative of the 5-move class of the rational tangle f."""
    p, q = f.p % 5, f.q % 5
    if q == 0:
        return Frac(1, 0) if p in (1, 4) else Frac(2, 5)
    small = q in (1, 4)
    if p == 0:
        return Frac(0, 1) if small else Frac(5, 2)
    if p == (-q) % 5:
        return Frac(-1, 1) if small else Frac(3, 2)
    if p == q:
        return Frac(1, 1) if small else Frac(-3, 2)
    if p == (-2 * q) % 5:
        return Frac(-2, 1) if small else Frac(1, 2)
    return Frac(2, 1) if small else Frac(-1, 2)


class RationalLinkClass(Enum):
    T1 = "T1"
    T2 = "T2"
    H = "H"
    FIGURE_EIGHT = "4_1"


def classify_rational_link(f: Frac) -> RationalLinkClass:
    """Class of the numerator closure N([p/q])."""
    p, q = f.p % 5, f.q % 5
    if p == 0:
        return RationalLinkClass.T2 if q in (1, 4) else RationalLinkClass.FIGURE_EIGHT
    return RationalLinkClass.T1 if p in (1, 4) else RationalLinkClass.H


# --- bracket vectors -------------------------------------------------------

Vector = Tuple[LaurentPoly, LaurentPoly]
_D2M1 = LOOP * LOOP - 1


def vector_numerator(v: Vector) -> LaurentPoly:
    return LOOP * v[0] + v[1]


def vector_denominator(v: Vector) -> LaurentPoly:
    return v[0] + LOOP * v[1]


def tangle_bracket_vector(t: Tangle) -> Vector:
    """Solve the two closure equations for (a1, a2)."""
    n = bracket(t.numerator(), limit=None)
    dd = bracket(t.denominator(), limit=None)
    a1 = (LOOP * n - dd).divexact(_D2M1)
    a2 = (LOOP * dd - n).divexact(_D2M1)
    return a1, a2


def tangle_star(v: Vector, w: Vector) -> Vector:
    """Vector of the horizontal sum."""
    return v[0] * w[0], v[0] * w[1] + v[1] * w[0] + LOOP * v[1] * w[1]


def integer_vector(s: int) -> Vector:
    """Vector of [s] computed from [1] = A^-1 e_h + A e_v."""
    one = (LaurentPoly.mono(-1), LaurentPoly.mono(1))
    if s < 0:
        one = (LaurentPoly.mono(1), LaurentPoly.mono(-1))
    v = (LaurentPoly.const(1), LaurentPoly({}, "A"))
    for _ in range(abs(s)):
        v = tangle_star(v, one)
    return v


def coloring_pair_table(n: int) -> Dict[Tuple[Optional[int], Optional[int]], int]:
    """col_n of N([i] + [j]) for i, j in {inf, 0, ..., n-1}; None stands for inf."""
    from .colorings import col_n

    keys: List[Optional[int]] = [None] + list(range(n))
    out = {}
    for i in keys:
        for j in keys:
            ti = Tangle.infinity() if i is None else Tangle.integer(i)
            tj = Tangle.infinity() if j is None else Tangle.integer(j)
            out[(i, j)] = col_n(ti.hsum(tj).numerator(), n)
    return out
