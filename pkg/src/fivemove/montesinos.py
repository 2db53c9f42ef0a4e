"""Pretzel and Montesinos links: closed forms and canonical 5-move classes.

M[c_1, ..., c_r] is the numerator closure of the horizontal sum of the
rational tangles c_i. Bracket vectors multiply under the horizontal sum
(``tangles.tangle_star``), which gives closed forms for the two families

    M[k(2/5), m(1/2)]   and   M[m(1/2), s],

and every Montesinos link reduces under 5-moves to one of these or to a
connected sum of T2, H and 4_1 (T1 when the sum is empty).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple, Union

from .algebra.laurent import LaurentPoly
from .bracket import LOOP, JonesClass5, bracket_to_u, class5_of_poly
from .notation import ConnSum, Frac, LinkSpec, Montesinos, Pretzel, Rational
from .tangles import (
    RationalLinkClass,
    Vector,
    classify12,
    classify_rational_link,
    tangle_star,
    vector_numerator,
)

__all__ = [
    "TangleVector",
    "HALF_VECTOR",
    "TWO_FIVE_VECTOR",
    "family_vector",
    "bracket_two_five_family",
    "bracket_two_five_exact",
    "jones_class_two_five",
    "two_five_components",
    "pretzel_bracket",
    "pretzel_bracket_unsigned",
    "pretzel_jones_tilde",
    "pretzel_self_writhe",
    "pretzel_jones_tilde_closed",
    "PretzelClass",
    "TwoFiveClass",
    "SumClass",
    "CanonicalClass",
    "Reduction",
    "reduce_montesinos",
    "PROBLEM_COLUMN_ORDER",
    "PROBLEM_SUMS",
    "representative_spec",
]

TangleVector = Vector

def _a(k: int, c: int = 1) -> LaurentPoly:
    return LaurentPoly.mono(k, c)


# (1 - A^-4, A^2) and (A^-8 - A^-4 + 2 - A^4, A^2 - A^6)
HALF_VECTOR: Vector = (LaurentPoly({0: 1, -4: -1}), _a(2))
TWO_FIVE_VECTOR: Vector = (LaurentPoly({-8: 1, -4: -1, 0: 2, 4: -1}), LaurentPoly({2: 1, 6: -1}))

_ZERO_VECTOR: Vector = (LaurentPoly.const(1), LaurentPoly({}, "A"))


def _star_all(vs: Iterable[Vector]) -> Vector:
    out = _ZERO_VECTOR
    for v in vs:
        out = tangle_star(out, v)
    return out


def family_vector(k: int, m: int) -> Vector:
    return _star_all([TWO_FIVE_VECTOR] * k + [HALF_VECTOR] * m)


# --- M[k(2/5), m(1/2)] ----------------------------------------------------

def bracket_two_five_family(k: int, m: int) -> LaurentPoly:
    """Closed form, correct modulo I_A and up to a unit +-A^i:
    -A^-2 (1 + A^-8) (A^-8 - A^-4 + 2 - A^4)^(k-1) (1 - A^-4)^m."""
    if k < 1 or m < 0:
        raise ValueError("need k >= 1 and m >= 0")
    base = LaurentPoly({-8: 1, -4: -1, 0: 2, 4: -1})
    return _a(-2, -1) * LaurentPoly({0: 1, -8: 1}) * base ** (k - 1) * HALF_VECTOR[0] ** m


def bracket_two_five_exact(k: int, m: int) -> LaurentPoly:
    """The bracket of the standard diagram, from the tangle vectors."""
    if k < 1 or m < 0:
        raise ValueError("need k >= 1 and m >= 0")
    return vector_numerator(family_vector(k, m))


def two_five_components(k: int, m: int) -> int:
    # [2/5] joins NW-NE like [0], [1/2] joins NW-SW like [inf]
    return m if m else 2


def jones_class_two_five(k: int, m: int, form: str = "i") -> JonesClass5:
    """Class of V~ for M[k(2/5), m(1/2)] from the closed forms

        (i)  (1 + t^2) (1 - t^2)^(k-1) (1 - t)^m
        (ii) (1 + t)^(k-1) (1 - t)^(k+m-2),   k + m >= 2.
    """
    t = lambda e, c=1: LaurentPoly.mono(e, c, "t")  # noqa: E731
    one = t(0)
    if k < 1 or m < 0:
        raise ValueError("need k >= 1 and m >= 0")
    if form == "i":
        poly = (one + t(2)) * (one - t(2)) ** (k - 1) * (one - t(1)) ** m
    elif form == "ii":
        if k + m < 2:
            raise ValueError("form (ii) needs k + m >= 2")
        poly = (one + t(1)) ** (k - 1) * (one - t(1)) ** (k + m - 2)
    else:
        raise ValueError(f"unknown form {form!r}")
    # the closed forms drop the unit, so only the members are determined
    return class5_of_poly(poly)


# --- M[m(1/2), s] ---------------------------------------------------------

_D = LOOP


def pretzel_bracket_unsigned(m: int) -> LaurentPoly:
    """<M[m(1/2)]> = (1 - A^-4)^m d + ((-A^4 - A^-4)^m - (1 - A^-4)^m) / d."""
    if m < 1:
        raise ValueError("need m >= 1")
    h = HALF_VECTOR[0] ** m
    num = LaurentPoly({4: -1, -4: -1}) ** m - h
    q = num.divexact(_D)
    return h * _D + q


def pretzel_bracket(m: int, s: int) -> LaurentPoly:
    """<M[m(1/2), s]> = (-A^3)^s ((-A^4 - A^-4)^m / d + (1 - A^-4)^m (-A^-4)^s (d - 1/d))."""
    if m < 1:
        raise ValueError("need m >= 1")
    h = HALF_VECTOR[0] ** m
    num = LaurentPoly({4: -1, -4: -1}) ** m + h * _a(-4 * s, (-1) ** (s % 2)) * (_D * _D - 1)
    return _a(3 * s, (-1) ** (s % 2)) * num.divexact(_D)


def pretzel_self_writhe(m: int, s: int) -> int:
    # for m >= 2 the half-twist columns only hold crossings between different
    # components; for m = 1 they are self crossings whose sign follows s
    return s if m >= 2 else s - 2 * (-1) ** (s % 2)


def pretzel_jones_tilde(m: int, s: int) -> LaurentPoly:
    """V~ in u = t^(1/2)."""
    sw = pretzel_self_writhe(m, s)
    return bracket_to_u(pretzel_bracket(m, s) * _a(-3 * sw, (-1) ** (sw % 2)))


def pretzel_jones_tilde_closed(m: int, s: int) -> LaurentPoly:
    """The same value written in t, valid for m >= 2:
    (-1)^(m-1) (t + 1/t)^m / (u + 1/u) - (1 - t)^m (-t)^s (t + 1 + 1/t) / (u + 1/u)."""
    u = lambda e, c=1: LaurentPoly.mono(e, c, "u")  # noqa: E731
    one = u(0)
    t_plus = u(2) + u(-2)
    lead = t_plus ** m * ((-1) ** (m - 1))
    small = (one - u(2)) ** m * u(2 * s, (-1) ** (s % 2)) * (u(2) + one + u(-2))
    return (lead - small).divexact(u(1) + u(-1))


# --- canonical classes ----------------------------------------------------

PROBLEM_COLUMN_ORDER = "column-order"
PROBLEM_SUMS = "figure-eight-sums"


@dataclass(frozen=True)
class PretzelClass:
    m: int
    s: int

    def to_json(self) -> dict:
        return {"type": "pretzel", "m": self.m, "s": self.s}

    def __str__(self):
        return f"M[{self.m}(1/2), {self.s}]"


@dataclass(frozen=True)
class TwoFiveClass:
    k: int
    m: int

    def to_json(self) -> dict:
        return {"type": "two-five", "k": self.k, "m": self.m}

    def __str__(self):
        return f"M[{self.k}(2/5), {self.m}(1/2)]"


_SUM_ORDER = {RationalLinkClass.T2: 0, RationalLinkClass.H: 1, RationalLinkClass.FIGURE_EIGHT: 2}


@dataclass(frozen=True)
class SumClass:
    """Connected sum; the empty sum is T1."""

    parts: Tuple[RationalLinkClass, ...] = ()

    @staticmethod
    def of(parts: Iterable[RationalLinkClass]) -> "SumClass":
        kept = [p for p in parts if p is not RationalLinkClass.T1]
        return SumClass(tuple(sorted(kept, key=_SUM_ORDER.__getitem__)))

    def to_json(self) -> dict:
        return {"type": "sum", "parts": [p.value for p in self.parts]}

    def __str__(self):
        return " # ".join(p.value for p in self.parts) or "T1"


CanonicalClass = Union[PretzelClass, TwoFiveClass, SumClass]


@dataclass(frozen=True)
class Reduction:
    canonical: CanonicalClass
    flags: Tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {"class": self.canonical.to_json(), "name": str(self.canonical), "open_problems": list(self.flags)}


def _mod5(s: int) -> int:
    r = s % 5
    return r - 5 if r > 2 else r


# pieces of each class: (halves, two-fives, integer part)
_PIECES = {
    Frac(0, 1): (0, 0, 0),
    Frac(1, 1): (0, 0, 1),
    Frac(-1, 1): (0, 0, -1),
    Frac(2, 1): (0, 0, 2),
    Frac(-2, 1): (0, 0, -2),
    Frac(1, 2): (1, 0, 0),
    Frac(-1, 2): (1, 0, -1),
    Frac(3, 2): (1, 0, 1),
    Frac(-3, 2): (1, 0, -2),
    Frac(5, 2): (1, 0, 2),
    Frac(2, 5): (0, 1, 0),
}

# M[m(1/2), s] for m < 3, indexed by s mod 5
_SMALL_PRETZEL = {
    2: {0: RationalLinkClass.T1, 1: RationalLinkClass.H, 2: RationalLinkClass.H,
        -1: RationalLinkClass.T2, -2: RationalLinkClass.T1},
}


def _small_pretzel(m: int, s: int) -> SumClass:
    if m == 0:
        return SumClass.of([classify_rational_link(Frac(s, 1))])
    if m == 1:
        return SumClass.of([classify_rational_link(Frac(2 * s + 1, 2))])
    return SumClass.of([_SMALL_PRETZEL[2][s]])


def _with_flags(c: CanonicalClass) -> Reduction:
    flags = []
    if isinstance(c, TwoFiveClass) and c.k >= 2 and c.m >= 2:
        flags.append(PROBLEM_COLUMN_ORDER)
    if isinstance(c, SumClass) and len(c.parts) >= 2 and RationalLinkClass.FIGURE_EIGHT in c.parts:
        flags.append(PROBLEM_SUMS)
    return Reduction(c, tuple(flags))


def _columns(spec: Union[Montesinos, Pretzel, Sequence[Frac]]) -> List[Frac]:
    if isinstance(spec, Montesinos):
        return list(spec.columns)
    if isinstance(spec, Pretzel):
        return [Frac(1, n) for n in spec.twists]
    return list(spec)


def reduce_montesinos(spec: Union[Montesinos, Pretzel, Sequence[Frac]]) -> Reduction:
    """Canonical 5-move class of a Montesinos link with open-problem flags."""
    cols = [classify12(f) for f in _columns(spec)]
    if any(c.is_infinite for c in cols):
        rest = [c for c in cols if not c.is_infinite]
        extra = sum(1 for c in cols if c.is_infinite) - 1
        parts = [classify_rational_link(Frac(c.q, c.p)) for c in rest]
        return _with_flags(SumClass.of(parts + [RationalLinkClass.T2] * extra))
    halves = fives = s = 0
    for c in cols:
        h, f, n = _PIECES[c]
        halves += h
        fives += f
        s += n
    if fives:
        small = {(1, 0): RationalLinkClass.H, (1, 1): RationalLinkClass.T1, (2, 0): RationalLinkClass.T2}
        if (fives, halves) in small:
            return _with_flags(SumClass.of([small[fives, halves]]))
        return _with_flags(TwoFiveClass(fives, halves))
    s = _mod5(s)
    if halves < 3:
        return _with_flags(_small_pretzel(halves, s))
    return _with_flags(PretzelClass(halves, s))


_SUM_SPECS = {
    RationalLinkClass.T2: Frac(0, 1),
    RationalLinkClass.H: Frac(2, 1),
    RationalLinkClass.FIGURE_EIGHT: Frac(5, 2),
}


def representative_spec(c: CanonicalClass) -> LinkSpec:
    """A link specification in the canonical class."""
    if isinstance(c, PretzelClass):
        return Montesinos(tuple([Frac(1, 2)] * c.m + ([Frac(c.s, 1)] if c.s else [])))
    if isinstance(c, TwoFiveClass):
        return Montesinos(tuple([Frac(2, 5)] * c.k + [Frac(1, 2)] * c.m))
    if not c.parts:
        return Rational(Frac(1, 1))
    parts = [Rational(_SUM_SPECS[p]) for p in c.parts]
    return parts[0] if len(parts) == 1 else ConnSum(tuple(parts))
