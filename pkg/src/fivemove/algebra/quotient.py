"""Residues of Laurent polynomials modulo a fixed principal ideal.

Three quotients are used:

* ``"I_A"``: Z[A^{+-1}] / (A^16 - A^12 + A^8 - A^4 + 1), A a primitive 40th root of unity;
* ``"I_t"``: Z[t^{+-1}] / (t^4 - t^3 + t^2 - t + 1), t a primitive 10th root of unity;
* ``"I_5"``: Z_5[a^{+-1}] / ((a^2 - 1)^3).

Every generator is monic with a unit constant term, so the variable is a unit
and the residue of a Laurent polynomial is defined directly. ``reduce_mod`` is
a ring homomorphism onto canonical remainders of degree below the generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .laurent import LaurentPoly

__all__ = ["QuotClass", "PolyQuotient", "reduce_mod", "reduce_mod_ideal_5", "IDEALS", "mod5_ring_element", "equal_up_to_unit"]


class PolyQuotient:
    """Element of R[v]/(g) with R = Z (modulus None) or Z_p."""

    __slots__ = ("c", "gen", "p")

    def __init__(self, coeffs: Sequence[int], gen: Tuple[int, ...], p: Optional[int] = None):
        # gen lists coefficients of g from degree 0 upward; g must be monic
        self.gen = gen
        self.p = p
        self.c = self._reduce(list(coeffs))

    def _reduce(self, c: List[int]) -> Tuple[int, ...]:
        g = self.gen
        n = len(g) - 1
        for k in range(len(c) - 1, n - 1, -1):
            v = c[k]
            if v:
                for i in range(n):
                    c[k - n + i] -= v * g[i]
                c[k] = 0
        c = (c + [0] * n)[:n]
        if self.p is not None:
            c = [v % self.p for v in c]
        return tuple(c)

    def _new(self, c) -> "PolyQuotient":
        return PolyQuotient(c, self.gen, self.p)

    @property
    def degree(self) -> int:
        return len(self.gen) - 1

    def var(self) -> "PolyQuotient":
        return self._new([0, 1])

    def __add__(self, other):
        if isinstance(other, int):
            other = self._new([other])
        return self._new([a + b for a, b in zip(self.c, other.c)])

    __radd__ = __add__

    def __neg__(self):
        return self._new([-a for a in self.c])

    def __sub__(self, other):
        if isinstance(other, int):
            other = self._new([other])
        return self._new([a - b for a, b in zip(self.c, other.c)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self._new([a * other for a in self.c])
        out = [0] * (2 * self.degree)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    out[i + j] += a * b
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self._new([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "PolyQuotient":
        n = self.degree
        unit = self._new([1])
        cols = [(self * self._new([0] * j + [1])).c for j in range(n)]
        if self.p is None:
            rows = [[Fraction(cols[j][i]) for j in range(n)] + [Fraction(unit.c[i])] for i in range(n)]

            def inv(x):
                return 1 / x
        else:
            p = self.p
            rows = [[cols[j][i] % p for j in range(n)] + [unit.c[i] % p] for i in range(n)]

            def inv(x):
                return pow(int(x), -1, p)
        for col in range(n):
            piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
            if piv is None:
                raise ArithmeticError("element is not a unit")
            rows[col], rows[piv] = rows[piv], rows[col]
            f = inv(rows[col][col])
            rows[col] = [v * f for v in rows[col]]
            if self.p is not None:
                rows[col] = [v % self.p for v in rows[col]]
            for r in range(n):
                if r != col and rows[r][col] != 0:
                    m = rows[r][col]
                    rows[r] = [v - m * w for v, w in zip(rows[r], rows[col])]
                    if self.p is not None:
                        rows[r] = [v % self.p for v in rows[r]]
        y = [rows[i][n] for i in range(n)]
        if self.p is None:
            if any(Fraction(v).denominator != 1 for v in y):
                raise ArithmeticError("element is not a unit")
            y = [int(v) for v in y]
        return self._new(y)

    def is_zero(self) -> bool:
        return not any(self.c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self._new([other])
        return isinstance(other, PolyQuotient) and self.c == other.c and self.gen == other.gen

    def __hash__(self):
        return hash((self.c, self.gen, self.p))

    def __repr__(self):
        return f"PolyQuotient({list(self.c)}, p={self.p})"


# generators, lowest degree first
IDEALS: Dict[str, Tuple[Tuple[int, ...], Optional[int], str]] = {
    "I_A": ((1, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1), None, "A"),
    "I_t": ((1, -1, 1, -1, 1), None, "t"),
    "I_5": ((-1, 0, 3, 0, -3, 0, 1), 5, "a"),
}


@dataclass(frozen=True)
class QuotClass:
    """Canonical residue class: ``rep`` has degree below the generator."""

    rep: LaurentPoly
    ideal: str

    def __str__(self):
        return f"[{self.rep}] mod {self.ideal}"


def _ring_element(p: LaurentPoly, ideal: str) -> PolyQuotient:
    gen, mod, _ = IDEALS[ideal]
    v = PolyQuotient([0, 1], gen, mod)
    one = PolyQuotient([1], gen, mod)
    total = PolyQuotient([0], gen, mod)
    if p.is_zero():
        return total
    vinv = v.inverse() if p.min_exp() < 0 else None
    for e, k in p.items():
        term = v ** e if e >= 0 else vinv ** (-e)
        total = total + term * k
    return total + one * 0


def reduce_mod(p: LaurentPoly, ideal: str = "I_t") -> QuotClass:
    """Residue of ``p`` modulo one of the named ideals."""
    if ideal not in IDEALS:
        raise ValueError(f"unknown ideal {ideal!r}")
    r = _ring_element(p, ideal)
    var = IDEALS[ideal][2]
    return QuotClass(LaurentPoly({i: v for i, v in enumerate(r.c)}, var), ideal)


def reduce_mod_ideal_5(p: LaurentPoly) -> QuotClass:
    """Residue in Z_5[a^{+-1}]/((a^2-1)^3), coefficients in 0..4."""
    return reduce_mod(p, "I_5")


def mod5_ring_element(p: LaurentPoly) -> PolyQuotient:
    return _ring_element(p, "I_5")


_UNIT_ORDER = {"I_A": 40, "I_t": 10}


def equal_up_to_unit(p: LaurentPoly, q: LaurentPoly, ideal: str = "I_A") -> bool:
    """Whether p = +-v^i q modulo the ideal, v the variable."""
    if ideal not in _UNIT_ORDER:
        raise ValueError(f"units are only enumerated for I_A and I_t, not {ideal!r}")
    target = reduce_mod(p, ideal).rep
    for i in range(_UNIT_ORDER[ideal]):
        r = reduce_mod(q.shift(i), ideal).rep
        if r == target or -r == target:
            return True
    return False
