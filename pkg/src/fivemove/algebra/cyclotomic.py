"""Exact arithmetic in Z[zeta] for a primitive 40th root of unity zeta.

Elements are 16-vectors over the power basis 1, z, ..., z^15 modulo
Phi_40(z) = z^16 - z^12 + z^8 - z^4 + 1. The complex embedding sends z to
exp(-pi*i/20), so that A = zeta gives t = A^-4 = exp(pi*i/5).
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

__all__ = ["Cyclo40", "ZETA_ANGLE"]

N = 16
ORDER = 40
ZETA_ANGLE = -math.pi / 20


def _reduce(c: List[int]) -> Tuple[int, ...]:
    # z^k = z^(k-4) - z^(k-8) + z^(k-12) - z^(k-16)
    for k in range(len(c) - 1, N - 1, -1):
        v = c[k]
        if v:
            c[k - 4] += v
            c[k - 8] -= v
            c[k - 12] += v
            c[k - 16] -= v
    return tuple(c[:N]) + (0,) * max(0, N - len(c))


_POW: List[Tuple[int, ...]] = []
for _k in range(ORDER):
    _v = [0] * max(N, _k + 1)
    _v[_k] = 1
    _POW.append(_reduce(_v))


class Cyclo40:
    __slots__ = ("c",)

    def __init__(self, coeffs: Sequence[int] | int = 0):
        if isinstance(coeffs, int):
            self.c = (coeffs,) + (0,) * (N - 1)
        else:
            coeffs = list(coeffs)
            if len(coeffs) > N:
                self.c = _reduce(coeffs)
            else:
                self.c = tuple(coeffs) + (0,) * (N - len(coeffs))

    @classmethod
    def _raw(cls, c: Tuple[int, ...]) -> "Cyclo40":
        x = cls.__new__(cls)
        x.c = c
        return x

    @classmethod
    def zeta(cls, k: int = 1) -> "Cyclo40":
        return cls._raw(_POW[k % ORDER])

    @classmethod
    def one(cls) -> "Cyclo40":
        return cls(1)

    @classmethod
    def zero(cls) -> "Cyclo40":
        return cls(0)

    def _coerce(self, other):
        if isinstance(other, Cyclo40):
            return other
        if isinstance(other, int):
            return Cyclo40(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclo40._raw(tuple(a + b for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclo40._raw(tuple(-a for a in self.c))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclo40._raw(tuple(a - b for a, b in zip(self.c, other.c)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyclo40._raw(tuple(a * other for a in self.c))
        if not isinstance(other, Cyclo40):
            return NotImplemented
        a = self.c
        b = other.c
        out = [0] * (2 * N - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
        return Cyclo40._raw(_reduce(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclo40(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "Cyclo40":
        """Complex conjugation, z -> z^-1."""
        out = [0] * N
        for j, v in enumerate(self.c):
            if v:
                p = _POW[(-j) % ORDER]
                for i in range(N):
                    out[i] += v * p[i]
        return Cyclo40._raw(tuple(out))

    def is_real(self) -> bool:
        return self == self.conj()

    def is_zero(self) -> bool:
        return not any(self.c)

    def inverse(self) -> "Cyclo40":
        """Inverse in Z[zeta]; raises ArithmeticError for non-units."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # solve M y = e0 where column j of M is self * z^j
        cols = [(self * Cyclo40.zeta(j)).c for j in range(N)]
        m = [[Fraction(cols[j][i]) for j in range(N)] + [Fraction(int(i == 0))] for i in range(N)]
        for col in range(N):
            piv = next(r for r in range(col, N) if m[r][col] != 0)
            m[col], m[piv] = m[piv], m[col]
            pv = m[col][col]
            m[col] = [v / pv for v in m[col]]
            for r in range(N):
                if r != col and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [v - f * w for v, w in zip(m[r], m[col])]
        y = [m[i][N] for i in range(N)]
        if any(v.denominator != 1 for v in y):
            raise ArithmeticError("not a unit in Z[zeta]")
        return Cyclo40([int(v) for v in y])

    def to_complex(self) -> complex:
        z = cmath.exp(1j * ZETA_ANGLE)
        return sum(v * z ** i for i, v in enumerate(self.c) if v)

    def to_json(self) -> list:
        return list(self.c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Cyclo40(other)
        if not isinstance(other, Cyclo40):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __lt__(self, other: "Cyclo40"):
        return self.c < other.c

    def __repr__(self):
        return f"Cyclo40({list(self.c)})"

    @staticmethod
    def sum(items: Iterable["Cyclo40"]) -> "Cyclo40":
        total = [0] * N
        for x in items:
            for i, v in enumerate(x.c):
                total[i] += v
        return Cyclo40._raw(tuple(total))
