"""Coefficient polynomials of the Kauffman k-twist formula.

With x = p + p^-1,

    T_0 = 1, T_1 = x, T_k = x T_{k-1} - T_{k-2},   T_{k-1}(x) = (p^k - p^-k)/(p - p^-1),

    v1^(k)(x)   = T_{k-1}(x),
    v2^(k)(a,x) = sum_{i=1}^{k-1} T_{i-1}(x) a^(i-k).
"""

from __future__ import annotations

from functools import lru_cache

from .laurent import LaurentPoly, LaurentPoly2

__all__ = ["chebyshev_T", "v1", "v2", "v2_identity_holds"]


@lru_cache(maxsize=None)
def chebyshev_T(k: int) -> LaurentPoly:
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return LaurentPoly.const(1, "x")
    x = LaurentPoly.mono(1, var="x")
    if k == 1:
        return x
    return x * chebyshev_T(k - 1) - chebyshev_T(k - 2)


def v1(k: int) -> LaurentPoly:
    """v1^(k) with v1^(0) = 0."""
    if k == 0:
        return LaurentPoly({}, "x")
    if k < 0:
        return -v1(-k)
    return chebyshev_T(k - 1)


def _lift_x(p: LaurentPoly) -> LaurentPoly2:
    return LaurentPoly2({(0, e): c for e, c in p.items()})


def v2(k: int) -> LaurentPoly2:
    out = LaurentPoly2()
    for i in range(1, k):
        out = out + _lift_x(chebyshev_T(i - 1)) * LaurentPoly2.mono(i - k, 0)
    return out


def v2_identity_holds(k: int) -> bool:
    """(a + a^-1 - x) v2^(k) = (p - a^-1) v1^(k) + a^-k - p^k under x = p + 1/p.

    Checked in Z[a^{+-1}, p^{+-1}], with p stored in the second slot.
    """
    x_as_p = LaurentPoly2({(0, 1): 1, (0, -1): 1})

    def sub(poly2: LaurentPoly2) -> LaurentPoly2:
        total = LaurentPoly2()
        for (ea, ex), c in poly2.terms().items():
            total = total + LaurentPoly2.mono(ea, 0, c) * x_as_p ** ex
        return total

    a = LaurentPoly2.mono(1, 0)
    ainv = LaurentPoly2.mono(-1, 0)
    p = LaurentPoly2.mono(0, 1)
    lhs = (a + ainv - x_as_p) * sub(v2(k))
    rhs = (p - ainv) * sub(_lift_x(v1(k))) + LaurentPoly2.mono(-k, 0) - LaurentPoly2.mono(0, k)
    return lhs == rhs
