"""Integer Laurent polynomials in one and two variables.

Both types are immutable and hashable. Coefficients are Python ints and zero
terms are never stored, so equality is structural.
"""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, Tuple

__all__ = ["LaurentPoly", "LaurentPoly2"]


class LaurentPoly:
    """Element of Z[v, v^-1]; ``var`` is only a display name."""

    __slots__ = ("_c", "var", "_hash")

    def __init__(self, coeffs: Dict[int, int] | Iterable[Tuple[int, int]] | None = None, var: str = "A"):
        c: Dict[int, int] = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for e, k in items:
                if k:
                    e = int(e)
                    s = c.get(e, 0) + int(k)
                    if s:
                        c[e] = s
                    else:
                        c.pop(e, None)
        self._c = c
        self.var = var
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, k: int, var: str = "A") -> "LaurentPoly":
        return cls({0: k}, var)

    @classmethod
    def mono(cls, e: int, k: int = 1, var: str = "A") -> "LaurentPoly":
        return cls({e: k}, var)

    @classmethod
    def _raw(cls, c: Dict[int, int], var: str) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._c = c
        p.var = var
        p._hash = None
        return p

    # inspection
    def terms(self) -> Dict[int, int]:
        return dict(self._c)

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(sorted(self._c.items()))

    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def min_exp(self) -> int:
        return min(self._c) if self._c else 0

    def max_exp(self) -> int:
        return max(self._c) if self._c else 0

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def to_json(self) -> list:
        return [[e, k] for e, k in sorted(self._c.items())]

    @classmethod
    def from_json(cls, data, var: str = "A") -> "LaurentPoly":
        return cls({int(e): int(k) for e, k in data}, var)

    # arithmetic
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, k in other._c.items():
            s = c.get(e, 0) + k
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return LaurentPoly._raw(c, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -k for e, k in self._c.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c: Dict[int, int] = {}
        for e1, k1 in self._c.items():
            for e2, k2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + k1 * k2
        return LaurentPoly._raw({e: k for e, k in c.items() if k}, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial")
            (e, k), = self._c.items()
            if k not in (1, -1):
                raise ValueError("negative power of a non-unit monomial")
            return LaurentPoly({-e * (-n): k ** (-n)}, self.var)
        result = LaurentPoly.const(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, m: int) -> "LaurentPoly":
        """Multiply by v^m."""
        return LaurentPoly._raw({e + m: k for e, k in self._c.items()}, self.var)

    def scale_exponents(self, f: int) -> "LaurentPoly":
        return LaurentPoly._raw({e * f: k for e, k in self._c.items()}, self.var)

    def inverted(self) -> "LaurentPoly":
        """Substitute v -> v^-1."""
        return self.scale_exponents(-1)

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ArithmeticError if a remainder is left."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly({}, self.var)
        lo_p, lo_q = self.min_exp(), other.min_exp()
        rem = {e - lo_p: k for e, k in self._c.items()}
        den = {e - lo_q: k for e, k in other._c.items()}
        dtop = max(den)
        lead = den[dtop]
        q: Dict[int, int] = {}
        while rem:
            m = max(rem)
            if m < dtop:
                raise ArithmeticError("inexact division")
            k = rem[m]
            if k % lead:
                raise ArithmeticError("inexact division")
            qk = k // lead
            sh = m - dtop
            q[sh] = qk
            for e, c in den.items():
                s = rem.get(e + sh, 0) - qk * c
                if s:
                    rem[e + sh] = s
                else:
                    rem.pop(e + sh, None)
        return LaurentPoly({e + lo_p - lo_q: k for e, k in q.items()}, self.var)

    def substitute(self, value, one=None):
        """Evaluate at ``value`` (any ring element supporting +, *, ** and
        inverse through ``value ** -1``)."""
        if not self._c:
            return 0 * (one if one is not None else value)
        lo, hi = self.min_exp(), self.max_exp()
        pos = value
        neg = value ** -1 if lo < 0 else None
        total = None
        for e, k in sorted(self._c.items()):
            term = (pos ** e) if e >= 0 else (neg ** (-e))
            term = term * k
            total = term if total is None else total + term
        return total

    def eval_complex(self, z: complex) -> complex:
        return sum(k * z ** e for e, k in self._c.items())

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return f"LaurentPoly({self}, var={self.var!r})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, k in sorted(self._c.items()):
            if e == 0:
                mon = str(abs(k))
            else:
                base = self.var if e == 1 else f"{self.var}^{e}"
                mon = base if abs(k) == 1 else f"{abs(k)}*{base}"
            sign = "-" if k < 0 else "+"
            parts.append((sign, mon))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, mon in parts[1:]:
            out += f" {sign} {mon}"
        return out


class LaurentPoly2:
    """Element of Z[a^{+-1}, x^{+-1}], stored as {(ea, ex): coeff}."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Dict[Tuple[int, int], int] | None = None):
        c: Dict[Tuple[int, int], int] = {}
        if coeffs:
            for key, k in coeffs.items():
                if k:
                    s = c.get(key, 0) + k
                    if s:
                        c[key] = s
                    else:
                        c.pop(key, None)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c) -> "LaurentPoly2":
        p = cls.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def const(cls, k: int) -> "LaurentPoly2":
        return cls({(0, 0): k})

    @classmethod
    def mono(cls, ea: int, ex: int, k: int = 1) -> "LaurentPoly2":
        return cls({(ea, ex): k})

    def terms(self) -> Dict[Tuple[int, int], int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def to_json(self) -> list:
        return [[ea, ex, k] for (ea, ex), k in sorted(self._c.items())]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly2":
        return cls({(int(a), int(x)): int(k) for a, x, k in data})

    def _coerce(self, other):
        if isinstance(other, LaurentPoly2):
            return other
        if isinstance(other, int):
            return LaurentPoly2.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for key, k in other._c.items():
            s = c.get(key, 0) + k
            if s:
                c[key] = s
            else:
                c.pop(key, None)
        return LaurentPoly2._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly2._raw({key: -k for key, k in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c: Dict[Tuple[int, int], int] = {}
        for (a1, x1), k1 in self._c.items():
            for (a2, x2), k2 in other._c.items():
                key = (a1 + a2, x1 + x2)
                c[key] = c.get(key, 0) + k1 * k2
        return LaurentPoly2._raw({key: k for key, k in c.items() if k})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("negative power of a non-monomial")
            ((ea, ex), k), = self._c.items()
            if k not in (1, -1):
                raise ValueError("negative power of a non-unit monomial")
            return LaurentPoly2({(ea * n, ex * n): k ** (-n)})
        result = LaurentPoly2.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute_a(self, f: int) -> "LaurentPoly2":
        """a -> a^f (f = -1 gives the mirror substitution)."""
        return LaurentPoly2._raw({(ea * f, ex): k for (ea, ex), k in self._c.items()})

    def negate_vars(self) -> "LaurentPoly2":
        """F(a, x) -> F(-a, -x)."""
        return LaurentPoly2._raw({(ea, ex): k * (-1) ** ((ea + ex) & 1) for (ea, ex), k in self._c.items()})

    def evaluate(self, a, x, one):
        """Evaluate in any ring; ``a`` and ``x`` must be invertible there
        whenever negative exponents occur."""
        if not self._c:
            return one * 0
        need_ai = any(ea < 0 for ea, _ in self._c)
        need_xi = any(ex < 0 for _, ex in self._c)
        ai = a ** -1 if need_ai else None
        xi = x ** -1 if need_xi else None
        apow: Dict[int, object] = {}
        xpow: Dict[int, object] = {}

        def pw(cache, base, inv, e):
            if e not in cache:
                cache[e] = one if e == 0 else (base ** e if e > 0 else inv ** (-e))
            return cache[e]

        total = one * 0
        for (ea, ex), k in self._c.items():
            total = total + pw(apow, a, ai, ea) * pw(xpow, x, xi, ex) * k
        return total

    def eval_at_a(self, a_value: int = 1) -> LaurentPoly:
        """Specialise a to +-1, giving a polynomial in x."""
        if a_value not in (1, -1):
            raise ValueError("only a = +-1 is supported")
        c: Dict[int, int] = {}
        for (ea, ex), k in self._c.items():
            c[ex] = c.get(ex, 0) + k * (a_value ** (ea % 2))
        return LaurentPoly(c, "x")

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return f"LaurentPoly2({self})"

    def __str__(self):
        if not self._c:
            return "0"
        out = []
        for (ea, ex), k in sorted(self._c.items(), key=lambda t: (t[0][1], t[0][0])):
            mon = []
            if ea:
                mon.append("a" if ea == 1 else f"a^{ea}")
            if ex:
                mon.append("x" if ex == 1 else f"x^{ex}")
            body = "*".join(mon)
            if not body:
                body = str(abs(k))
            elif abs(k) != 1:
                body = f"{abs(k)}*{body}"
            out.append(("-" if k < 0 else "+", body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s
