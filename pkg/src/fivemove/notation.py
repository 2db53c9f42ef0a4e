"""Textual link specifications.

Grammar::

    spec := braid:<n>:[i,...] | pd:[[a,b,c,d],...] | rational:p/q
          | pretzel:[n,...]  | montesinos:[p/q,...] | named:<key>
          | mirror(<spec>)   | sum(<spec>;...)      | disjoint(<spec>;...)

A braid letter ``i`` is sigma_i and ``-i`` its inverse. Whitespace is ignored.
``serialize_spec`` writes the canonical form, and ``parse_spec`` is its inverse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Tuple, Union

from .errors import SpecSyntaxError

__all__ = [
    "Frac",
    "Braid",
    "PD",
    "Rational",
    "Pretzel",
    "Montesinos",
    "Named",
    "Mirror",
    "ConnSum",
    "Disjoint",
    "LinkSpec",
    "parse_spec",
    "serialize_spec",
    "parse_frac",
]


@dataclass(frozen=True, order=True)
class Frac:
    """Extended rational p/q in lowest terms with q >= 0; 1/0 is infinity."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p == 0 and q == 0:
            raise ValueError("0/0 is not a fraction")
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        g = gcd(p, q)
        object.__setattr__(self, "p", p // g)
        object.__setattr__(self, "q", q // g)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    def __neg__(self) -> "Frac":
        return Frac(1, 0) if self.q == 0 else Frac(-self.p, self.q)

    def __str__(self):
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class Braid:
    strands: int
    word: Tuple[int, ...]


@dataclass(frozen=True)
class PD:
    crossings: Tuple[Tuple[int, int, int, int], ...]


@dataclass(frozen=True)
class Rational:
    frac: Frac


@dataclass(frozen=True)
class Pretzel:
    twists: Tuple[int, ...]


@dataclass(frozen=True)
class Montesinos:
    columns: Tuple[Frac, ...]


@dataclass(frozen=True)
class Named:
    key: str


@dataclass(frozen=True)
class Mirror:
    inner: "LinkSpec"


@dataclass(frozen=True)
class ConnSum:
    parts: Tuple["LinkSpec", ...]


@dataclass(frozen=True)
class Disjoint:
    parts: Tuple["LinkSpec", ...]


LinkSpec = Union[Braid, PD, Rational, Pretzel, Montesinos, Named, Mirror, ConnSum, Disjoint]

_INT = re.compile(r"[+-]?\d+")
_KEY = re.compile(r"[A-Za-z0-9_^#.\-]+")


def parse_frac(text: str) -> Frac:
    """Parse ``p/q`` or a bare integer."""
    t = text.replace(" ", "")
    m = re.fullmatch(r"([+-]?\d+)(?:/([+-]?\d+))?", t)
    if not m:
        raise SpecSyntaxError("malformed fraction", 0, text)
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) is not None else 1
    try:
        return Frac(p, q)
    except ValueError as exc:
        raise SpecSyntaxError(str(exc), 0, text) from None


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.s = re.sub(r"\s+", "", text)
        self.i = 0

    def error(self, msg: str):
        raise SpecSyntaxError(msg, self.i, self.text)

    def peek(self, lit: str) -> bool:
        return self.s.startswith(lit, self.i)

    def expect(self, lit: str):
        if not self.peek(lit):
            self.error(f"expected {lit!r}")
        self.i += len(lit)

    def integer(self) -> int:
        m = _INT.match(self.s, self.i)
        if not m:
            self.error("expected integer")
        self.i = m.end()
        return int(m.group())

    def frac(self) -> Frac:
        p = self.integer()
        q = 1
        if self.peek("/"):
            self.i += 1
            q = self.integer()
        if p == 0 and q == 0:
            self.error("0/0 is not a fraction")
        return Frac(p, q)

    def int_list(self):
        self.expect("[")
        out = []
        if not self.peek("]"):
            out.append(self.integer())
            while self.peek(","):
                self.i += 1
                out.append(self.integer())
        self.expect("]")
        return tuple(out)

    def spec_list(self):
        self.expect("(")
        parts = [self.spec()]
        while self.peek(";"):
            self.i += 1
            parts.append(self.spec())
        self.expect(")")
        return tuple(parts)

    def spec(self) -> LinkSpec:
        if self.peek("braid:"):
            self.i += 6
            n = self.integer()
            self.expect(":")
            word = self.int_list()
            if n < 1:
                self.error("braid needs at least one strand")
            for g in word:
                if g == 0 or abs(g) >= n:
                    self.error(f"generator {g} out of range for {n} strands")
            return Braid(n, word)
        if self.peek("pd:"):
            self.i += 3
            self.expect("[")
            xs = []
            if not self.peek("]"):
                xs.append(self.int_list())
                while self.peek(","):
                    self.i += 1
                    xs.append(self.int_list())
            self.expect("]")
            for x in xs:
                if len(x) != 4:
                    self.error("PD crossings need four labels")
            return PD(tuple(tuple(x) for x in xs))
        if self.peek("rational:"):
            self.i += 9
            return Rational(self.frac())
        if self.peek("pretzel:"):
            self.i += 8
            tw = self.int_list()
            if not tw:
                self.error("empty pretzel")
            return Pretzel(tw)
        if self.peek("montesinos:"):
            self.i += 11
            self.expect("[")
            cols = [self.frac()]
            while self.peek(","):
                self.i += 1
                cols.append(self.frac())
            self.expect("]")
            return Montesinos(tuple(cols))
        if self.peek("named:"):
            self.i += 6
            m = _KEY.match(self.s, self.i)
            if not m:
                self.error("expected catalog key")
            self.i = m.end()
            return Named(m.group())
        if self.peek("mirror("):
            self.i += 6
            self.expect("(")
            inner = self.spec()
            self.expect(")")
            return Mirror(inner)
        if self.peek("sum("):
            self.i += 3
            return ConnSum(self.spec_list())
        if self.peek("disjoint("):
            self.i += 8
            return Disjoint(self.spec_list())
        self.error("unknown specification")


def parse_spec(text: str) -> LinkSpec:
    p = _Parser(text)
    spec = p.spec()
    if p.i != len(p.s):
        p.error("trailing characters")
    return spec


def _ints(xs) -> str:
    return "[" + ",".join(str(x) for x in xs) + "]"


def serialize_spec(spec: LinkSpec) -> str:
    if isinstance(spec, Braid):
        return f"braid:{spec.strands}:{_ints(spec.word)}"
    if isinstance(spec, PD):
        return "pd:[" + ",".join(_ints(x) for x in spec.crossings) + "]"
    if isinstance(spec, Rational):
        return f"rational:{spec.frac}"
    if isinstance(spec, Pretzel):
        return f"pretzel:{_ints(spec.twists)}"
    if isinstance(spec, Montesinos):
        return "montesinos:[" + ",".join(str(c) for c in spec.columns) + "]"
    if isinstance(spec, Named):
        return f"named:{spec.key}"
    if isinstance(spec, Mirror):
        return f"mirror({serialize_spec(spec.inner)})"
    if isinstance(spec, ConnSum):
        return "sum(" + ";".join(serialize_spec(s) for s in spec.parts) + ")"
    if isinstance(spec, Disjoint):
        return "disjoint(" + ";".join(serialize_spec(s) for s in spec.parts) + ")"
    raise TypeError(f"not a link specification: {spec!r}")
