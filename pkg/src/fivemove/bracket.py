"""Kauffman bracket, Jones polynomial and the mod-5 Jones data.

Conventions: <O> = 1, <D u O> = d<D> with d = -A^2 - A^-2, and the A-smoothing
of crossing (a,b,c,d) joins a-b and c-d. For a positive crossing this is the
oriented smoothing, so a positive kink contributes -A^3.

    V_L(t)   = (-A^3)^(-w) <D>,  t = A^-4,
    V~_L(u)  = (-A^3)^(-sw) <D>, A^k -> u^(-k/2), u = t^(1/2).

V~ is V up to a sign and a power of t, so |V(e^{pi i/5})| = |<D>(zeta)| with
zeta = exp(-pi i/20). The mod-5 data is the orbit of V~ in Z[t]/(Phi_10(t))
under multiplication by powers of t, with each member normalised in sign.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra.cyclotomic import Cyclo40
from .algebra.laurent import LaurentPoly
from .algebra.quotient import reduce_mod
from .diagram.core import LinkDiagram
from .errors import CrossingLimitError, InvalidDiagramError

__all__ = [
    "LOOP",
    "bracket",
    "bracket_state_sum",
    "jones",
    "jones_tilde",
    "bracket_to_u",
    "v_abs",
    "v_abs_squared",
    "JonesClass5",
    "jones_class5",
    "class5_of_poly",
    "DEFAULT_LIMIT",
]

DEFAULT_LIMIT = 20
LOOP = LaurentPoly({2: -1, -2: -1}, "A")
_ONE = LaurentPoly.const(1, "A")


def _check(d: LinkDiagram, limit: Optional[int]) -> None:
    if limit is not None and d.n > limit:
        raise CrossingLimitError(d.n, limit)
    if d.n == 0 and d.free_circles == 0:
        raise InvalidDiagramError("empty diagram")


def bracket_state_sum(d: LinkDiagram, limit: Optional[int] = 16) -> LaurentPoly:
    """Direct sum over all 2^n states; kept as a reference implementation."""
    _check(d, limit)
    xs = d.crossings
    n = len(xs)
    labels = sorted({e for x in xs for e in x})
    index = {e: i for i, e in enumerate(labels)}
    total: Dict[int, int] = {}
    loop_pows: Dict[int, LaurentPoly] = {}
    counts: Dict[Tuple[int, int], int] = {}
    for state in range(1 << n):
        parent = list(range(len(labels)))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        na = 0
        for ci, x in enumerate(xs):
            a, b, c, e = (index[v] for v in x)
            if state >> ci & 1:
                pairs = ((a, e), (b, c))
            else:
                na += 1
                pairs = ((a, b), (c, e))
            for u, v in pairs:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
        loops = len({find(v) for v in range(len(labels))}) + d.free_circles
        key = (2 * na - n, loops - 1)
        counts[key] = counts.get(key, 0) + 1
    out = LaurentPoly({}, "A")
    for (ea, lp), k in counts.items():
        if lp not in loop_pows:
            loop_pows[lp] = LOOP ** lp
        out = out + loop_pows[lp].shift(ea) * k
    return out


def _crossing_order(xs: Sequence[Tuple[int, int, int, int]]) -> List[int]:
    """Greedy order keeping the set of half-processed edges small."""
    n = len(xs)
    done = [False] * n
    open_edges: Dict[int, int] = {}
    order = []
    for _ in range(n):
        best, best_score = -1, None
        for ci in range(n):
            if done[ci]:
                continue
            shared = sum(1 for e in xs[ci] if e in open_edges)
            score = (2 * shared - 4, -ci) if order else (0, -ci)
            if best_score is None or score > best_score:
                best, best_score = ci, score
        done[best] = True
        order.append(best)
        for e in xs[best]:
            if e in open_edges:
                del open_edges[e]
            else:
                open_edges[e] = 1
    return order


def bracket(d: LinkDiagram, limit: Optional[int] = DEFAULT_LIMIT) -> LaurentPoly:
    """Bracket by contracting crossings one at a time while tracking the
    planar matching of the open edges."""
    _check(d, limit)
    xs = d.crossings
    if not xs:
        return LOOP ** (d.free_circles - 1)
    # state: matching (sorted tuple of pairs) -> {(A exponent, loops): coeff}
    states: Dict[Tuple[Tuple[int, int], ...], Dict[Tuple[int, int], int]] = {(): {(0, 0): 1}}
    for ci in _crossing_order(xs):
        a, b, c, e = xs[ci]
        new: Dict[Tuple[Tuple[int, int], ...], Dict[Tuple[int, int], int]] = {}
        for matching, poly in states.items():
            for ea, pairs in ((1, ((a, b), (c, e))), (-1, ((a, e), (b, c)))):
                m = {}
                for u, v in matching:
                    m[u] = v
                    m[v] = u
                loops = 0
                for u, v in pairs:
                    if u == v:
                        loops += 1
                        continue
                    if u in m and m[u] == v:
                        del m[u], m[v]
                        loops += 1
                        continue
                    pu = m.pop(u, None)
                    if pu is not None:
                        del m[pu]
                    else:
                        pu = u
                    pv = m.pop(v, None)
                    if pv is not None:
                        del m[pv]
                    else:
                        pv = v
                    m[pu] = pv
                    m[pv] = pu
                key = tuple(sorted((u, v) for u, v in m.items() if u < v))
                tgt = new.setdefault(key, {})
                for (ex, lp), k in poly.items():
                    kk = (ex + ea, lp + loops)
                    s = tgt.get(kk, 0) + k
                    if s:
                        tgt[kk] = s
                    else:
                        tgt.pop(kk, None)
        states = new
    final = states.get((), {})
    out = LaurentPoly({}, "A")
    cache: Dict[int, LaurentPoly] = {}
    for (ex, lp), k in final.items():
        lp += d.free_circles - 1
        if lp not in cache:
            cache[lp] = LOOP ** lp
        out = out + cache[lp].shift(ex) * k
    return out


def bracket_to_u(p: LaurentPoly) -> LaurentPoly:
    """A^k -> u^(-k/2); every exponent must be even."""
    c = {}
    for e, k in p.items():
        if e % 2:
            raise ValueError("odd power of A cannot be written in u")
        c[-e // 2] = k
    return LaurentPoly(c, "u")


def _kink_power(k: int) -> LaurentPoly:
    # (-A^3)^k
    return LaurentPoly.mono(3 * k, (-1) ** (k % 2), "A")


def jones_tilde(d: LinkDiagram, limit: Optional[int] = DEFAULT_LIMIT, br: Optional[LaurentPoly] = None) -> LaurentPoly:
    """Orientation-free normalisation (-A^3)^(-sw)<D>, as a polynomial in u."""
    if br is None:
        br = bracket(d, limit)
    return bracket_to_u(br * _kink_power(-d.stats().self_writhe))


def jones(d: LinkDiagram, limit: Optional[int] = DEFAULT_LIMIT, br: Optional[LaurentPoly] = None) -> LaurentPoly:
    """Jones polynomial of the oriented diagram, in u = t^(1/2)."""
    if br is None:
        br = bracket(d, limit)
    return bracket_to_u(br * _kink_power(-d.writhe))


def v_abs_squared(br: LaurentPoly) -> Cyclo40:
    """|<D>(zeta)|^2 as an exact element of the real subfield."""
    z = br.substitute(Cyclo40.zeta(1)) if not br.is_zero() else Cyclo40.zero()
    return z * z.conj()


def v_abs(d: LinkDiagram, limit: Optional[int] = DEFAULT_LIMIT, br: Optional[LaurentPoly] = None) -> float:
    if br is None:
        br = bracket(d, limit)
    val = v_abs_squared(br).to_complex().real
    return math.sqrt(max(val, 0.0))


def _sign_normalised(v: Tuple[int, ...]) -> Tuple[int, ...]:
    for x in v:
        if x:
            return v if x > 0 else tuple(-y for y in v)
    return v


@dataclass(frozen=True)
class JonesClass5:
    """Sorted multiset of the five sign-normalised t-multiples of V~ in
    Z[t]/(Phi_10). ``shifted`` records a multiplication by u = t^(1/2)."""

    members: Tuple[Tuple[int, int, int, int], ...]
    shifted: bool = False

    def contains(self, poly: LaurentPoly) -> bool:
        rep = reduce_mod(LaurentPoly(poly.terms(), "t"), "I_t").rep
        vec = tuple(rep.coeff(i) for i in range(4))
        return _sign_normalised(vec) in self.members

    def polys(self) -> List[LaurentPoly]:
        return [LaurentPoly({i: c for i, c in enumerate(m)}, "t") for m in self.members]

    def to_json(self) -> list:
        return [list(m) for m in self.members]

    def __str__(self):
        return "{" + ", ".join(str(p) for p in self.polys()) + "}"


def class5_of_poly(poly_t: LaurentPoly, shifted: bool = False) -> JonesClass5:
    """Class of a polynomial in t."""
    rep = reduce_mod(LaurentPoly(poly_t.terms(), "t"), "I_t").rep
    t = LaurentPoly.mono(1, var="t")
    members = []
    cur = rep
    for _ in range(5):
        vec = tuple(cur.coeff(i) for i in range(4))
        members.append(_sign_normalised(vec))
        cur = reduce_mod(cur * t, "I_t").rep
    return JonesClass5(tuple(sorted(members)), shifted)


def jones_class5(d: Optional[LinkDiagram] = None, limit: Optional[int] = DEFAULT_LIMIT, vt: Optional[LaurentPoly] = None) -> JonesClass5:
    if vt is None:
        vt = jones_tilde(d, limit)
    shifted = any(e % 2 for e, _ in vt.items())
    if shifted:
        vt = vt.shift(1)
    poly_t = LaurentPoly({e // 2: k for e, k in vt.items()}, "t")
    return class5_of_poly(poly_t, shifted)
