"""Kauffman two-variable polynomial.

Lambda is the regular isotopy invariant with

    Lambda(O) = 1,   Lambda(positive kink) = a Lambda,
    Lambda(L+) + Lambda(L-) = x (Lambda(L0) + Lambda(Linf)),

so Lambda(L u O) = delta Lambda(L) with delta = (a + a^-1)/x - 1, and the
ambient invariant is F = a^(-w) Lambda.

Evaluation uses descending diagrams. Fix base points, and list the crossings
p_1, ..., p_k that are first met from below. Switching all of them gives an
unlink D_k, and

    Lambda(D) = sum_j (-1)^(j-1) x (Lambda(A_j) + Lambda(B_j)) + (-1)^k a^(w(D_k)) delta^(c-1),

where A_j and B_j are the two smoothings at p_j of D with p_1..p_(j-1) switched.
Each smoothing has fewer crossings. Intermediate diagrams are reduced by
Reidemeister I and II moves and split into connected pieces, then cached by a
canonical code.

The same recursion runs over Z[a^{+-1}, x^{+-1}] or at a point of Z[zeta_40].
The special value F(1, x0) with x0 = 2cos(2pi/5) lies in Z[(1+sqrt5)/2].
"""

from __future__ import annotations

from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra.cyclotomic import Cyclo40
from .algebra.chebyshev import v1, v2
from .algebra.laurent import LaurentPoly2
from .diagram.core import LinkDiagram, occurrences, rebuild, trace_from
from .errors import CrossingLimitError, InvalidDiagramError

__all__ = [
    "DEFAULT_LIMIT",
    "kauffman_lambda",
    "kauffman_f",
    "f_at_special",
    "f_at_point",
    "lambda_at_point",
    "f_set",
    "f_set_has_real",
    "X0",
    "A0",
    "SQRT5",
    "admissible_point",
    "describe_special",
    "twist_expansion",
]

DEFAULT_LIMIT = 12

X0 = Cyclo40.zeta(8) + Cyclo40.zeta(-8)  # 2cos(2pi/5)
A0 = Cyclo40.zeta(24)  # exp(4 pi i/5)
SQRT5 = 2 * X0 + 1

Crossing = Tuple[int, int, int, int]


class _Ring:
    def __init__(self, one, a, x):
        self.one = one
        self.zero = one * 0
        self.a = a
        self.ainv = a ** -1
        self.x = x
        self.xinv = x ** -1
        self.delta = (a + self.ainv) * self.xinv - one
        self._apow: Dict[int, object] = {}
        self._dpow: Dict[int, object] = {}

    def apow(self, k: int):
        if k not in self._apow:
            self._apow[k] = self.one if k == 0 else (self.a ** k if k > 0 else self.ainv ** (-k))
        return self._apow[k]

    def dpow(self, k: int):
        if k not in self._dpow:
            self._dpow[k] = self.delta ** k
        return self._dpow[k]


_POLY_RING: Optional[_Ring] = None
_POINT_RINGS: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], _Ring] = {}
_MEMOS: Dict[object, Dict[tuple, object]] = {}


def _poly_ring() -> _Ring:
    global _POLY_RING
    if _POLY_RING is None:
        _POLY_RING = _Ring(LaurentPoly2.const(1), LaurentPoly2.mono(1, 0), LaurentPoly2.mono(0, 1))
    return _POLY_RING


def _point_ring(a: Cyclo40, x: Cyclo40) -> _Ring:
    key = (a.c, x.c)
    if key not in _POINT_RINGS:
        _POINT_RINGS[key] = _Ring(Cyclo40.one(), a, x)
    return _POINT_RINGS[key]


# --- combinatorics on raw crossing lists ------------------------------------

def _kink_sign(x: Crossing, i: int) -> int:
    # loop joins slots i and i+1; the strand enters at i+2 and at i+1
    e1, e2 = (i + 2) % 4, (i + 1) % 4
    su, so = (e1, e2) if e1 % 2 == 0 else (e2, e1)
    return 1 if so == (su + 3) % 4 else -1


def _simplify(xs: List[Crossing], ring: _Ring):
    """Remove kinks and reducible bigons. Returns (crossings, free loops, a-power)."""
    power = 0
    loops = 0
    changed = True
    while changed and xs:
        changed = False
        for ci, x in enumerate(xs):
            for i in range(4):
                if x[i] == x[(i + 1) % 4]:
                    power += _kink_sign(x, i)
                    rest = xs[:ci] + xs[ci + 1:]
                    labels = {e for y in xs for e in y}
                    xs, nl = rebuild(rest, [(x[(i + 2) % 4], x[(i + 3) % 4]), (x[i], x[(i + 2) % 4])], labels)
                    loops += nl
                    changed = True
                    break
            if changed:
                break
        if changed:
            continue
        occ = occurrences(xs)
        for e, ((c1, i), (c2, j)) in occ.items():
            if c1 == c2 or (i % 2) != (j % 2):
                continue
            f = xs[c1][(i + 1) % 4]
            if xs[c2][(j - 1) % 4] != f:
                f = xs[c1][(i - 1) % 4]
                if xs[c2][(j + 1) % 4] != f:
                    continue
                i2, j2 = (i - 1) % 4, (j + 1) % 4
            else:
                i2, j2 = (i + 1) % 4, (j - 1) % 4
            x1, x2 = xs[c1], xs[c2]
            unions = [
                (x1[(i + 2) % 4], e), (e, x2[(j + 2) % 4]),
                (x1[(i2 + 2) % 4], f), (f, x2[(j2 + 2) % 4]),
            ]
            labels = {l for y in xs for l in y}
            rest = [y for k, y in enumerate(xs) if k not in (c1, c2)]
            xs, nl = rebuild(rest, unions, labels)
            loops += nl
            changed = True
            break
    return xs, loops, power


def _split(xs: List[Crossing]) -> List[List[Crossing]]:
    occ = occurrences(xs)
    n = len(xs)
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for (c1, _), (c2, _) in occ.values():
        r1, r2 = find(c1), find(c2)
        if r1 != r2:
            parent[r1] = r2
    groups: Dict[int, List[Crossing]] = {}
    for ci in range(n):
        groups.setdefault(find(ci), []).append(xs[ci])
    return list(groups.values())


def _canonical(xs: Sequence[Crossing]) -> tuple:
    occ = occurrences(xs)
    best = None
    n = len(xs)
    for c0 in range(n):
        for b0 in (0, 2):
            num = {c0: 0}
            base = [b0]
            order = [c0]
            elab: Dict[int, int] = {}
            code = []
            k = 0
            while k < len(order):
                c = order[k]
                b = base[k]
                x = xs[c]
                row = [b % 2]
                for t in range(4):
                    s = (b + t) % 4
                    e = x[s]
                    if e not in elab:
                        elab[e] = len(elab)
                    row.append(elab[e])
                    (ca, sa), (cb, sb) = occ[e]
                    oc, os_ = (cb, sb) if (ca, sa) == (c, s) else (ca, sa)
                    if oc not in num:
                        num[oc] = len(order)
                        order.append(oc)
                        base.append(os_)
                code.append(tuple(row))
                k += 1
                if best is not None and tuple(code) > best[: len(code)]:
                    break
            else:
                code_t = tuple(code)
                if best is None or code_t < best:
                    best = code_t
    return best


def _traversal(xs: Sequence[Crossing], occ) -> List[List[Tuple[int, int]]]:
    comps = []
    seen = set()
    for ci in range(len(xs)):
        for s in range(4):
            if (ci, s) in seen:
                continue
            path = trace_from(xs, occ, (ci, s))
            for c, t in path:
                seen.add((c, t))
                seen.add((c, (t + 2) % 4))
            comps.append(path)
    return comps


def _reverse(path: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
    return [(c, (s + 2) % 4) for c, s in reversed(path)]


def _plan(xs: Sequence[Crossing]):
    """Choose base points, directions and component order with few bad
    crossings. Returns (bad crossings in visiting order, signs, components)."""
    occ = occurrences(xs)
    comps = _traversal(xs, occ)
    ncomp = len(comps)
    comp_of = {}
    for k, path in enumerate(comps):
        for c, s in path:
            comp_of[(c, s % 2)] = k  # parity 0: under strand, 1: over strand
    chosen = []
    for k, path in enumerate(comps):
        best = None
        for direction in (path, _reverse(path)):
            L = len(direction)
            pos_u: Dict[int, int] = {}
            pos_o: Dict[int, int] = {}
            for idx, (c, s) in enumerate(direction):
                if s % 2 == 0:
                    pos_u[c] = idx
                else:
                    pos_o[c] = idx
            selfs = [(c, pos_u[c], pos_o[c]) for c in pos_u if c in pos_o]
            for j in range(L):
                bad = sum(1 for c, pu, po in selfs if (pu - j) % L < (po - j) % L)
                if best is None or bad < best[0]:
                    best = (bad, direction[j:] + direction[:j])
        chosen.append(best[1])
    B = [[0] * ncomp for _ in range(ncomp)]
    for ci in range(len(xs)):
        u, o = comp_of[(ci, 0)], comp_of[(ci, 1)]
        if u != o:
            B[u][o] += 1
    if ncomp <= 6:
        order = min(permutations(range(ncomp)), key=lambda p: sum(B[p[i]][p[j]] for i in range(ncomp) for j in range(i + 1, ncomp)))
    else:
        order = sorted(range(ncomp), key=lambda k: sum(B[k]) - sum(B[r][k] for r in range(ncomp)))
    seen = set()
    bad = []
    entry_u: Dict[int, int] = {}
    entry_o: Dict[int, int] = {}
    for k in order:
        for c, s in chosen[k]:
            if s % 2 == 0:
                entry_u[c] = s
            else:
                entry_o[c] = s
            if c not in seen:
                seen.add(c)
                if s % 2 == 0:
                    bad.append(c)
    signs = {c: (1 if entry_o[c] == (entry_u[c] + 3) % 4 else -1) for c in entry_u}
    return bad, signs, ncomp


def _smooth(xs: List[Crossing], ci: int, kind: int):
    a, b, c, d = xs[ci]
    pairs = [(a, b), (c, d)] if kind == 0 else [(a, d), (b, c)]
    labels = {e for y in xs for e in y}
    return rebuild(xs[:ci] + xs[ci + 1:], pairs, labels)


def _switch(x: Crossing) -> Crossing:
    return (x[1], x[2], x[3], x[0])


def _lam(xs: List[Crossing], free: int, ring: _Ring, memo: Dict[tuple, object]):
    xs, loops, power = _simplify(list(xs), ring)
    free += loops
    pieces = _split(xs) if xs else []
    k = len(pieces) + free
    if k == 0:
        raise InvalidDiagramError("empty diagram")
    out = ring.apow(power) * ring.dpow(k - 1)
    for piece in pieces:
        out = out * _lam_connected(piece, ring, memo)
    return out


def _lam_connected(xs: List[Crossing], ring: _Ring, memo):
    key = _canonical(xs)
    hit = memo.get(key)
    if hit is not None:
        return hit
    bad, signs, ncomp = _plan(xs)
    w = sum(signs.values())
    cur = list(xs)
    total = ring.zero
    sgn = 1
    for p in bad:
        for kind in (0, 1):
            ys, loops = _smooth(cur, p, kind)
            val = _lam(ys, loops, ring, memo)
            total = total + (val * ring.x if sgn > 0 else -(val * ring.x))
        cur[p] = _switch(cur[p])
        w -= 2 * signs[p]
        sgn = -sgn
    tail = ring.apow(w) * ring.dpow(ncomp - 1)
    total = total + (tail if sgn > 0 else -tail)
    memo[key] = total
    return total


def _memo_for(ring: _Ring) -> Dict[tuple, object]:
    return _MEMOS.setdefault(id(ring), {})


def _check(d: LinkDiagram, limit: Optional[int]) -> None:
    if limit is not None and d.n > limit:
        raise CrossingLimitError(d.n, limit)
    if d.n == 0 and d.free_circles == 0:
        raise InvalidDiagramError("empty diagram")


def kauffman_lambda(d: LinkDiagram, limit: Optional[int] = DEFAULT_LIMIT) -> LaurentPoly2:
    _check(d, limit)
    ring = _poly_ring()
    return _lam(list(d.crossings), d.free_circles, ring, _memo_for(ring))


def kauffman_f(d: LinkDiagram, limit: Optional[int] = DEFAULT_LIMIT) -> LaurentPoly2:
    return LaurentPoly2.mono(-d.writhe, 0) * kauffman_lambda(d, limit)


def lambda_at_point(d: LinkDiagram, a: Cyclo40, x: Cyclo40, limit: Optional[int] = DEFAULT_LIMIT) -> Cyclo40:
    _check(d, limit)
    ring = _point_ring(a, x)
    return _lam(list(d.crossings), d.free_circles, ring, _memo_for(ring))


def f_at_point(d: LinkDiagram, a: Cyclo40, x: Cyclo40, limit: Optional[int] = DEFAULT_LIMIT) -> Cyclo40:
    return (a ** (-d.writhe)) * lambda_at_point(d, a, x, limit)


def f_at_special(d: LinkDiagram, limit: Optional[int] = DEFAULT_LIMIT) -> Cyclo40:
    """F(1, 2cos(2pi/5)); writhe plays no role at a = 1."""
    return lambda_at_point(d, Cyclo40.one(), X0, limit)


def describe_special(v: Cyclo40) -> str:
    """Write v as +-5^k or +-5^k sqrt5 when possible, else as a decimal."""
    if v.is_zero():
        return "0"
    for k in range(0, 12):
        p = SQRT5 ** k
        for sign in (1, -1):
            if v == p * sign:
                body = ("5" if k == 2 else f"5^{k // 2}") if k % 2 == 0 else ("sqrt5" if k == 1 else f"5^{k // 2}*sqrt5")
                if k == 0:
                    body = "1"
                return ("-" if sign < 0 else "") + body
    return f"{v.to_complex().real:.6f}"


def admissible_point(a0: Cyclo40, x0: Cyclo40) -> bool:
    """a0^10 = 1 and x0 = p0 + 1/p0 with p0^5 = a0^5, a0 not p0^{+-1}, and
    p0 not in {+-1, +-i}."""
    if a0 ** 10 != Cyclo40.one():
        return False
    for k in range(40):
        p0 = Cyclo40.zeta(k)
        if p0 + p0.conj() != x0:
            continue
        if p0 ** 5 != a0 ** 5:
            continue
        if a0 in (p0, p0.conj()):
            continue
        if k % 10 == 0:
            continue
        return True
    return False


def f_set(d: LinkDiagram, a0: Cyclo40 = A0, x0: Cyclo40 = X0, limit: Optional[int] = DEFAULT_LIMIT) -> Tuple[Cyclo40, ...]:
    """Orbit {a0^i F(a0, x0)} as a sorted tuple; independent of orientations."""
    if not admissible_point(a0, x0):
        raise ValueError("point is not admissible")
    v = f_at_point(d, a0, x0, limit)
    members = {(a0 ** i) * v for i in range(10)}
    return tuple(sorted(members))


def f_set_has_real(members: Sequence[Cyclo40]) -> bool:
    return any(m.is_real() for m in members)


def _in_x(p) -> LaurentPoly2:
    return LaurentPoly2({(0, e): c for e, c in p.items()})


def twist_expansion(k: int) -> Tuple[LaurentPoly2, LaurentPoly2, LaurentPoly2]:
    """(c1, c0, c_inf) with Lambda(L_k) = c1 Lambda(L_1) + c0 Lambda(L_0) + c_inf Lambda(L_inf).

    L_j is the diagram with ``apply_twist_move(d, site, j)`` and L_inf the one
    with the infinity tangle at the same site. Valid for k >= 1.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    return _in_x(v1(k)), -_in_x(v1(k - 1)), LaurentPoly2.mono(0, 1) * v2(k)
