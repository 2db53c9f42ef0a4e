"""Fox n-colorings.

Arcs are the over-passes of the diagram. Each crossing gives the relation
2*over - under_in - under_out = 0 over Z_n. The number of solutions follows
from the Smith normal form of the integer relation matrix:

    col_n = prod_i gcd(d_i, n) * n^(arcs - rank).

A free circle is an arc with no relations.
"""

from __future__ import annotations

from math import gcd
from typing import List, Tuple

from .diagram.core import LinkDiagram

__all__ = ["coloring_matrix", "smith_diagonal", "col_n", "col_n_bruteforce"]


def coloring_matrix(d: LinkDiagram) -> Tuple[List[List[int]], int]:
    """Relation matrix (crossings x arcs) and the number of arcs, including
    one arc per free circle."""
    parent = {}

    def find(v):
        parent.setdefault(v, v)
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for x in d.crossings:
        for e in x:
            find(e)
        rb, rd = find(x[1]), find(x[3])
        if rb != rd:
            parent[rb] = rd
    roots = sorted({find(e) for e in parent})
    col = {r: i for i, r in enumerate(roots)}
    arcs = len(roots) + d.free_circles
    rows = []
    for x in d.crossings:
        row = [0] * arcs
        row[col[find(x[1])]] += 2
        row[col[find(x[0])]] -= 1
        row[col[find(x[2])]] -= 1
        rows.append(row)
    return rows, arcs


def smith_diagonal(m: List[List[int]]) -> List[int]:
    """Nonzero invariant factors, by elimination with the pivot of smallest
    absolute value."""
    a = [list(r) for r in m]
    rows = len(a)
    cols = len(a[0]) if a else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        entries = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        a[t], a[pi] = a[pi], a[t]
        for r in a:
            r[t], r[pj] = r[pj], r[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    for r in a:
                        r[j] -= q * r[t]
                    if a[t][j]:
                        done = False
            if done:
                # divisibility of the remaining block
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p), None)
                if bad is None:
                    break
                i, _ = bad
                a[t] = [x + y for x, y in zip(a[t], a[i])]
                continue
            entries = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j] and (i == t or j == t)]
            _, pi, pj = min(entries)
            a[t], a[pi] = a[pi], a[t]
            for r in a:
                r[t], r[pj] = r[pj], r[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def col_n(d: LinkDiagram, n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    rows, arcs = coloring_matrix(d)
    diag = smith_diagonal(rows) if rows else []
    out = n ** (arcs - len(diag))
    for x in diag:
        out *= gcd(x, n)
    return out


def col_n_bruteforce(d: LinkDiagram, n: int) -> int:
    """Exhaustive count; only for small diagrams."""
    from itertools import product

    rows, arcs = coloring_matrix(d)
    return sum(1 for v in product(range(n), repeat=arcs) if all(sum(c * x for c, x in zip(r, v)) % n == 0 for r in rows))
