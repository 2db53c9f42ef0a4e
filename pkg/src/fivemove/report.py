"""Invariant reports and the comparisons built on them.

Every float in a report is formatted from an exact value that is stored
next to it. A report refuses to exist unless 5 F(1, x0)^2 = col_5.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Optional, Tuple, Union

from .algebra.cyclotomic import Cyclo40
from .bracket import DEFAULT_LIMIT as BRACKET_LIMIT
from .bracket import JonesClass5, bracket, jones_class5, jones_tilde, v_abs_squared
from .colorings import col_n
from .diagram.build import build_diagram
from .diagram.core import LinkDiagram
from .kauffman import DEFAULT_LIMIT as KAUFFMAN_LIMIT
from .kauffman import admissible_point, describe_special, f_at_special, f_set, kauffman_f
from .notation import PD, LinkSpec, parse_spec, serialize_spec

__all__ = ["InvariantReport", "compute_report", "compare_reports", "point_from_powers", "Verdict"]


def point_from_powers(i: int, j: int) -> Tuple[Cyclo40, Cyclo40]:
    """a0 = zeta^i and x0 = p0 + 1/p0 with p0 = zeta^j, zeta = exp(-pi i/20)."""
    a0 = Cyclo40.zeta(i)
    p0 = Cyclo40.zeta(j)
    x0 = p0 + p0.conj()
    if not admissible_point(a0, x0):
        raise ValueError(f"point (zeta^{i}, zeta^{j} + zeta^{-j}) is not admissible")
    return a0, x0


@dataclass(frozen=True)
class InvariantReport:
    spec: str
    crossings: int
    components: int
    col5: int
    col3: int
    f_special: Cyclo40
    v_abs_sq: Cyclo40
    class5: JonesClass5
    jones_tilde: str
    bracket: str
    kauffman: Optional[str] = None
    point: Optional[Tuple[int, int]] = None
    f_set: Optional[Tuple[Cyclo40, ...]] = None

    @property
    def v_abs(self) -> float:
        return math.sqrt(max(self.v_abs_sq.to_complex().real, 0.0))

    @property
    def f_float(self) -> float:
        return self.f_special.to_complex().real

    def to_json(self) -> dict:
        out = {
            "spec": self.spec,
            "crossings": self.crossings,
            "components": self.components,
            "col5": self.col5,
            "col3": self.col3,
            "F": {
                "value": describe_special(self.f_special),
                "float": round(self.f_float, 6),
                "exact": self.f_special.to_json(),
            },
            "V": {
                "abs": round(self.v_abs, 6),
                "abs_squared_exact": self.v_abs_sq.to_json(),
            },
            "class5": {"members": self.class5.to_json(), "text": str(self.class5), "half_shift": self.class5.shifted},
            "jones_tilde": self.jones_tilde,
            "bracket": self.bracket,
        }
        if self.kauffman is not None:
            out["kauffman_F"] = self.kauffman
        if self.f_set is not None:
            out["F_set"] = {
                "point": {"a0_power": self.point[0], "p0_power": self.point[1]},
                "values": [[round(z.to_complex().real, 6), round(z.to_complex().imag, 6)] for z in self.f_set],
                "exact": [z.to_json() for z in self.f_set],
                "has_real": any(z.is_real() for z in self.f_set),
            }
        return out


def compute_report(
    spec: Union[str, LinkSpec, LinkDiagram],
    limit: Optional[int] = None,
    point: Optional[Tuple[int, int]] = None,
    kauffman: bool = False,
) -> InvariantReport:
    """``limit`` caps both the bracket and the Kauffman recursion; when it is
    None each uses its own default cap."""
    blim = BRACKET_LIMIT if limit is None else limit
    klim = KAUFFMAN_LIMIT if limit is None else limit
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if isinstance(spec, LinkDiagram):
        d, text = spec, serialize_spec(PD(spec.crossings))
    else:
        d, text = build_diagram(spec), serialize_spec(spec)
    br = bracket(d, blim)
    vt = jones_tilde(d, blim, br=br)
    f = f_at_special(d, klim)
    c5 = col_n(d, 5)
    if f * f * 5 != Cyclo40.one() * c5:
        raise AssertionError(f"5 F^2 != col_5 for {text}: F = {describe_special(f)}, col_5 = {c5}")
    fs = None
    if point is not None:
        a0, x0 = point_from_powers(*point)
        fs = f_set(d, a0, x0, klim)
    return InvariantReport(
        spec=text,
        crossings=d.n,
        components=d.component_count,
        col5=c5,
        col3=col_n(d, 3),
        f_special=f,
        v_abs_sq=v_abs_squared(br),
        class5=jones_class5(vt=vt),
        jones_tilde=str(vt),
        bracket=str(br),
        kauffman=str(kauffman_f(d, klim)) if kauffman else None,
        point=point,
        f_set=fs,
    )


@dataclass(frozen=True)
class Verdict:
    distinguished: bool
    by: Tuple[str, ...]

    def to_json(self) -> dict:
        return {"verdict": "distinguished" if self.distinguished else "not-distinguished", "by": list(self.by)}

    def __str__(self):
        if self.distinguished:
            return "distinguished by " + ", ".join(self.by)
        return "not distinguished by the 5-move invariants"


def compare_reports(a: InvariantReport, b: InvariantReport) -> Verdict:
    """Only 5-move invariants take part: component count and col_3 do not."""
    checks: Dict[str, bool] = {
        "col5": a.col5 == b.col5,
        "F(1,x0)": a.f_special == b.f_special,
        "|V|": a.v_abs_sq == b.v_abs_sq,
        "JonesClass5": a.class5.members == b.class5.members,
    }
    if a.f_set is not None and b.f_set is not None and a.point == b.point:
        checks["Set(F)"] = a.f_set == b.f_set
    by = tuple(k for k, ok in checks.items() if not ok)
    return Verdict(bool(by), by)
