"""Command-line front end."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from . import catalog
from .algebra.cyclotomic import Cyclo40
from .algebra.laurent import LaurentPoly
from .diagram import build_diagram, mirror
from .errors import CrossingLimitError, NotConstructibleError, SpecSyntaxError, UnknownLinkError
from .kauffman import describe_special
from .montesinos import reduce_montesinos, representative_spec
from .notation import Frac, Montesinos, Pretzel, parse_frac, parse_spec, serialize_spec
from .report import compare_reports, compute_report
from .tangles import classify12, classify_rational_link

__all__ = ["main", "density", "table41_rows", "table71_rows"]

V_TOLERANCE = 1e-4
# the largest bundled braid has 30 crossings
TABLE_LIMIT = 40


def _point(text: Optional[str]) -> Optional[Tuple[int, int]]:
    if text is None:
        return None
    try:
        i, j = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--point expects two integers a0,x0, got {text!r}") from None
    return i, j


def _emit(obj, as_json: bool, out=None) -> None:
    out = out or sys.stdout
    if as_json:
        json.dump(obj, out, indent=2, sort_keys=False)
        out.write("\n")
    elif isinstance(obj, dict):
        for k, v in obj.items():
            out.write(f"{k}: {json.dumps(v) if isinstance(v, (dict, list)) else v}\n")
    else:
        out.write(f"{obj}\n")


# --- density -----------------------------------------------------------------

def density(kmax: int) -> List[Tuple[int, int, Cyclo40]]:
    """(k1, k2, |1+t|^2k1 |1-t|^2k2) at t = exp(pi i/5), sorted by value.

    Raises AssertionError if two values coincide or a non-trivial one is 1.
    """
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    t = Cyclo40.zeta(-4)
    s1 = (1 + t) * (1 + t).conj()
    s2 = (1 - t) * (1 - t).conj()
    vals = [(k1, k2, (s1 ** k1) * (s2 ** k2)) for k1 in range(kmax + 1) for k2 in range(kmax + 1)]
    for (a1, a2, x), (b1, b2, y) in combinations(vals, 2):
        if x == y:
            raise AssertionError(f"|V| coincides for ({a1},{a2}) and ({b1},{b2})")
    for k1, k2, x in vals:
        if (k1, k2) != (0, 0) and x == Cyclo40.one():
            raise AssertionError(f"|V| = 1 for ({k1},{k2})")
    return sorted(vals, key=lambda r: r[2].to_complex().real)


# --- tables ------------------------------------------------------------------

def _verdict(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def table41_rows(only: Optional[int] = None, limit: Optional[int] = TABLE_LIMIT) -> List[dict]:
    rows = []
    for r in catalog.table41():
        if only is not None and r.class_id != only:
            continue
        rep = compute_report(r.braid, limit=limit)
        ok_f = rep.f_special == r.expected_f
        ok_v = abs(rep.v_abs - float(r.expected_v)) <= V_TOLERANCE
        ok_c = _sign_norm(r.expected_class5_member) in rep.class5.members
        rows.append({
            "id": r.class_id,
            "braid": r.spec_text,
            "link": r.link_name,
            "F": describe_special(rep.f_special),
            "F_expected": r.f_text,
            "F_check": _verdict(ok_f),
            "V": f"{rep.v_abs:.6f}",
            "V_expected": r.expected_v,
            "V_check": _verdict(ok_v),
            "class5": str(rep.class5),
            "class5_expected": _poly_text(r.expected_class5_member),
            "class5_check": _verdict(ok_c),
        })
    return rows


_COLUMNS = ("F", "F_expected", "V", "V_expected", "class5", "class5_expected")


def table71_rows(limit: Optional[int] = TABLE_LIMIT) -> List[dict]:
    """One row per constructible box entry, checked against the box values."""
    rows = []
    for n, box in enumerate(catalog.boxes(), 1):
        for e in box.entries:
            base = {"box": n, "rep": box.rep, "link": ("mirror " if e.mirrored else "") + e.name}
            try:
                link = catalog.named(e.name)
            except UnknownLinkError:
                continue
            if not link.constructible:
                rows.append({**base, "spec": "", **{k: "" for k in _COLUMNS}, **{k + "_check": "SKIP" for k in ("F", "V", "class5")}})
                continue
            d = build_diagram(link.spec)
            if e.mirrored:
                d = mirror(d)
            rep = compute_report(d, limit=limit)
            ok_f = rep.f_special == box.expected_f
            ok_v = abs(rep.v_abs - box.expected_v) <= V_TOLERANCE
            ok_c = _sign_norm(box.class5_member) in rep.class5.members
            rows.append({
                **base,
                "spec": serialize_spec(link.spec),
                "F": describe_special(rep.f_special),
                "F_expected": box.f_text,
                "F_check": _verdict(ok_f),
                "V": f"{rep.v_abs:.6f}",
                "V_expected": box.v_text,
                "V_check": _verdict(ok_v),
                "class5": str(rep.class5),
                "class5_expected": _poly_text(box.class5_member),
                "class5_check": _verdict(ok_c),
            })
    return rows


def _sign_norm(v: Sequence[int]) -> Tuple[int, ...]:
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def _poly_text(v: Sequence[int]) -> str:
    return str(LaurentPoly({i: c for i, c in enumerate(v)}, "t"))


def _write_rows(rows: List[dict], as_json: bool) -> None:
    if as_json:
        _emit(rows, True)
        return
    if not rows:
        return
    w = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)


def _failed(rows: Iterable[dict]) -> bool:
    return any(v == "FAIL" for r in rows for k, v in r.items() if k.endswith("_check"))


# --- commands ----------------------------------------------------------------

def cmd_compute(args) -> int:
    rep = compute_report(args.spec, limit=args.limit, point=args.point, kauffman=args.kauffman)
    _emit(rep.to_json(), True)
    return 0


def cmd_compare(args) -> int:
    a = compute_report(args.spec_a, limit=args.limit, point=args.point)
    b = compute_report(args.spec_b, limit=args.limit, point=args.point)
    v = compare_reports(a, b)
    if args.json:
        _emit({**v.to_json(), "a": a.spec, "b": b.spec}, True)
    else:
        _emit(v.to_json()["verdict"] + (" by " + ",".join(v.by) if v.by else ""), False)
    return 0


def cmd_table(args) -> int:
    if args.which == "4.1":
        rows = table41_rows(args.only, limit=args.limit or TABLE_LIMIT)
    else:
        rows = table71_rows(limit=args.limit or TABLE_LIMIT)
        if args.only is not None:
            rows = [r for r in rows if r["box"] == args.only]
    _write_rows(rows, args.json)
    return 1 if _failed(rows) else 0


def cmd_density(args) -> int:
    rows = [
        {"k1": k1, "k2": k2, "V": round(x.to_complex().real ** 0.5, 6), "V_squared_exact": x.to_json()}
        for k1, k2, x in density(args.kmax)
    ]
    if args.json:
        _emit(rows, True)
    else:
        _write_rows([{k: r[k] for k in ("k1", "k2", "V")} for r in rows], False)
    return 0


def cmd_reduce_rational(args) -> int:
    f = parse_frac(args.fraction)
    out = {
        "class12": str(classify12(f)),
        "link_class": classify_rational_link(f).value,
        "denominator_link_class": classify_rational_link(Frac(f.q, f.p)).value,
    }
    _emit(out, True)
    return 0


def cmd_reduce_montesinos(args) -> int:
    spec = parse_spec(args.spec)
    if not isinstance(spec, (Montesinos, Pretzel)):
        raise SpecSyntaxError("expected a montesinos: or pretzel: spec", 0, args.spec)
    red = reduce_montesinos(spec)
    out = red.to_json()
    out["representative"] = serialize_spec(representative_spec(red.canonical))
    out["report"] = compute_report(spec, limit=args.limit, point=args.point).to_json()
    _emit(out, True)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--csv", action="store_true", help="CSV output (the default for tables)")
    common.add_argument("--limit", type=int, default=None, help="crossing cap")
    common.add_argument("--point", type=_point, default=None, metavar="I,J",
                        help="evaluate Set(F) at a0 = zeta^I, x0 = zeta^J + zeta^-J")
    common.add_argument("--only", type=int, default=None, help="restrict a table to one id")

    p = argparse.ArgumentParser(prog="fivemove", description="5-move invariants of links")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common], help="invariant report of a link")
    c.add_argument("spec")
    c.add_argument("--kauffman", action="store_true", help="include the Kauffman polynomial F(a, x)")
    c.set_defaults(func=cmd_compute)

    c = sub.add_parser("compare", parents=[common], help="try to tell two links apart")
    c.add_argument("spec_a")
    c.add_argument("spec_b")
    c.set_defaults(func=cmd_compare)

    c = sub.add_parser("table", parents=[common], help="recompute a reference table")
    c.add_argument("which", choices=["4.1", "7.1"])
    c.set_defaults(func=cmd_table)

    c = sub.add_parser("density", parents=[common], help="values |1+t|^k1 |1-t|^k2")
    c.add_argument("kmax", type=int)
    c.set_defaults(func=cmd_density)

    c = sub.add_parser("reduce-rational", parents=[common], help="classify a rational tangle")
    c.add_argument("fraction")
    c.set_defaults(func=cmd_reduce_rational)

    c = sub.add_parser("reduce-montesinos", parents=[common], help="canonical class of a Montesinos link")
    c.add_argument("spec")
    c.set_defaults(func=cmd_reduce_montesinos)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SpecSyntaxError as e:
        print(f"fivemove: {e}", file=sys.stderr)
        return 2
    except CrossingLimitError as e:
        print(f"fivemove: {e}", file=sys.stderr)
        return 3
    except (UnknownLinkError, NotConstructibleError, ValueError) as e:
        print(f"fivemove: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
