"""Bundled link data: the 45 conjugacy classes of B_3/(s1^5), named links,
and the grouping of small links into 5-move boxes.

The data lives in ``data/catalog.json`` next to a SHA-256 checksum that is
verified on first load.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Dict, List, Optional, Tuple

from ..algebra.cyclotomic import Cyclo40
from ..errors import NotConstructibleError, UnknownLinkError
from ..notation import Braid, LinkSpec, parse_spec

__all__ = [
    "CatalogRow",
    "Alternate",
    "NamedLink",
    "Box",
    "BoxEntry",
    "table41",
    "row",
    "named",
    "lookup",
    "named_keys",
    "boxes",
    "parse_value",
    "catalog_checksum",
]

_SQRT5 = Cyclo40.zeta(8) * 2 + Cyclo40.zeta(-8) * 2 + Cyclo40.one()


def parse_value(text: str) -> Cyclo40:
    """'5', '-1', 'sqrt5', '-sqrt5' and the like as exact values."""
    s = text.strip()
    sign = 1
    if s.startswith("-"):
        sign, s = -1, s[1:]
    if s == "sqrt5":
        return _SQRT5 * sign
    return Cyclo40.one() * (sign * int(s))


@dataclass(frozen=True)
class Alternate:
    braid: Braid
    name: Optional[str]


@dataclass(frozen=True)
class CatalogRow:
    class_id: int
    braid: Braid
    f_text: str
    expected_v: str
    expected_class5_member: Tuple[int, int, int, int]
    link_name: str
    mirror: Optional[int]
    alternates: Tuple[Alternate, ...] = ()

    @property
    def expected_f(self) -> Cyclo40:
        return parse_value(self.f_text)

    @property
    def spec_text(self) -> str:
        return "braid:3:[" + ",".join(str(i) for i in self.braid.word) + "]"


@dataclass(frozen=True)
class NamedLink:
    key: str
    spec: Optional[LinkSpec]
    source: str
    metadata: Dict[str, object] = field(default_factory=dict, compare=False, hash=False)

    @property
    def constructible(self) -> bool:
        return self.spec is not None

    @property
    def flags(self) -> List[str]:
        return list(self.metadata.get("flags", []))


@dataclass(frozen=True)
class BoxEntry:
    name: str
    kind: str  # "r" rational, "p" pretzel, "m" Montesinos, "" other
    chiral: bool
    amphicheiral: bool
    mirrored: bool

    @staticmethod
    def parse(token: str, mirrored: bool) -> "BoxEntry":
        flags, name = token.split(":", 1)
        kind = next((c for c in flags if c in "rpm"), "")
        return BoxEntry(name, kind, "*" in flags, "a" in flags, mirrored)


@dataclass(frozen=True)
class Box:
    rep: str
    f_text: str
    class5_member: Tuple[int, int, int, int]
    v_text: str
    entries: Tuple[BoxEntry, ...]
    separated: bool

    @property
    def expected_f(self) -> Cyclo40:
        return parse_value(self.f_text)

    @property
    def expected_v(self) -> float:
        return 5 ** 0.5 if self.v_text == "sqrt5" else float(self.v_text)

    def constructible(self) -> List[BoxEntry]:
        out = []
        for e in self.entries:
            try:
                if named(e.name).constructible:
                    out.append(e)
            except UnknownLinkError:
                pass
        return out


def _read(name: str) -> bytes:
    return resources.files(__package__).joinpath("data", name).read_bytes()


def catalog_checksum() -> str:
    return hashlib.sha256(_read("catalog.json")).hexdigest()


@lru_cache(maxsize=1)
def _data() -> dict:
    raw = _read("catalog.json")
    expected = _read("catalog.sha256").decode().split()[0]
    if hashlib.sha256(raw).hexdigest() != expected:
        raise RuntimeError("catalog data does not match its checksum")
    return json.loads(raw)


@lru_cache(maxsize=1)
def table41() -> List[CatalogRow]:
    rows = []
    for r in _data()["classes"]:
        alts = tuple(Alternate(parse_spec(a["braid"]), a["name"]) for a in r["alternates"])
        rows.append(
            CatalogRow(
                class_id=r["id"],
                braid=parse_spec(r["braid"]),
                f_text=r["F"],
                expected_v=r["V"],
                expected_class5_member=tuple(r["class5_member"]),
                link_name=r["link"],
                mirror=r["mirror"],
                alternates=alts,
            )
        )
    return rows


def row(class_id: int) -> CatalogRow:
    for r in table41():
        if r.class_id == class_id:
            return r
    raise UnknownLinkError(f"no class {class_id}")


@lru_cache(maxsize=None)
def named(key: str) -> NamedLink:
    entries = _data()["named"]
    if key not in entries:
        raise UnknownLinkError(key)
    e = entries[key]
    meta = {k: v for k, v in e.items() if k not in ("spec", "source")}
    spec = parse_spec(e["spec"]) if e["spec"] else None
    return NamedLink(key, spec, e["source"], meta)


def lookup(key: str) -> NamedLink:
    """Like ``named`` but only for entries that carry a diagram."""
    link = named(key)
    if not link.constructible:
        raise NotConstructibleError(f"{key} has data but no diagram in the catalog")
    return link


def named_keys() -> List[str]:
    return sorted(_data()["named"])


@lru_cache(maxsize=1)
def boxes() -> List[Box]:
    out = []
    for b in _data()["boxes"]:
        entries = tuple(BoxEntry.parse(t, False) for t in b["links"]) + tuple(
            BoxEntry.parse(t, True) for t in b["mirror_links"]
        )
        out.append(Box(b["rep"], b["F"], tuple(b["class5_member"]), b["V"], entries, b["separated"]))
    return out
