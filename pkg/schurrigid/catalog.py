# -*- coding: utf-8 -*-
from __future__ import annotations

import logging
import re
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Tuple

import yaml
from attrs import frozen

from schurrigid import CATALOG_FILE, resource
from schurrigid.errors import CatalogError
from schurrigid.schubert import MarkedDiagram
from schurrigid.types import JSON

SMOOTH_NONLINEAR_EXCEPTIONAL = "smooth-nonlinear-exceptional"
MAXIMAL_LINEAR_EXCEPTION = "maximal-linear-exception"
SCHUBERT_RIGIDITY_OPEN = "schubert-rigidity-open"

TERM_RE = re.compile(r"^\s*(n|k|\d+)\s*(?:([+-])\s*(\d+))?\s*$")


def evaluate(expr: str, n: int, k: int) -> int:
    match = TERM_RE.match(expr)
    if not match:
        raise CatalogError(f"Bad index expression '{expr}'")
    base, sign, offset = match.groups()
    value = {"n": n, "k": k}.get(base, None)
    if value is None:
        value = int(base)
    if sign:
        value += int(offset) if sign == "+" else -int(offset)
    return value


def expand_indices(expr: str, n: int, k: int) -> FrozenSet[int]:
    """Evaluate "k..n-1", "k-1,n" and the like, keeping nodes 1..n."""
    found = set()
    for part in str(expr).split(","):
        if ".." in part:
            low, high = part.split("..", 1)
            found.update(range(evaluate(low, n, k), evaluate(high, n, k) + 1))
        else:
            found.add(evaluate(part, n, k))
    return frozenset(i for i in found if 1 <= i <= n)


@frozen
class CatalogEntry:
    kind: str
    source: str
    item: Optional[int] = None
    family: Optional[str] = None
    diagram: Optional[str] = None
    marked: Optional[str] = None
    nodes: Optional[str] = None
    lam: Optional[str] = None
    tag: Optional[str] = None
    form: Optional[str] = None
    dimension: Optional[int] = None
    root: Optional[str] = None
    schubert_rigidity: Optional[str] = None

    @property
    def pair_id(self) -> str:
        where = self.diagram or f"{self.family}_n:{self.marked}"
        if self.tag and not self.nodes:
            return f"{where} / exc={self.tag}"
        if self.nodes:
            return f"{where} / sub={self.nodes}"
        return where

    def matches(self, d: MarkedDiagram) -> bool:
        if self.diagram is not None:
            return str(d) == self.diagram
        if self.family != d.type.family:
            return False
        n = d.type.rank
        return d.k in expand_indices(self.marked or "", n, d.k)

    def nodes_for(self, d: MarkedDiagram) -> Optional[FrozenSet[int]]:
        if not self.nodes or not self.matches(d):
            return None
        return expand_indices(self.nodes, d.type.rank, d.k)

    def lambda_for(self, d: MarkedDiagram) -> Optional[FrozenSet[int]]:
        if self.lam is None or not self.matches(d):
            return None
        return expand_indices(self.lam, d.type.rank, d.k)

    def to_json(self) -> JSON:
        data: Dict[str, JSON] = {
            "pair": self.pair_id,
            "kind": self.kind,
            "source": self.source,
        }
        for name in (
            "item",
            "form",
            "lam",
            "tag",
            "dimension",
            "root",
            "schubert_rigidity",
        ):
            value = getattr(self, name)
            if value is not None:
                data["lambda" if name == "lam" else name] = value
        return data


@frozen
class ExceptionalSubvariety:
    """A smooth non-linear S_0 with no subdiagram presentation."""

    diagram: MarkedDiagram
    tag: str
    source: str


@frozen
class Catalog:
    version: int
    sources: Dict[str, str]
    entries: Tuple[CatalogEntry, ...]

    def of_kind(self, kind: str) -> List[CatalogEntry]:
        return [e for e in self.entries if e.kind == kind]

    def describe(self, source: str) -> str:
        try:
            return self.sources[source]
        except KeyError as e:
            raise CatalogError(f"Unknown provenance tag '{source}'") from e

    def smooth_exceptional(
        self, d: MarkedDiagram
    ) -> List[ExceptionalSubvariety]:
        found = []
        for entry in self.of_kind(SMOOTH_NONLINEAR_EXCEPTIONAL):
            if not entry.matches(d) or not entry.tag:
                continue
            if entry.diagram is not None:
                found.append(ExceptionalSubvariety(d, entry.tag, entry.source))
                continue
            m, k = d.type.rank, d.k
            # S_0 lies in a C_{n+1} subdiagram of C_m, so n stops at m - 1
            for n in range(max(2, m - k + 1), m):
                i = n - (m - k)
                tag = entry.tag.format(n=n, j=i + 1, i=i)
                found.append(ExceptionalSubvariety(d, tag, entry.source))
        return found

    def linear_exceptions(self, d: MarkedDiagram) -> List[CatalogEntry]:
        return [
            e
            for e in self.of_kind(MAXIMAL_LINEAR_EXCEPTION)
            if e.matches(d)
        ]

    def schubert_rigidity_open(self, d: MarkedDiagram) -> List[CatalogEntry]:
        return [
            e for e in self.of_kind(SCHUBERT_RIGIDITY_OPEN) if e.matches(d)
        ]

    def to_json(self) -> JSON:
        return {
            "version": self.version,
            "entries": [e.to_json() for e in self.entries],
            "sources": dict(sorted(self.sources.items())),
        }


def _entry(kind: str, raw: JSON) -> CatalogEntry:
    if not isinstance(raw, dict) or "source" not in raw:
        raise CatalogError(f"Malformed {kind} entry: {raw!r}")
    try:
        return CatalogEntry(
            kind=kind,
            source=str(raw["source"]),
            item=raw.get("item"),
            family=raw.get("family"),
            diagram=raw.get("diagram"),
            marked=None if raw.get("marked") is None else str(raw["marked"]),
            nodes=None if raw.get("nodes") is None else str(raw["nodes"]),
            lam=None if raw.get("lambda") is None else str(raw["lambda"]),
            tag=raw.get("tag"),
            form=raw.get("form"),
            dimension=raw.get("dimension"),
            root=raw.get("root"),
            schubert_rigidity=raw.get("schubert_rigidity"),
        )
    except TypeError as e:
        raise CatalogError(f"Malformed {kind} entry: {e}") from e


def parse_catalog(text: str) -> Catalog:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise CatalogError(f"Catalog is not valid YAML: {e}") from e
    if not isinstance(data, dict) or "version" not in data:
        raise CatalogError("Catalog must be a mapping with a version")
    sources = {str(k): str(v) for k, v in (data.get("sources") or {}).items()}
    entries = []
    for key, kind in (
        ("smooth_nonlinear_exceptional", SMOOTH_NONLINEAR_EXCEPTIONAL),
        ("maximal_linear_exceptions", MAXIMAL_LINEAR_EXCEPTION),
        ("schubert_rigidity_open", SCHUBERT_RIGIDITY_OPEN),
    ):
        for raw in data.get(key) or []:
            entry = _entry(kind, raw)
            if entry.source not in sources:
                raise CatalogError(
                    f"Entry {entry.pair_id} cites unknown source "
                    f"'{entry.source}'"
                )
            entries.append(entry)
    return Catalog(int(data["version"]), sources, tuple(entries))


@lru_cache(maxsize=None)
def load_catalog(path: Optional[str] = None) -> Catalog:
    path = path or resource(CATALOG_FILE)
    try:
        with open(path, encoding="utf-8") as f:
            catalog = parse_catalog(f.read())
    except OSError as e:
        raise CatalogError(f"Cannot read catalog '{path}': {e}") from e
    logging.debug(
        "Loaded catalog v%i with %i entries",
        catalog.version,
        len(catalog.entries),
    )
    return catalog
