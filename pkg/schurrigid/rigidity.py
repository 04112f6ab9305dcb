# -*- coding: utf-8 -*-
"""
Schur rigidity of pairs ``(S, S_0)``.

``classify`` combines what can be computed (linearity, maximality among
linear Schubert varieties, root counts against the adjacent nodes ``Lambda``)
with the frozen catalog for everything that cannot.
"""
from __future__ import annotations

import logging
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple, Union

from attrs import field, frozen

from schurrigid.catalog import (
    Catalog,
    CatalogEntry,
    ExceptionalSubvariety,
    load_catalog,
)
from schurrigid.errors import (
    DescriptorError,
    InvariantViolation,
    RealizationError,
)
from schurrigid.root_system import Root, RootSystem, SimpleType
from schurrigid.schubert import (
    MarkedDiagram,
    SchubertVariety,
    SubdiagramDescriptor,
    bruhat_table,
    connected_subdiagrams,
    degree,
    exceptional,
    is_linear,
    is_long_root_diagram,
    is_maximal_linear,
    is_rationally_smooth,
    lambda_adjacent,
    subdiagram,
    subdiagram_to_weyl,
    tangent_roots_subdiagram,
)
from schurrigid.types import JSON
from schurrigid.weyl import (
    format_word,
    from_word,
    minimal_representative,
    reduced_word,
)

SCHUR_RIGID = "SchurRigid"
NOT_SCHUR_RIGID = "NotSchurRigid"
OUT_OF_SCOPE = "OutOfScope"
STATUSES = (SCHUR_RIGID, NOT_SCHUR_RIGID, OUT_OF_SCOPE)

S0 = Union[SubdiagramDescriptor, SchubertVariety]


@frozen
class PairDescriptor:
    diagram: MarkedDiagram
    s0: S0

    def __str__(self) -> str:
        if isinstance(self.s0, SchubertVariety):
            word = format_word(reduced_word(self.diagram.rs, self.s0.w))
            return f"{self.diagram} / w={word}"
        return f"{self.diagram} / {self.s0}"


@frozen
class Codim2Report:
    counts: Tuple[Tuple[int, int], ...]
    passed: bool

    def count(self, gamma: int) -> int:
        return dict(self.counts)[gamma]

    @property
    def min_count(self) -> Optional[int]:
        return min((c for _, c in self.counts), default=None)

    def summary(self) -> str:
        if not self.counts:
            return "pass (Lambda empty)"
        detail = ", ".join(f"a{g}:{c}" for g, c in self.counts)
        return f"{'pass' if self.passed else 'fail'} ({detail})"


def codim2_criterion(
    rs: RootSystem, tangent: FrozenSet[Root], lam: FrozenSet[int]
) -> Codim2Report:
    counts = []
    for gamma in sorted(lam):
        simple = rs.simple_root(gamma)
        counts.append(
            (gamma, sum(1 for a in tangent if rs.pair(a, simple) != 0))
        )
    return Codim2Report(tuple(counts), all(c >= 2 for _, c in counts))


def reflection_escape_check(
    rs: RootSystem, tangent: FrozenSet[Root], gamma: int
) -> bool:
    simple = rs.simple_root(gamma)
    return all(
        rs.reflect(a, simple) not in tangent
        for a in tangent
        if rs.pair(a, simple) != 0
    )


@frozen
class Reason:
    criterion: str
    result: str
    source: str

    def to_json(self) -> JSON:
        return {
            "criterion": self.criterion,
            "result": self.result,
            "source": self.source,
        }


FLAG_NAMES = (
    "smooth",
    "linear",
    "maximal_linear",
    "codim2_pass",
    "catalog_exception",
    "rationally_smooth",
    "normalized",
)


def _sorted_flags(
    flags: Mapping[str, Union[None, bool, int]]
) -> Tuple[Tuple[str, Union[None, bool, int]], ...]:
    return tuple(sorted(dict(flags).items()))


@frozen
class Verdict:
    """
    :ivar flags: ``smooth``, ``linear``, ``maximal_linear``,
        ``codim2_pass``, ``rationally_smooth`` and ``normalized`` are
        booleans or ``None`` when not evaluated; ``catalog_exception`` is
        the matching exception item number or ``None``.
    """

    pair: str
    status: str
    reasons: Tuple[Reason, ...]
    flags: Tuple[Tuple[str, Union[None, bool, int]], ...] = field(
        converter=_sorted_flags
    )

    def flag(self, name: str) -> Union[None, bool, int]:
        return dict(self.flags).get(name)

    def to_json(self) -> JSON:
        return {
            "pair": self.pair,
            "status": self.status,
            "reasons": [r.to_json() for r in self.reasons],
            "flags": dict(self.flags),
        }

    @classmethod
    def from_json(cls, data: JSON) -> Verdict:
        if not isinstance(data, dict):
            raise DescriptorError("Verdict JSON must be an object")
        try:
            return cls(
                pair=data["pair"],
                status=data["status"],
                reasons=tuple(
                    Reason(r["criterion"], r["result"], r["source"])
                    for r in data["reasons"]
                ),
                flags=data["flags"],
            )
        except (KeyError, TypeError) as e:
            raise DescriptorError(f"Malformed verdict JSON: {e}") from e


class _Builder:
    def __init__(self, pair: str) -> None:
        self.pair = pair
        self.reasons: List[Reason] = []
        self.flags: Dict[str, Union[None, bool, int]] = {
            name: None for name in FLAG_NAMES
        }

    def add(self, criterion: str, result: str, source: str) -> None:
        self.reasons.append(Reason(criterion, result, source))

    def verdict(self, status: str) -> Verdict:
        return Verdict(self.pair, status, tuple(self.reasons), self.flags)


def _translate_nodes(
    source: MarkedDiagram, target: MarkedDiagram, nodes: FrozenSet[int]
) -> FrozenSet[int]:
    n = source.type.rank
    family = source.type.family
    if family == "B":
        if len(nodes) == 1:
            return frozenset({n + 1})
        return frozenset(nodes | {n + 1})
    if family == "C":
        if n in nodes:
            return target.nodes
        return nodes
    if len(nodes) == 1:
        return frozenset({1})
    return target.nodes


def normalization_target(d: MarkedDiagram) -> Optional[MarkedDiagram]:
    n, family = d.type.rank, d.type.family
    if family == "B" and d.k == n:
        return MarkedDiagram(SimpleType("D", n + 1), n + 1)
    if family == "C" and d.k == 1:
        return MarkedDiagram(SimpleType("A", 2 * n - 1), 1)
    if family == "G" and d.k == 1:
        return MarkedDiagram(SimpleType("B", 3), 1)
    return None


def match_subdiagram(sv: SchubertVariety) -> Optional[SubdiagramDescriptor]:
    for sd in connected_subdiagrams(sv.diagram):
        if subdiagram_to_weyl(sv.diagram, sd).w == sv.w:
            return sd
    return None


def _folded_letter(source: MarkedDiagram, letter: int) -> Tuple[int, ...]:
    n, family = source.type.rank, source.type.family
    if family == "B":
        return (n, n + 1) if letter == n else (letter,)
    if family == "C":
        return (letter,) if letter == n else (letter, 2 * n - letter)
    return (1, 3) if letter == 1 else (2,)


def carry_over(sv: SchubertVariety, target: MarkedDiagram) -> SchubertVariety:
    """
    The Schubert variety of ``target`` equal to ``sv`` as a subvariety.

    Each simple reflection of the source maps to a product of commuting
    simple reflections of the target; the image of ``sv.w`` is then reduced
    to ``W^P`` of the target.
    """
    source = sv.diagram
    word = [
        j
        for i in reduced_word(source.rs, sv.w)
        for j in _folded_letter(source, i)
    ]
    rs = target.rs
    image = SchubertVariety(
        target, minimal_representative(rs, from_word(rs, word), target.k)
    )
    if image.dimension != sv.dimension or degree(image) != degree(sv):
        raise RealizationError(
            f"{PairDescriptor(source, sv)} does not carry over to {target}"
        )
    return image


def normalize(pair: PairDescriptor) -> Optional[PairDescriptor]:
    """
    Re-present ``pair`` on the diagram of the full automorphism group.

    Returns ``pair`` unchanged when no rewrite applies and ``None`` for an
    exceptional tag, which names nothing on the larger diagram.  A word is
    carried over as its Schubert cell and re-presented by a subdiagram of
    the target when one matches.
    """
    d = pair.diagram
    target = normalization_target(d)
    if target is None:
        return pair
    s0 = pair.s0
    if isinstance(s0, SchubertVariety):
        image = carry_over(s0, target)
        found = match_subdiagram(image)
        return PairDescriptor(target, image if found is None else found)
    if s0.is_exceptional:
        return None
    nodes = _translate_nodes(d, target, subdiagram(d, sorted(s0.nodes)).nodes)
    return PairDescriptor(target, subdiagram(target, sorted(nodes)))


def catalog_smooth_nonlinear(d: MarkedDiagram) -> List[PairDescriptor]:
    found = []
    for sd in connected_subdiagrams(d):
        if not is_linear(subdiagram_to_weyl(d, sd)):
            found.append(PairDescriptor(d, sd))
    for extra in load_catalog().smooth_exceptional(d):
        found.append(PairDescriptor(d, exceptional(extra.tag)))
    return found


def catalog_linear_exceptions() -> List[CatalogEntry]:
    catalog = load_catalog()
    return catalog.of_kind("maximal-linear-exception") + catalog.of_kind(
        "schubert-rigidity-open"
    )


def _linear_exception(
    catalog: Catalog,
    d: MarkedDiagram,
    sd: SubdiagramDescriptor,
) -> Optional[CatalogEntry]:
    for entry in catalog.linear_exceptions(d):
        if sd.is_exceptional and entry.tag == sd.exceptional_tag:
            return entry
        if not sd.is_exceptional and entry.nodes_for(d) == sd.nodes:
            return entry
    return None


def _tag_only_entry(
    catalog: Catalog, d: MarkedDiagram, sv: SchubertVariety
) -> Optional[CatalogEntry]:
    for entry in catalog.linear_exceptions(d):
        if entry.nodes is None and entry.dimension == sv.dimension:
            return entry
    return None


def unpresented_maximal_linear(
    d: MarkedDiagram, dimension: int
) -> List[SchubertVariety]:
    """Maximal linear ``S(w)`` of ``dimension`` that no subdiagram gives."""
    found = []
    for w in bruhat_table(d).elements:
        if w.length != dimension:
            continue
        sv = SchubertVariety(d, w)
        if is_maximal_linear(sv) and match_subdiagram(sv) is None:
            found.append(sv)
    return found


def _attach_codim2(
    b: _Builder, d: MarkedDiagram, sd: SubdiagramDescriptor
) -> Codim2Report:
    tangent = tangent_roots_subdiagram(d, sd)
    lam = lambda_adjacent(d, sd)
    report = codim2_criterion(d.rs, tangent, lam)
    escape = all(reflection_escape_check(d.rs, tangent, g) for g in lam)
    b.flags["codim2_pass"] = report.passed
    b.add("codimension-two", report.summary(), "codimension-two")
    b.add(
        "reflection-escape",
        "holds" if escape else "violated",
        "codimension-two",
    )
    return report


def _classify_tag(
    b: _Builder, catalog: Catalog, d: MarkedDiagram, tag: str
) -> Verdict:
    smooth: List[ExceptionalSubvariety] = [
        e for e in catalog.smooth_exceptional(d) if e.tag == tag
    ]
    if smooth:
        b.flags.update(smooth=True, linear=False, maximal_linear=False)
        b.add("smooth", f"exceptional {tag}", smooth[0].source)
        b.add("nonlinear-smooth", SCHUR_RIGID, "nonlinear-smooth-rigidity")
        b.add("vmrt-conditions", "recorded", "vmrt-conditions")
        return b.verdict(SCHUR_RIGID)
    entry = _linear_exception(catalog, d, exceptional(tag))
    if entry is None:
        raise DescriptorError(f"Unknown exceptional tag '{tag}' for {d}")
    b.flags.update(
        smooth=True,
        linear=True,
        maximal_linear=True,
        catalog_exception=entry.item,
    )
    b.add("smooth", "linear", "linear-smooth")
    b.add(
        "maximal-linear-exception", f"item {entry.item}", entry.source
    )
    return b.verdict(NOT_SCHUR_RIGID)


def classify(pair: PairDescriptor) -> Verdict:
    catalog = load_catalog()
    b = _Builder(str(pair))
    normalized = normalize(pair)
    b.flags["normalized"] = normalized is not None and normalized != pair
    if normalized is None:
        b.add(
            "normalization",
            "exceptional tags are not carried over",
            "automorphism-normalization",
        )
        return b.verdict(OUT_OF_SCOPE)
    if normalized != pair:
        b.add("normalization", str(normalized), "automorphism-normalization")
    d, s0 = normalized.diagram, normalized.s0

    sd: Optional[SubdiagramDescriptor]
    if isinstance(s0, SubdiagramDescriptor):
        if s0.is_exceptional:
            return _classify_tag(b, catalog, d, s0.exceptional_tag or "")
        sd = subdiagram(d, sorted(s0.nodes))
        sv = subdiagram_to_weyl(d, sd)
    else:
        sv = s0
        sd = match_subdiagram(sv)
    # a word is judged on the diagram it was given on
    judged = pair.s0 if isinstance(pair.s0, SchubertVariety) else sv

    linear = is_linear(judged)
    b.flags.update(
        linear=linear, rationally_smooth=is_rationally_smooth(judged)
    )
    if sd is not None:
        b.add("smooth", str(sd), "subdiagram-homogeneous")
    elif linear:
        b.add("smooth", "linear", "linear-smooth")
    else:
        b.flags["smooth"] = False
        b.add("smooth", "undetermined", "singular-out-of-scope")
        return b.verdict(OUT_OF_SCOPE)
    b.flags["smooth"] = True

    if not linear:
        b.flags["maximal_linear"] = False
        b.add("nonlinear-smooth", SCHUR_RIGID, "nonlinear-smooth-rigidity")
        b.add("vmrt-conditions", "recorded", "vmrt-conditions")
        if sd is not None:
            _attach_codim2(b, d, sd)
        return b.verdict(SCHUR_RIGID)

    maximal = is_maximal_linear(judged)
    b.flags["maximal_linear"] = maximal
    if not maximal:
        b.add("linear-not-maximal", NOT_SCHUR_RIGID, "linear-not-maximal")
        return b.verdict(NOT_SCHUR_RIGID)

    entry: Optional[CatalogEntry]
    if sd is None:
        entry = _tag_only_entry(catalog, d, sv)
        candidates = unpresented_maximal_linear(d, sv.dimension)
        if entry is not None and candidates != [sv]:
            b.add(
                "maximal-linear",
                f"ambiguous with {entry.tag}",
                "tag-only-ambiguity",
            )
            return b.verdict(OUT_OF_SCOPE)
    else:
        _attach_codim2(b, d, sd)
        entry = _linear_exception(catalog, d, sd)

    if entry is not None:
        b.flags["catalog_exception"] = entry.item
        b.add(
            "maximal-linear-exception", f"item {entry.item}", entry.source
        )
        if entry.schubert_rigidity == "open":
            b.add("schubert-rigidity", "open", "schubert-rigidity-open")
        return b.verdict(NOT_SCHUR_RIGID)
    b.add("maximal-linear", SCHUR_RIGID, "maximal-linear")
    return b.verdict(SCHUR_RIGID)


def schubert_rigidity(pair: PairDescriptor) -> str:
    """``rigid``, ``not-rigid``, ``open`` or ``unknown``."""
    verdict = classify(pair)
    if not verdict.flag("maximal_linear"):
        return "unknown"
    item = verdict.flag("catalog_exception")
    if item is None:
        return "rigid"
    for entry in load_catalog().of_kind("maximal-linear-exception"):
        if entry.item == item:
            return entry.schubert_rigidity or "unknown"
    return "unknown"


def classify_all(d: MarkedDiagram) -> List[Verdict]:
    catalog = load_catalog()
    pairs = [PairDescriptor(d, sd) for sd in connected_subdiagrams(d)]
    tags = [e.tag for e in catalog.smooth_exceptional(d)]
    tags += [
        e.tag
        for e in catalog.linear_exceptions(d)
        if e.tag and e.nodes is None
    ]
    pairs += [PairDescriptor(d, exceptional(t)) for t in tags if t]
    verdicts = [classify(p) for p in pairs]
    logging.debug("Classified %i pairs on %s", len(verdicts), d)
    return verdicts


@frozen
class VerifyRow:
    pair: str
    kind: str
    counts: Tuple[Tuple[int, int], ...]
    criterion: bool
    escape: bool
    status: str
    source: str
    ok: bool
    note: str = ""

    def to_json(self) -> JSON:
        return {
            "pair": self.pair,
            "kind": self.kind,
            "counts": {str(g): c for g, c in self.counts},
            "criterion": self.criterion,
            "escape": self.escape,
            "status": self.status,
            "source": self.source,
            "ok": self.ok,
            "note": self.note,
        }

    @classmethod
    def from_json(cls, data: JSON) -> VerifyRow:
        if not isinstance(data, dict):
            raise DescriptorError("Verify row JSON must be an object")
        return cls(
            pair=data["pair"],
            kind=data["kind"],
            counts=tuple(
                sorted((int(g), int(c)) for g, c in data["counts"].items())
            ),
            criterion=data["criterion"],
            escape=data["escape"],
            status=data["status"],
            source=data["source"],
            ok=data["ok"],
            note=data.get("note", ""),
        )


@frozen
class VerifyReport:
    diagram: str
    rows: Tuple[VerifyRow, ...]

    @property
    def failures(self) -> List[VerifyRow]:
        return [r for r in self.rows if not r.ok]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> JSON:
        return {
            "diagram": self.diagram,
            "rows": [r.to_json() for r in self.rows],
            "failures": len(self.failures),
        }

    @classmethod
    def from_json(cls, data: JSON) -> VerifyReport:
        if not isinstance(data, dict):
            raise DescriptorError("Verify report JSON must be an object")
        return cls(
            data["diagram"],
            tuple(VerifyRow.from_json(r) for r in data["rows"]),
        )


def _verify_row(
    catalog: Catalog, d: MarkedDiagram, sd: SubdiagramDescriptor
) -> VerifyRow:
    pair = PairDescriptor(d, sd)
    try:
        sv = subdiagram_to_weyl(d, sd)
    except InvariantViolation as e:
        return VerifyRow(
            str(pair), "error", (), False, False, "", "", False, str(e)
        )
    tangent = tangent_roots_subdiagram(d, sd)
    lam = lambda_adjacent(d, sd)
    report = codim2_criterion(d.rs, tangent, lam)
    escape = all(reflection_escape_check(d.rs, tangent, g) for g in lam)
    status = classify(pair).status
    note = ""
    if not is_linear(sv):
        kind, source = "nonlinear", "codimension-two"
        ok = report.passed and escape and status == SCHUR_RIGID
        if not ok:
            note = "non-linear subdiagram failed the criterion"
    elif not is_maximal_linear(sv):
        kind, source = "linear", "linear-not-maximal"
        ok, note = True, "reported"
    else:
        kind = "maximal-linear"
        entry = _linear_exception(catalog, d, sd)
        source = entry.source if entry else "maximal-linear"
        if not is_long_root_diagram(d):
            ok, note = True, "short root: reported"
        else:
            listed = entry is not None and entry.root == "long"
            expected = NOT_SCHUR_RIGID if listed else SCHUR_RIGID
            ok = report.passed != listed and status == expected
            if not ok:
                note = "criterion disagrees with the exception list"
            elif entry is not None and (
                report.min_count != 1 or entry.lambda_for(d) != lam
            ):
                ok = False
                note = "exception does not match its catalog Lambda"
    return VerifyRow(
        pair=str(pair),
        kind=kind,
        counts=report.counts,
        criterion=report.passed,
        escape=escape,
        status=status,
        source=source,
        ok=ok,
        note=note,
    )


def verify_catalog(d: MarkedDiagram) -> VerifyReport:
    catalog = load_catalog()
    rows = tuple(
        _verify_row(catalog, d, sd) for sd in connected_subdiagrams(d)
    )
    report = VerifyReport(str(d), rows)
    for row in report.failures:
        logging.warning("verify %s: %s", row.pair, row.note)
    return report
