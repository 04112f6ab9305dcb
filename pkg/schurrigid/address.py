# -*- coding: utf-8 -*-
"""
Text addresses for marked diagrams and Schubert varieties.

    F4:3                  the marked diagram (F_4, a_3)
    F4:3 / w=4 3 2 3      S(w) for the reduced word s4 s3 s2 s3
    F4:3 / sub=1,2,3      the subdiagram Schubert variety on nodes 1,2,3
    F4:3 / exc=C2-a2-a1   a tagged catalog entry
"""
from __future__ import annotations

import re
from typing import List, Optional, Sequence, Tuple

from schurrigid.errors import AddressError
from schurrigid.rigidity import S0
from schurrigid.root_system import parse_type
from schurrigid.schubert import (
    MarkedDiagram,
    exceptional,
    schubert_from_word,
    subdiagram,
)
from schurrigid.util import parse_index_list
from schurrigid.weyl import parse_word

DIAGRAM_RE = re.compile(r"^\s*([A-Za-z]+\d+)\s*:\s*(\S+)\s*$")
PART_RE = re.compile(r"^\s*(w|sub|exc)\s*=\s*(.*?)\s*$")


def parse_diagram(text: str) -> MarkedDiagram:
    match = DIAGRAM_RE.match(text)
    if not match:
        raise AddressError(
            f"'{text.strip()}' is not a marked diagram such as 'F4:3'"
        )
    type_text, marked = match.groups()
    t = parse_type(type_text)
    if not marked.isdigit():
        raise AddressError(f"Marked node '{marked}' is not an integer")
    return MarkedDiagram(t, int(marked))


def _nodes(text: str) -> Tuple[int, ...]:
    try:
        return parse_index_list(text)
    except ValueError as e:
        raise AddressError(f"Malformed node list '{text}': {e}") from e


def s0_from_options(
    d: MarkedDiagram,
    word: Optional[str] = None,
    sub: Optional[str] = None,
    exc: Optional[str] = None,
) -> Optional[S0]:
    given = [x for x in (word, sub, exc) if x is not None]
    if len(given) > 1:
        raise AddressError("Give at most one of w=, sub= and exc=")
    if word is not None:
        return schubert_from_word(d, parse_word(word))
    if sub is not None:
        # the marked node is implied
        return subdiagram(d, sorted(set(_nodes(sub)) | {d.k}))
    if exc is not None:
        return exceptional(exc.strip())
    return None


def parse_address(text: str) -> Tuple[MarkedDiagram, Optional[S0]]:
    head, _, tail = text.partition("/")
    d = parse_diagram(head)
    if not tail.strip():
        return d, None
    match = PART_RE.match(tail)
    if not match:
        raise AddressError(
            f"'{tail.strip()}' is not one of w=..., sub=... or exc=..."
        )
    key, value = match.groups()
    return d, s0_from_options(d, **{"word" if key == "w" else key: value})


def parse_levi(text: str) -> Sequence[int]:
    return _nodes(text) if text.strip() else ()


def parse_coweight(text: str) -> Tuple[int, ...]:
    """Parse "1,0,2" into non-negative fundamental-coweight coefficients."""
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    if not tokens or not all(t.isdigit() for t in tokens):
        bad = next((t for t in tokens if not t.isdigit()), text)
        raise AddressError(f"'{bad}' is not a non-negative integer")
    return tuple(int(t) for t in tokens)


def expand_target(text: str) -> List[MarkedDiagram]:
    """Expand "F4" to every marked node of F4; keep "F4:3" as it is."""
    if ":" in text:
        return [parse_diagram(text)]
    t = parse_type(text)
    return [MarkedDiagram(t, k) for k in range(1, t.rank + 1)]


def default_diagrams(max_rank: int = 6) -> List[MarkedDiagram]:
    """Families A to D up to ``max_rank``, then F4 and G2."""
    found = []
    for family, low in (("A", 1), ("B", 2), ("C", 2), ("D", 4)):
        for rank in range(low, max_rank + 1):
            found.extend(expand_target(f"{family}{rank}"))
    found.extend(expand_target("F4"))
    found.extend(expand_target("G2"))
    return found
