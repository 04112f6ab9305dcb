# -*- coding: utf-8 -*-
"""
Schubert varieties ``S(w)`` in ``G/P`` for a maximal parabolic ``P``.

A marked diagram ``(G, a_k)`` fixes ``P``; Schubert varieties are indexed by
``w`` in ``W^P``.  Degrees and Poincare polynomials are read off the Bruhat
graph of ``W^P`` weighted by Chevalley coefficients ``<w_k, beta^vee>``.
"""
from __future__ import annotations

import logging
import threading
from collections import deque
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np
from attrs import field, frozen

from schurrigid import cache
from schurrigid.errors import (
    DescriptorError,
    RealizationError,
)
from schurrigid.root_system import Root, RootSystem, SimpleType, build
from schurrigid.weyl import (
    WeylElement,
    from_word,
    identity,
    inversion_ids,
    is_minimal,
    longest_minimal_rep,
    minimal_reps,
    reflection,
    require_minimal,
    simple_reflection,
)


@frozen(order=True)
class MarkedDiagram:
    type: SimpleType
    k: int

    def __attrs_post_init__(self) -> None:
        build(self.type).check_simple_index(self.k)

    def __str__(self) -> str:
        return f"{self.type}:{self.k}"

    @property
    def rs(self) -> RootSystem:
        return build(self.type)

    @property
    def nodes(self) -> FrozenSet[int]:
        return frozenset(range(1, self.type.rank + 1))

    @property
    def levi_nodes(self) -> FrozenSet[int]:
        return self.nodes - {self.k}

    @property
    def u_p_ids(self) -> Tuple[int, ...]:
        return self.rs.u_p_ids(self.k)

    @property
    def dimension(self) -> int:
        return len(self.u_p_ids)

    def is_long_root(self) -> bool:
        return self.rs.is_long(self.rs.simple_root(self.k))

    def in_p(self, root_id: int) -> bool:
        """True for roots of ``P``: those with ``a_k`` coefficient >= 0."""
        return self.rs.root(root_id).coefficient(self.k) >= 0

    def in_p_minus(self, root_id: int) -> bool:
        return self.rs.root(root_id).coefficient(self.k) <= 0


@frozen(order=True)
class SchubertVariety:
    diagram: MarkedDiagram
    w: WeylElement

    def __attrs_post_init__(self) -> None:
        require_minimal(self.diagram.rs, self.w, self.diagram.k)

    @property
    def dimension(self) -> int:
        return self.w.length


def is_long_root_diagram(d: MarkedDiagram) -> bool:
    return d.is_long_root()


@frozen
class OppositeVariety:
    """``T(w)``, the closure of ``B^- . x_w``."""

    diagram: MarkedDiagram
    w: WeylElement
    dimension: int
    stabilizer: FrozenSet[int]
    tangent_roots: FrozenSet[Root]


@frozen
class SubdiagramDescriptor:
    nodes: FrozenSet[int] = field(converter=frozenset, factory=frozenset)
    exceptional_tag: Optional[str] = None

    @property
    def is_exceptional(self) -> bool:
        return self.exceptional_tag is not None

    def __str__(self) -> str:
        if self.exceptional_tag:
            return f"exc={self.exceptional_tag}"
        return "sub=" + ",".join(str(i) for i in sorted(self.nodes))


def is_connected(rs: RootSystem, nodes: FrozenSet[int]) -> bool:
    if not nodes:
        return False
    start = min(nodes)
    seen = {start}
    queue = deque([start])
    while queue:
        i = queue.popleft()
        for j in rs.neighbors[i] & nodes:
            if j not in seen:
                seen.add(j)
                queue.append(j)
    return seen == set(nodes)


def subdiagram(
    d: MarkedDiagram, nodes: Sequence[int]
) -> SubdiagramDescriptor:
    chosen = frozenset(nodes)
    for i in chosen:
        d.rs.check_simple_index(i)
    if d.k not in chosen:
        raise DescriptorError(
            f"Subdiagram {sorted(chosen)} does not contain the marked "
            f"node {d.k} of {d}"
        )
    if not is_connected(d.rs, chosen):
        raise DescriptorError(
            f"Subdiagram {sorted(chosen)} is not connected in {d.type}"
        )
    return SubdiagramDescriptor(chosen)


def exceptional(tag: str) -> SubdiagramDescriptor:
    if not tag:
        raise DescriptorError("Empty exceptional tag")
    return SubdiagramDescriptor(frozenset(), tag)


def connected_subdiagrams(d: MarkedDiagram) -> List[SubdiagramDescriptor]:
    """Every connected node set containing ``k``, by size then nodes."""
    others = sorted(d.levi_nodes)
    found = []
    for size in range(len(others) + 1):
        for extra in combinations(others, size):
            nodes = frozenset(extra) | {d.k}
            if is_connected(d.rs, nodes):
                found.append(SubdiagramDescriptor(nodes))
    return found


def schubert_from_word(
    d: MarkedDiagram, word: Sequence[int]
) -> SchubertVariety:
    return SchubertVariety(d, from_word(d.rs, word))


def stabilizer_levi_set(sv: SchubertVariety) -> FrozenSet[int]:
    d = sv.diagram
    rs = d.rs
    inv = sv.w.inverse()
    found = set()
    for i in d.nodes:
        image = inv.apply(rs.id_of(rs.simple_root(i)))
        in_levi = rs.root(image).coefficient(d.k) == 0
        if not rs.is_positive_id(image) or in_levi:
            found.add(i)
    return frozenset(found)


def tangent_root_ids(sv: SchubertVariety) -> FrozenSet[int]:
    return inversion_ids(sv.w.inverse())


def tangent_roots(sv: SchubertVariety) -> FrozenSet[Root]:
    """Roots of ``U`` intersected with ``w(U_P^-)``: the chart ``B . x_w``."""
    rs = sv.diagram.rs
    return frozenset(rs.root(i) for i in tangent_root_ids(sv))


def translated_tangent_roots(sv: SchubertVariety) -> FrozenSet[Root]:
    """``w^-1`` applied to the tangent roots, i.e. ``-Delta(w)``."""
    rs = sv.diagram.rs
    inv = sv.w.inverse()
    return frozenset(rs.root(inv.apply(i)) for i in tangent_root_ids(sv))


def tangent_roots_subdiagram(
    d: MarkedDiagram, sd: SubdiagramDescriptor
) -> FrozenSet[Root]:
    if sd.is_exceptional:
        raise DescriptorError(
            f"'{sd.exceptional_tag}' has no subdiagram tangent description"
        )
    rs = d.rs
    return frozenset(
        -rs.root(i) for i in d.u_p_ids if rs.root(i).support <= sd.nodes
    )


def lambda_adjacent(
    d: MarkedDiagram, sd: SubdiagramDescriptor
) -> FrozenSet[int]:
    rs = d.rs
    adjacent = set()
    for i in sd.nodes:
        adjacent |= rs.neighbors[i]
    return frozenset(adjacent - sd.nodes)


def subdiagram_to_weyl(
    d: MarkedDiagram, sd: SubdiagramDescriptor
) -> SchubertVariety:
    rs = d.rs
    gens = [simple_reflection(rs, i) for i in sorted(sd.nodes)]
    best = identity(rs)
    seen = {best}
    queue = deque([best])
    while queue:
        v = queue.popleft()
        for s in gens:
            w = s * v
            if w in seen or w.length != v.length + 1:
                continue
            if is_minimal(rs, w, d.k):
                seen.add(w)
                queue.append(w)
                if w.length > best.length:
                    best = w
    sv = SchubertVariety(d, best)
    target = tangent_roots_subdiagram(d, sd)
    if translated_tangent_roots(sv) != target:
        raise RealizationError(
            f"No Schubert cell of {d} realizes subdiagram {sd}"
        )
    return sv


@frozen
class BruhatTable:
    """
    :ivar elements: ``W^P`` in non-decreasing length order.

    :ivar down: For each element, its lower covers as
        ``(index, Chevalley coefficient)`` pairs.

    :ivar up: For each element, the indices of its upper covers.

    :ivar degrees: Degree of each Schubert variety in the minimal
        embedding.
    """

    diagram: MarkedDiagram
    elements: Tuple[WeylElement, ...]
    down: Tuple[Tuple[Tuple[int, int], ...], ...]
    up: Tuple[Tuple[int, ...], ...]
    degrees: Tuple[int, ...]
    position: Dict[WeylElement, int] = field(eq=False, repr=False)

    def index(self, w: WeylElement) -> int:
        return self.position[w]

    def lower_interval(self, w: WeylElement) -> List[int]:
        start = self.position[w]
        seen = {start}
        queue = deque([start])
        while queue:
            n = queue.popleft()
            for m, _ in self.down[n]:
                if m not in seen:
                    seen.add(m)
                    queue.append(m)
        return sorted(seen)

    def leq(self, v: WeylElement, w: WeylElement) -> bool:
        return self.position[v] in self.lower_interval(w)


def _chevalley_covers(
    d: MarkedDiagram, elements: Sequence[WeylElement]
) -> List[Tuple[int, int, int]]:
    rs = d.rs
    position = {w: n for n, w in enumerate(elements)}
    reflections = [
        (reflection(rs, beta), rs.coroot(beta)[d.k - 1])
        for beta in rs.positive_roots
    ]
    covers = []
    for n, v in enumerate(elements):
        for s_beta, coefficient in reflections:
            w = v * s_beta
            m = position.get(w)
            if m is not None and w.length == v.length + 1:
                covers.append((n, m, coefficient))
    return covers


def _assemble(
    d: MarkedDiagram,
    elements: Sequence[WeylElement],
    covers: Sequence[Tuple[int, int, int]],
) -> BruhatTable:
    down: List[List[Tuple[int, int]]] = [[] for _ in elements]
    up: List[List[int]] = [[] for _ in elements]
    for lower, upper, coefficient in sorted(covers):
        down[upper].append((lower, coefficient))
        up[lower].append(upper)
    degrees = [0] * len(elements)
    for n in range(len(elements)):
        if not down[n]:
            degrees[n] = 1
        else:
            degrees[n] = sum(c * degrees[m] for m, c in down[n])
    return BruhatTable(
        diagram=d,
        elements=tuple(elements),
        down=tuple(tuple(x) for x in down),
        up=tuple(tuple(x) for x in up),
        degrees=tuple(degrees),
        position={w: n for n, w in enumerate(elements)},
    )


def _from_arrays(
    d: MarkedDiagram, arrays: Dict[str, np.ndarray]
) -> Optional[BruhatTable]:
    perms = arrays.get("perms")
    covers = arrays.get("covers")
    if perms is None or covers is None:
        return None
    if perms.ndim != 2 or perms.shape[1] != len(d.rs.roots):
        return None
    elements = [WeylElement(tuple(int(x) for x in row)) for row in perms]
    cover_list = [
        (int(lower), int(upper), int(c))
        for lower, upper, c in covers.reshape(-1, 3)
    ]
    return _assemble(d, elements, cover_list)


def _to_arrays(table: BruhatTable) -> Dict[str, np.ndarray]:
    covers = [
        (lower, upper, c)
        for upper, row in enumerate(table.down)
        for lower, c in row
    ]
    return {
        "perms": np.array([w.perm for w in table.elements], dtype=np.int32),
        "covers": np.array(covers, dtype=np.int32).reshape(-1, 3),
    }


_tables: Dict[MarkedDiagram, BruhatTable] = {}
_lock = threading.Lock()


def bruhat_table(d: MarkedDiagram) -> BruhatTable:
    with _lock:
        table = _tables.get(d)
        if table is not None:
            return table
        arrays = cache.load(str(d.type), d.k)
        table = _from_arrays(d, arrays) if arrays else None
        if table is None:
            elements = minimal_reps(d.rs, d.k)
            table = _assemble(d, elements, _chevalley_covers(d, elements))
            cache.store(str(d.type), d.k, _to_arrays(table))
        logging.debug(
            "Bruhat table for %s: %i elements", d, len(table.elements)
        )
        _tables[d] = table
        return table


def clear_tables() -> None:
    with _lock:
        _tables.clear()


def poincare_polynomial(sv: SchubertVariety) -> List[int]:
    table = bruhat_table(sv.diagram)
    coefficients = [0] * (sv.dimension + 1)
    for n in table.lower_interval(sv.w):
        coefficients[table.elements[n].length] += 1
    return coefficients


def is_rationally_smooth(sv: SchubertVariety) -> bool:
    coefficients = poincare_polynomial(sv)
    return coefficients == coefficients[::-1]


def degree(sv: SchubertVariety) -> int:
    table = bruhat_table(sv.diagram)
    return table.degrees[table.index(sv.w)]


def is_linear(sv: SchubertVariety) -> bool:
    return degree(sv) == 1


def is_maximal_linear(sv: SchubertVariety) -> bool:
    if not is_linear(sv):
        return False
    return not any(is_linear(v) for v in upper_covers(sv))


def upper_covers(sv: SchubertVariety) -> List[SchubertVariety]:
    table = bruhat_table(sv.diagram)
    return [
        SchubertVariety(sv.diagram, table.elements[m])
        for m in table.up[table.index(sv.w)]
    ]


def opposite(sv: SchubertVariety) -> OppositeVariety:
    d = sv.diagram
    rs = d.rs
    tangent = set()
    for i in d.u_p_ids:
        image = sv.w.apply(rs.negate_id(i))
        if not rs.is_positive_id(image):
            tangent.add(rs.root(image))
    return OppositeVariety(
        diagram=d,
        w=sv.w,
        dimension=d.dimension - sv.dimension,
        stabilizer=stabilizer_levi_set(sv),
        tangent_roots=frozenset(tangent),
    )


@lru_cache(maxsize=None)
def full_space(d: MarkedDiagram) -> SchubertVariety:
    return SchubertVariety(d, longest_minimal_rep(d.rs, d.k))
