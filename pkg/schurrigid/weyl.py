# -*- coding: utf-8 -*-
"""
Weyl group elements as permutations of the root set.

An element ``w`` is stored as the tuple ``perm`` with ``perm[i] = id(w(r_i))``
over all ``2N`` root ids of its root system.  Composition and equality are
therefore tuple operations; words are only used for input and display.
"""
from __future__ import annotations

import logging
from collections import deque
from functools import lru_cache
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    List,
    Optional,
    Sequence,
    Tuple,
)

from attrs import field, frozen

from schurrigid import MAX_GROUP_ORDER
from schurrigid.errors import (
    EnumerationLimitError,
    IndexOutOfRangeError,
    NotMinimalError,
    WordError,
)
from schurrigid.root_system import Root, RootSystem
from schurrigid.util import parse_index_list


@frozen(order=True)
class WeylElement:
    perm: Tuple[int, ...] = field(converter=tuple)

    @property
    def num_positive(self) -> int:
        return len(self.perm) // 2

    def __mul__(self, other: WeylElement) -> WeylElement:
        return WeylElement(tuple(self.perm[i] for i in other.perm))

    def inverse(self) -> WeylElement:
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return WeylElement(tuple(inv))

    def apply(self, root_id: int) -> int:
        return self.perm[root_id]

    def sends_negative(self, root_id: int) -> bool:
        return self.perm[root_id] >= self.num_positive

    @property
    def length(self) -> int:
        n = self.num_positive
        return sum(1 for i in range(n) if self.perm[i] >= n)

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.perm))

    def one_line(self) -> str:
        """The images of the positive-root ids, space separated."""
        return " ".join(str(i) for i in self.perm[: self.num_positive])


@frozen
class ParabolicSubset:
    roots: FrozenSet[int] = field(converter=frozenset)

    @classmethod
    def of(cls, rs: RootSystem, nodes: Iterable[int]) -> ParabolicSubset:
        for i in nodes:
            rs.check_simple_index(i)
        return cls(frozenset(nodes))

    @classmethod
    def complement_of(cls, rs: RootSystem, k: int) -> ParabolicSubset:
        rs.check_simple_index(k)
        return cls(frozenset(range(1, rs.rank + 1)) - {k})

    def levi_ids(self, rs: RootSystem) -> Tuple[int, ...]:
        return rs.levi_ids(self.roots)

    def __str__(self) -> str:
        return ",".join(str(i) for i in sorted(self.roots))


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(tuple(range(len(rs.roots))))


@lru_cache(maxsize=None)
def simple_reflections(rs: RootSystem) -> Tuple[WeylElement, ...]:
    gens = []
    for j in range(1, rs.rank + 1):
        alpha = rs.simple_root(j)
        gens.append(
            WeylElement(
                tuple(rs.id_of(rs.reflect(beta, alpha)) for beta in rs.roots)
            )
        )
    return tuple(gens)


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    rs.check_simple_index(i)
    return simple_reflections(rs)[i - 1]


def reflection(rs: RootSystem, beta: Root) -> WeylElement:
    rs.id_of(beta)
    return WeylElement(
        tuple(rs.id_of(rs.reflect(gamma, beta)) for gamma in rs.roots)
    )


def from_word(rs: RootSystem, word: Sequence[int]) -> WeylElement:
    w = identity(rs)
    gens = simple_reflections(rs)
    for i in word:
        if not 1 <= i <= rs.rank:
            raise IndexOutOfRangeError(
                f"Word letter {i} out of range 1..{rs.rank} "
                f"for type {rs.type}"
            )
        w = w * gens[i - 1]
    return w


def parse_word(text: str) -> Tuple[int, ...]:
    try:
        return parse_index_list(text) if text.strip() else ()
    except ValueError as e:
        raise WordError(f"Malformed word '{text}': {e}") from e


def format_word(word: Sequence[int]) -> str:
    return " ".join(str(i) for i in word)


def length(w: WeylElement) -> int:
    return w.length


def inversion_ids(w: WeylElement) -> FrozenSet[int]:
    n = w.num_positive
    return frozenset(i for i in range(n) if w.perm[i] >= n)


def inversion_set(rs: RootSystem, w: WeylElement) -> FrozenSet[Root]:
    return frozenset(rs.root(i) for i in inversion_ids(w))


def left_descents(rs: RootSystem, w: WeylElement) -> List[int]:
    inv = w.inverse()
    return [
        i
        for i in range(1, rs.rank + 1)
        if inv.sends_negative(rs.id_of(rs.simple_root(i)))
    ]


def right_descents(rs: RootSystem, w: WeylElement) -> List[int]:
    return [
        i
        for i in range(1, rs.rank + 1)
        if w.sends_negative(rs.id_of(rs.simple_root(i)))
    ]


def reduced_word(rs: RootSystem, w: WeylElement) -> Tuple[int, ...]:
    word = []
    gens = simple_reflections(rs)
    while not w.is_identity:
        i = left_descents(rs, w)[0]
        word.append(i)
        w = gens[i - 1] * w
    return tuple(word)


def is_minimal(rs: RootSystem, w: WeylElement, k: int) -> bool:
    """True iff ``w`` is the minimal representative of ``w W_P``."""
    rs.check_simple_index(k)
    return set(right_descents(rs, w)) <= {k}


def minimal_representative(
    rs: RootSystem, w: WeylElement, k: int
) -> WeylElement:
    """The shortest element of the coset ``w W_P``."""
    gens = simple_reflections(rs)
    while True:
        descents = [i for i in right_descents(rs, w) if i != k]
        if not descents:
            return w
        w = w * gens[descents[0] - 1]


def require_minimal(rs: RootSystem, w: WeylElement, k: int) -> WeylElement:
    if not is_minimal(rs, w, k):
        raise NotMinimalError(
            f"[{format_word(reduced_word(rs, w))}] is not a minimal coset "
            f"representative for ({rs.type}, a{k})"
        )
    return w


def group_order(rs: RootSystem) -> int:
    return rs.type.weyl_group_order


def enumerate_group(
    rs: RootSystem, limit: Optional[int] = None
) -> List[WeylElement]:
    limit = MAX_GROUP_ORDER if limit is None else limit
    order = group_order(rs)
    if order > limit:
        raise EnumerationLimitError(
            f"|W({rs.type})| = {order} exceeds the enumeration limit {limit}"
        )
    start = identity(rs)
    gens = simple_reflections(rs)
    seen = {start}
    elements = [start]
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for s in gens:
            ws = w * s
            if ws not in seen:
                seen.add(ws)
                elements.append(ws)
                queue.append(ws)
    logging.debug("Enumerated %i elements of W(%s)", len(elements), rs.type)
    return elements


def longest_element(rs: RootSystem) -> WeylElement:
    # w0 maps every positive root to a negative one; build it greedily.
    w = identity(rs)
    gens = simple_reflections(rs)
    while True:
        ascents = [
            s for s in gens if (s * w).length == w.length + 1
        ]  # left ascents
        if not ascents:
            return w
        w = ascents[0] * w


@lru_cache(maxsize=None)
def _minimal_reps(rs: RootSystem, k: int) -> Tuple[WeylElement, ...]:
    gens = simple_reflections(rs)
    start = identity(rs)
    seen = {start}
    reps = [start]
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for s in gens:
            w = s * v
            if w in seen or w.length != v.length + 1:
                continue
            if is_minimal(rs, w, k):
                seen.add(w)
                reps.append(w)
                queue.append(w)
                if len(reps) > MAX_GROUP_ORDER:
                    raise EnumerationLimitError(
                        f"|W^P| for ({rs.type}, a{k}) exceeds the "
                        f"enumeration limit {MAX_GROUP_ORDER}"
                    )
    return tuple(reps)


def minimal_reps(rs: RootSystem, marked: int) -> List[WeylElement]:
    rs.check_simple_index(marked)
    return list(_minimal_reps(rs, marked))


def longest_minimal_rep(rs: RootSystem, k: int) -> WeylElement:
    return max(_minimal_reps(rs, k), key=lambda w: w.length)


def parabolic_order(rs: RootSystem, nodes: FrozenSet[int]) -> int:
    """Order of the subgroup generated by the reflections in ``nodes``."""
    gens = [simple_reflection(rs, i) for i in sorted(nodes)]
    start = identity(rs)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for s in gens:
            ws = w * s
            if ws not in seen:
                seen.add(ws)
                queue.append(ws)
    return len(seen)


def bruhat_leq(rs: RootSystem, v: WeylElement, w: WeylElement) -> bool:
    gens = simple_reflections(rs)
    while True:
        if v.length > w.length:
            return False
        if w.is_identity:
            return v.is_identity
        s = gens[left_descents(rs, w)[0] - 1]
        sv = s * v
        if sv.length < v.length:
            v = sv
        w = s * w


def double_cosets(
    rs: RootSystem, levi: ParabolicSubset, k: int
) -> List[Tuple[WeylElement, Tuple[WeylElement, ...]]]:
    """
    Partition W^P into the classes of ``W_I \\ W / W_P``.

    Returns ``(minimal representative, members)`` pairs; classes are ordered
    by their representative's position in ``minimal_reps``.
    """
    reps = _minimal_reps(rs, k)
    position: Dict[WeylElement, int] = {w: n for n, w in enumerate(reps)}
    gens = [simple_reflection(rs, i) for i in sorted(levi.roots)]
    classes = []
    assigned: Dict[WeylElement, int] = {}
    for w in reps:
        if w in assigned:
            continue
        members = [w]
        assigned[w] = len(classes)
        queue = deque([w])
        while queue:
            sigma = queue.popleft()
            for s in gens:
                image = s * sigma
                if image in position and image not in assigned:
                    assigned[image] = len(classes)
                    members.append(image)
                    queue.append(image)
        members.sort(key=lambda x: position[x])
        rep = min(members, key=lambda x: (x.length, position[x]))
        classes.append((rep, tuple(members)))
    return classes


def double_coset_min_reps(
    rs: RootSystem, levi: ParabolicSubset, marked: int
) -> List[WeylElement]:
    return [rep for rep, _ in double_cosets(rs, levi, marked)]
