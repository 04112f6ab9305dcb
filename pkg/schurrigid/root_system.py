# -*- coding: utf-8 -*-
"""
Finite root systems of simple type, in the simple-root basis.

Simple roots are numbered as in Bourbaki.  Internally rows and columns of the
Cartan matrix are 0-based; every public function that takes a *simple index*
(a node of the Dynkin diagram) expects the 1-based label.
"""
from __future__ import annotations

import logging
import re
from collections import deque
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np
from attrs import field, frozen

from schurrigid.errors import (
    IndexOutOfRangeError,
    InvalidTypeError,
    NotARootError,
)

# family -> (minimum rank, maximum rank or None)
RANK_BOUNDS: Dict[str, Tuple[int, Optional[int]]] = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


@frozen(order=True)
class SimpleType:
    family: str
    rank: int

    def __attrs_post_init__(self) -> None:
        bounds = RANK_BOUNDS.get(self.family)
        if bounds is None:
            raise InvalidTypeError(f"Unknown family '{self.family}'")
        low, high = bounds
        if self.rank < low or (high is not None and self.rank > high):
            raise InvalidTypeError(
                f"Invalid rank {self.rank} for family {self.family}"
            )

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def num_positive_roots(self) -> int:
        n = self.rank
        return {
            "A": n * (n + 1) // 2,
            "B": n * n,
            "C": n * n,
            "D": n * (n - 1),
            "E": {6: 36, 7: 63, 8: 120}.get(n, 0),
            "F": 24,
            "G": 6,
        }[self.family]

    @property
    def weyl_group_order(self) -> int:
        n = self.rank
        if self.family == "A":
            return factorial(n + 1)
        if self.family in ("B", "C"):
            return 2**n * factorial(n)
        if self.family == "D":
            return 2 ** (n - 1) * factorial(n)
        return {
            "E6": 51840,
            "E7": 2903040,
            "E8": 696729600,
            "F4": 1152,
            "G2": 12,
        }[str(self)]


def parse_type(text: str) -> SimpleType:
    match = TYPE_RE.match(text)
    if not match:
        raise InvalidTypeError(f"'{text}' is not a type such as A3 or F4")
    return SimpleType(match.group(1).upper(), int(match.group(2)))


@frozen(order=True)
class Root:
    coeffs: Tuple[int, ...] = field(converter=tuple)

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    @property
    def support(self) -> FrozenSet[int]:
        return frozenset(i + 1 for i, c in enumerate(self.coeffs) if c)

    def coefficient(self, i: int) -> int:
        return self.coeffs[i - 1]

    def __neg__(self) -> Root:
        return Root(tuple(-c for c in self.coeffs))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs, start=1):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append(f"{sign}{mag}a{i}")
        text = "".join(terms)
        return text[1:] if text.startswith("+") else text


def _edges(family: str, n: int) -> List[Tuple[int, int]]:
    if family in ("A", "B", "C"):
        return [(i, i + 1) for i in range(n - 1)]
    if family == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if family == "E":
        return [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
    if family == "F":
        return [(0, 1), (1, 2), (2, 3)]
    return [(0, 1)]


def cartan_matrix(t: SimpleType) -> np.ndarray:
    """Return C with C[i, j] = <alpha_i, alpha_j^vee> (0-based)."""
    n = t.rank
    cartan = 2 * np.eye(n, dtype=np.int64)
    for i, j in _edges(t.family, n):
        cartan[i, j] = cartan[j, i] = -1
    if t.family == "B":
        cartan[n - 2, n - 1] = -2
    elif t.family == "C":
        cartan[n - 1, n - 2] = -2
    elif t.family == "F":
        cartan[1, 2] = -2
    elif t.family == "G":
        cartan[1, 0] = -3
    return cartan


def symmetrizer(cartan: np.ndarray) -> np.ndarray:
    """Half squared lengths of the simple roots, short roots scaled to 1."""
    n = cartan.shape[0]
    d: List[Optional[Fraction]] = [None] * n
    d[0] = Fraction(1)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(n):
            if j != i and cartan[i, j] and d[j] is None:
                d[j] = Fraction(int(cartan[j, i])) * d[i] / int(cartan[i, j])
                queue.append(j)
    shortest = min(x for x in d if x is not None)
    return np.array([int(x / shortest) for x in d], dtype=np.int64)


class RootSystem:
    """
    :ivar type: The simple type this root system was built from.

    :ivar cartan: Integer Cartan matrix, ``cartan[i, j] = <a_i, a_j^vee>``.

    :ivar positive_roots: Positive roots ordered by height, then by
        descending coefficient vector, so ``positive_roots[i - 1]`` is the
        simple root ``a_i``.

    :ivar roots: All roots; id ``i + N`` is the negative of id ``i``.
    """

    def __init__(self, t: SimpleType, positive_roots: Sequence[Root]) -> None:
        self.type = t
        self.rank = t.rank
        self.cartan = cartan_matrix(t)
        self.cartan.setflags(write=False)
        self.d = symmetrizer(self.cartan)
        self.positive_roots: Tuple[Root, ...] = tuple(positive_roots)
        self.num_positive = len(self.positive_roots)
        self.roots: Tuple[Root, ...] = self.positive_roots + tuple(
            -r for r in self.positive_roots
        )
        self.index: Dict[Tuple[int, ...], int] = {
            r.coeffs: i for i, r in enumerate(self.roots)
        }
        vectors = np.array([r.coeffs for r in self.roots], dtype=np.int64)
        gram = vectors @ (self.cartan * self.d[None, :]) @ vectors.T
        norms = np.diag(gram).copy()
        self.norms = norms
        self.pairings = (2 * gram) // norms[None, :]
        self.pairings.setflags(write=False)
        self.long_norm = int(norms.max())
        neighbors: Dict[int, FrozenSet[int]] = {}
        for i in range(self.rank):
            neighbors[i + 1] = frozenset(
                j + 1
                for j in range(self.rank)
                if j != i and self.cartan[i, j]
            )
        self.neighbors = neighbors

    def __repr__(self) -> str:
        return f"RootSystem({self.type})"

    def check_simple_index(self, i: int) -> int:
        if not 1 <= i <= self.rank:
            raise IndexOutOfRangeError(
                f"Simple index {i} out of range 1..{self.rank} "
                f"for type {self.type}"
            )
        return i

    def simple_root(self, i: int) -> Root:
        return self.positive_roots[self.check_simple_index(i) - 1]

    def id_of(self, root: Root) -> int:
        try:
            return self.index[root.coeffs]
        except KeyError as e:
            raise NotARootError(
                f"{root.coeffs} is not a root of {self.type}"
            ) from e

    def root(self, root_id: int) -> Root:
        return self.roots[root_id]

    def negate_id(self, root_id: int) -> int:
        return (root_id + self.num_positive) % (2 * self.num_positive)

    def is_positive_id(self, root_id: int) -> bool:
        return root_id < self.num_positive

    def pair(self, beta: Root, alpha: Root) -> int:
        return int(self.pairings[self.id_of(beta), self.id_of(alpha)])

    def pair_ids(self, beta_id: int, alpha_id: int) -> int:
        return int(self.pairings[beta_id, alpha_id])

    def reflect(self, beta: Root, alpha: Root) -> Root:
        c = self.pair(beta, alpha)
        return Root(
            tuple(b - c * a for b, a in zip(beta.coeffs, alpha.coeffs))
        )

    def norm(self, root: Root) -> int:
        return int(self.norms[self.id_of(root)])

    def is_long(self, root: Root) -> bool:
        return self.norm(root) == self.long_norm

    def coroot(self, root: Root) -> Tuple[int, ...]:
        """Coefficients of ``root^vee`` in the basis of simple coroots."""
        norm = self.norm(root)
        return tuple(
            2 * b * int(d) // norm for b, d in zip(root.coeffs, self.d)
        )

    @property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    def u_p_ids(self, k: int) -> Tuple[int, ...]:
        """Ids of positive roots with a positive ``a_k`` coefficient."""
        self.check_simple_index(k)
        return tuple(
            i
            for i, r in enumerate(self.positive_roots)
            if r.coefficient(k) > 0
        )

    def levi_ids(self, nodes: FrozenSet[int]) -> Tuple[int, ...]:
        """Ids of all roots (either sign) supported on ``nodes``."""
        return tuple(
            i for i, r in enumerate(self.roots) if r.support <= nodes
        )


def _simple_reflection(
    cartan: np.ndarray, coeffs: Tuple[int, ...], j: int
) -> Tuple[int, ...]:
    c = int(np.dot(coeffs, cartan[:, j]))
    return tuple(x - c if i == j else x for i, x in enumerate(coeffs))


def positive_root_closure(t: SimpleType) -> List[Root]:
    cartan = cartan_matrix(t)
    n = t.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        coeffs = queue.popleft()
        for j in range(n):
            image = _simple_reflection(cartan, coeffs, j)
            if min(image) >= 0 and image not in seen:
                seen.add(image)
                queue.append(image)
    ordered = sorted(seen, key=lambda c: (sum(c), tuple(-x for x in c)))
    return [Root(c) for c in ordered]


@lru_cache(maxsize=None)
def build(t: SimpleType) -> RootSystem:
    roots = positive_root_closure(t)
    if len(roots) != t.num_positive_roots:
        raise InvalidTypeError(
            f"Closure produced {len(roots)} positive roots for {t}, "
            f"expected {t.num_positive_roots}"
        )
    logging.debug("Built root system %s with %i positive roots", t, len(roots))
    return RootSystem(t, roots)


def pair(rs: RootSystem, beta: Root, alpha: Root) -> int:
    return rs.pair(beta, alpha)


def reflect(rs: RootSystem, beta: Root, alpha: Root) -> Root:
    return rs.reflect(beta, alpha)
