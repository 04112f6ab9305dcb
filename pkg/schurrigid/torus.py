# -*- coding: utf-8 -*-
"""
One-parameter subgroups of the maximal torus and the cell structure they
induce on ``G/P``.

Points of a big cell ``w(U_P^-) . x_w`` are represented by their coordinates
``z_a``, one per root ``a`` in ``A = w(-Delta(U_P))``.  The action of ``t``
scales ``z_a`` by ``t ** <a, lambda>``, so everything here is exact.
"""
from __future__ import annotations

import json
import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from atomicwrites import atomic_write
from attrs import field, frozen

from schurrigid.errors import ChartError, ParabolicError, PointsFileError
from schurrigid.root_system import Root, RootSystem
from schurrigid.schubert import MarkedDiagram
from schurrigid.types import JSON
from schurrigid.util import format_rational, parse_rational
from schurrigid.weyl import (
    ParabolicSubset,
    WeylElement,
    double_cosets,
    require_minimal,
)

PLUS = "+"
ZERO = "0"
MINUS = "-"


@frozen
class Cocharacter:
    """``sum_j coeffs[j] * w_j^vee`` in the fundamental coweights."""

    coeffs: Tuple[int, ...] = field(converter=tuple)

    def weight(self, root: Root) -> int:
        return sum(c * a for c, a in zip(self.coeffs, root.coeffs))

    @property
    def levi(self) -> ParabolicSubset:
        return ParabolicSubset(
            i + 1 for i, c in enumerate(self.coeffs) if c == 0
        )


def canonical_cocharacter(
    rs: RootSystem,
    levi: Iterable[int],
    override: Optional[Sequence[int]] = None,
) -> Cocharacter:
    nodes = ParabolicSubset.of(rs, levi).roots
    if len(nodes) == rs.rank:
        raise ParabolicError(
            f"Levi set {sorted(nodes)} is every node of {rs.type}; "
            "the cocharacter would be zero"
        )
    if override is None:
        return Cocharacter(
            tuple(0 if j + 1 in nodes else 1 for j in range(rs.rank))
        )
    coeffs = tuple(override)
    if len(coeffs) != rs.rank or any(c < 0 for c in coeffs):
        raise ParabolicError(
            f"Cocharacter {list(coeffs)} is not a non-negative vector of "
            f"length {rs.rank}"
        )
    support = {j + 1 for j, c in enumerate(coeffs) if c}
    if support != set(range(1, rs.rank + 1)) - nodes:
        raise ParabolicError(
            f"Cocharacter {list(coeffs)} does not vanish exactly on "
            f"{sorted(nodes)}"
        )
    return Cocharacter(coeffs)


def weight(cocharacter: Cocharacter, root: Root) -> int:
    return cocharacter.weight(root)


@frozen
class BBCell:
    """
    One class ``[sigma]`` of ``W_I \\ W^P``.

    ``sign`` is ``+`` for the unique class whose ``P_I^-`` orbit is closed
    and ``-`` for every other class.
    """

    rep: WeylElement
    members: Tuple[WeylElement, ...]
    sign: str
    plus_dim: int
    minus_dim: int
    fixed_dim: int

    @property
    def plus_orbit_dim(self) -> int:
        return self.plus_dim + self.fixed_dim

    @property
    def minus_orbit_dim(self) -> int:
        return self.minus_dim + self.fixed_dim


def _orbit_dimensions(
    d: MarkedDiagram, levi: ParabolicSubset, sigma: WeylElement
) -> Tuple[int, int, int]:
    rs = d.rs
    moved = {sigma.apply(i) for i in range(len(rs.roots)) if d.in_p(i)}
    plus = minus = fixed = 0
    for i, root in enumerate(rs.roots):
        if i in moved:
            continue
        if root.support <= levi.roots:
            fixed += 1
        elif root.is_positive:
            plus += 1
        else:
            minus += 1
    return plus, minus, fixed


def bb_cells(d: MarkedDiagram, levi: Iterable[int]) -> List[BBCell]:
    rs = d.rs
    subset = ParabolicSubset.of(rs, levi)
    canonical_cocharacter(rs, subset.roots)
    cells = []
    for rep, members in double_cosets(rs, subset, d.k):
        plus, minus, fixed = _orbit_dimensions(d, subset, rep)
        cells.append(
            BBCell(
                rep=rep,
                members=members,
                sign=PLUS if minus == 0 else MINUS,
                plus_dim=plus,
                minus_dim=minus,
                fixed_dim=fixed,
            )
        )
    logging.debug(
        "%i Bialynicki-Birula cells on %s for I=%s", len(cells), d, subset
    )
    return cells


def closed_cell(cells: Sequence[BBCell]) -> BBCell:
    closed = [c for c in cells if c.minus_dim == 0]
    if len(closed) != 1:
        raise ChartError(f"Expected one closed orbit, found {len(closed)}")
    return closed[0]


def cell_of(cells: Sequence[BBCell], w: WeylElement) -> BBCell:
    for cell in cells:
        if w in cell.members:
            return cell
    raise ChartError("Element is not a minimal coset representative")


@frozen
class BigCellChart:
    """
    :ivar roots: Root ids of ``A``, ascending.

    :ivar weights: ``<a, lambda>`` for each root of ``A``, same order.

    :ivar tags: ``+``, ``0`` or ``-`` by the sign of the weight.
    """

    diagram: MarkedDiagram
    base: WeylElement
    cocharacter: Cocharacter
    roots: Tuple[int, ...]
    weights: Tuple[int, ...]
    tags: Tuple[str, ...]

    def weight_of(self, root_id: int) -> int:
        try:
            return self.weights[self.roots.index(root_id)]
        except ValueError as e:
            raise ChartError(
                f"Root id {root_id} is not a coordinate of this chart"
            ) from e

    def ids_tagged(self, tag: str) -> Tuple[int, ...]:
        return tuple(r for r, t in zip(self.roots, self.tags) if t == tag)


def chart(
    d: MarkedDiagram, w: WeylElement, cocharacter: Cocharacter
) -> BigCellChart:
    rs = d.rs
    require_minimal(rs, w, d.k)
    roots = tuple(sorted(w.apply(rs.negate_id(i)) for i in d.u_p_ids))
    weights = tuple(cocharacter.weight(rs.root(r)) for r in roots)
    if not any(weights):
        raise ChartError(
            "The cocharacter has weight zero on every coordinate"
        )
    tags = tuple(
        PLUS if n > 0 else MINUS if n < 0 else ZERO for n in weights
    )
    return BigCellChart(d, w, cocharacter, roots, weights, tags)


def _canonical_coords(
    coords: Mapping[int, Fraction]
) -> Tuple[Tuple[int, Fraction], ...]:
    return tuple(
        (int(r), Fraction(v)) for r, v in sorted(coords.items()) if v != 0
    )


@frozen
class RationalPoint:
    coords: Tuple[Tuple[int, Fraction], ...] = field(
        converter=_canonical_coords
    )

    def __getitem__(self, root_id: int) -> Fraction:
        return dict(self.coords).get(root_id, Fraction(0))

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self.coords)

    def to_json(self) -> JSON:
        return {
            "coords": {str(r): format_rational(v) for r, v in self.coords}
        }


def origin() -> RationalPoint:
    return RationalPoint({})


def _check_in_chart(c: BigCellChart, p: RationalPoint) -> None:
    for r, _ in p.coords:
        if r not in c.roots:
            raise ChartError(
                f"Point has a coordinate at root id {r}, outside the chart"
            )


def act(c: BigCellChart, t: Fraction, p: RationalPoint) -> RationalPoint:
    t = Fraction(t)
    if t == 0:
        raise ChartError("The torus parameter t must be nonzero")
    _check_in_chart(c, p)
    return RationalPoint({r: v * t ** c.weight_of(r) for r, v in p.coords})


def limit_at_infinity(c: BigCellChart, p: RationalPoint) -> RationalPoint:
    _check_in_chart(c, p)
    kept = {}
    for r, v in p.coords:
        n = c.weight_of(r)
        if n > 0:
            raise ChartError(
                f"Coordinate at root id {r} has positive weight {n}; "
                "the limit leaves the chart"
            )
        if n == 0:
            kept[r] = v
    return RationalPoint(kept)


def is_transverse_wrt_lambda(
    c: BigCellChart, points: Sequence[RationalPoint]
) -> bool:
    limits = [limit_at_infinity(c, p) for p in points]
    return len(set(points)) == len(points) and len(set(limits)) == len(
        limits
    )


def degenerate(
    c: BigCellChart, points: Sequence[RationalPoint]
) -> List[Tuple[RationalPoint, int]]:
    counts: Dict[RationalPoint, int] = {}
    for p in points:
        limit = limit_at_infinity(c, p)
        counts[limit] = counts.get(limit, 0) + 1
    return list(counts.items())


def point_from_json(data: JSON, position: int = 0) -> RationalPoint:
    if not isinstance(data, dict) or not isinstance(
        data.get("coords"), dict
    ):
        raise PointsFileError(
            f"Point {position} is not an object with a 'coords' mapping"
        )
    coords = {}
    for key, value in data["coords"].items():
        if not str(key).isdigit():
            raise PointsFileError(
                f"'{key}' is not a root id (point {position})"
            )
        try:
            coords[int(key)] = parse_rational(value)
        except ValueError as e:
            raise PointsFileError(f"{e} (point {position})") from e
    return RationalPoint(coords)


def load_points(path: str) -> List[RationalPoint]:
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise PointsFileError(f"Cannot read points file '{path}': {e}") from e
    if not text.strip():
        return []
    try:
        data = json.loads(text)
    except json.decoder.JSONDecodeError as e:
        raise PointsFileError(f"'{path}' is not valid JSON: {e}") from e
    if not isinstance(data, list):
        raise PointsFileError(f"'{path}' must hold a JSON list of points")
    return [point_from_json(item, n) for n, item in enumerate(data)]


def dump_points(path: str, points: Sequence[RationalPoint]) -> None:
    with atomic_write(path, mode="w", overwrite=True) as f:
        f.write(json.dumps([p.to_json() for p in points], indent=2))
