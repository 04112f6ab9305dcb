# -*- coding: utf-8 -*-
from __future__ import annotations

import argparse
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone
from typing import Callable, Dict, List, Optional, TextIO, Tuple

from schurrigid import APP_NAME, cache, settings
from schurrigid.address import (
    default_diagrams,
    expand_target,
    parse_address,
    parse_coweight,
    parse_diagram,
    parse_levi,
    s0_from_options,
)
from schurrigid.catalog import load_catalog
from schurrigid.errors import AddressError, DescriptorError
from schurrigid.report import (
    table,
    to_json,
    verdict_text,
    verdicts_table,
    verify_json,
    verify_table,
)
from schurrigid.rigidity import (
    S0,
    PairDescriptor,
    VerifyReport,
    classify,
    classify_all,
    schubert_rigidity,
    verify_catalog,
)
from schurrigid.root_system import RootSystem, build, parse_type
from schurrigid.schubert import (
    MarkedDiagram,
    SchubertVariety,
    bruhat_table,
    degree,
    full_space,
    is_maximal_linear,
    is_rationally_smooth,
    opposite,
    poincare_polynomial,
    stabilizer_levi_set,
    subdiagram_to_weyl,
    tangent_roots,
)
from schurrigid.torus import (
    bb_cells,
    canonical_cocharacter,
    chart,
    degenerate,
    dump_points,
    is_transverse_wrt_lambda,
    load_points,
)
from schurrigid.types import JSON
from schurrigid.util import format_index_list, format_polynomial
from schurrigid.weyl import (
    WeylElement,
    format_word,
    from_word,
    group_order,
    inversion_set,
    is_minimal,
    longest_element,
    minimal_reps,
    parse_word,
    reduced_word,
)

Output = Tuple[str, JSON]


class LogFormatter(logging.Formatter):
    def formatTime(
        self, record: logging.LogRecord, datefmt: Optional[str] = None
    ) -> str:
        return datetime.now(timezone.utc).isoformat()


def _joined(items: List[str]) -> str:
    return " ".join(items) or "-"


class Core:
    def __init__(
        self, args: argparse.Namespace, stream: Optional[TextIO] = None
    ) -> None:
        self.args = args
        self.stream = stream or sys.stdout
        self.initialize_logger(getattr(args, "debug", False))
        if getattr(args, "cache_dir", None):
            cache.configure(args.cache_dir)
        self.verbs: Dict[str, Callable[[], Output]] = {
            "roots": self.roots,
            "weyl": self.weyl,
            "schubert": self.schubert,
            "bb-cells": self.bb_cells,
            "degenerate": self.degenerate,
            "classify": self.classify,
            "catalog": self.catalog,
            "verify": self.verify,
        }
        self.failed = False

    @staticmethod
    def initialize_logger(debug: bool = False) -> None:
        handler = logging.StreamHandler(stream=sys.stderr)
        fmt = "%(asctime)s %(levelname)s %(funcName)s %(message)s"
        handler.setFormatter(LogFormatter(fmt=fmt))
        logger = logging.getLogger()
        for old in list(logger.handlers):
            if isinstance(old.formatter, LogFormatter):
                logger.removeHandler(old)
        logger.addHandler(handler)
        logger.setLevel(logging.DEBUG if debug else logging.WARNING)

    def _target(self) -> str:
        targets = self.args.targets
        if len(targets) != 1:
            raise AddressError(
                f"'{self.args.verb}' takes exactly one target, "
                f"got {len(targets)}"
            )
        return targets[0]

    def _pair_parts(self) -> Tuple[MarkedDiagram, Optional[S0]]:
        d, inline = parse_address(self._target())
        flagged = s0_from_options(
            d, self.args.w, self.args.sub, self.args.exc
        )
        if inline is not None and flagged is not None:
            raise AddressError("S_0 given both in the address and as a flag")
        return d, inline if inline is not None else flagged

    def _schubert_variety(self, d: MarkedDiagram) -> SchubertVariety:
        if self.args.w is None:
            raise AddressError(f"'{self.args.verb}' needs --w")
        return SchubertVariety(d, from_word(d.rs, parse_word(self.args.w)))

    def _levi(self) -> Tuple[int, ...]:
        if self.args.I is None:
            raise AddressError(f"'{self.args.verb}' needs --I")
        return tuple(parse_levi(self.args.I))

    def _diagrams(self) -> List[MarkedDiagram]:
        return [
            d for target in self.args.targets for d in expand_target(target)
        ]

    def _override(self) -> Optional[Tuple[int, ...]]:
        if self.args.coweight is None:
            return None
        return parse_coweight(self.args.coweight)

    def roots(self) -> Output:
        t = parse_type(self._target().split(":")[0])
        rs = build(t)
        rows = []
        data = []
        for i, r in enumerate(rs.positive_roots):
            kind = "long" if rs.is_long(r) else "short"
            rows.append((i, str(r), r.height, kind))
            data.append(
                {
                    "id": i,
                    "root": str(r),
                    "coeffs": list(r.coeffs),
                    "height": r.height,
                    "long": rs.is_long(r),
                }
            )
        text = table(("id", "root", "height", "length"), rows)
        text += f"{len(rows)} positive roots of {t}\n"
        return text, {
            "type": str(t),
            "positive_roots": data,
            "count": len(data),
            "weyl_group_order": group_order(rs),
            "highest_root": str(rs.highest_root),
        }

    @staticmethod
    def _element(rs: RootSystem, w: WeylElement) -> Dict[str, JSON]:
        word = reduced_word(rs, w)
        return {
            "word": format_word(word),
            "length": w.length,
            "inversions": sorted(str(r) for r in inversion_set(rs, w)),
            "one_line": w.one_line(),
        }

    def weyl(self) -> Output:
        target = self._target()
        rs = build(parse_type(target.split(":")[0]))
        if self.args.w is None:
            w0 = longest_element(rs)
            data: Dict[str, JSON] = {
                "type": str(rs.type),
                "order": group_order(rs),
                "longest": self._element(rs, w0),
            }
        else:
            w = from_word(rs, parse_word(self.args.w))
            data = {"type": str(rs.type), "element": self._element(rs, w)}
        if ":" in target:
            d = parse_diagram(target)
            data["diagram"] = str(d)
            data["coset_representatives"] = len(minimal_reps(rs, d.k))
            if self.args.w is not None:
                data["minimal"] = is_minimal(rs, w, d.k)
        lines = []
        for key, value in sorted(data.items()):
            if isinstance(value, dict):
                for sub, item in sorted(value.items()):
                    if isinstance(item, list):
                        item = _joined(item)
                    lines.append(f"{key}.{sub}: {item}")
            else:
                lines.append(f"{key}: {value}")
        return "\n".join(lines) + "\n", data

    def _variety_summary(self, sv: SchubertVariety) -> Dict[str, JSON]:
        rs = sv.diagram.rs
        return {
            "word": format_word(reduced_word(rs, sv.w)),
            "dimension": sv.dimension,
            "degree": degree(sv),
            "maximal_linear": is_maximal_linear(sv),
            "rationally_smooth": is_rationally_smooth(sv),
        }

    def schubert(self) -> Output:
        d, s0 = self._pair_parts()
        if s0 is None:
            table_ = bruhat_table(d)
            rows = [
                self._variety_summary(SchubertVariety(d, w))
                for w in table_.elements
            ]
            text = table(
                ("word", "dim", "degree", "max linear", "rat smooth"),
                (
                    (
                        r["word"] or "e",
                        r["dimension"],
                        r["degree"],
                        r["maximal_linear"],
                        r["rationally_smooth"],
                    )
                    for r in rows
                ),
            )
            ambient = full_space(d)
            text += (
                f"{d}: dimension {ambient.dimension}, "
                f"degree {degree(ambient)}\n"
            )
            return text, {
                "diagram": str(d),
                "dimension": ambient.dimension,
                "degree": degree(ambient),
                "schubert_varieties": rows,
            }
        if isinstance(s0, SchubertVariety):
            sv = s0
        else:
            if s0.is_exceptional:
                raise DescriptorError(
                    "Tagged entries have no Schubert cell to describe"
                )
            sv = subdiagram_to_weyl(d, s0)
        data = self._variety_summary(sv)
        data.update(
            diagram=str(d),
            poincare=format_polynomial(poincare_polynomial(sv)),
            stabilizer=format_index_list(stabilizer_levi_set(sv)),
            tangent_roots=sorted(str(r) for r in tangent_roots(sv)),
            opposite_dimension=opposite(sv).dimension,
        )
        if data["maximal_linear"]:
            pair = PairDescriptor(d, sv)
            data["schubert_rigidity"] = schubert_rigidity(pair)
        lines = []
        for key, value in sorted(data.items()):
            if isinstance(value, list):
                value = _joined(value)
            lines.append(f"{key}: {value}")
        return "\n".join(lines) + "\n", data

    def bb_cells(self) -> Output:
        d = parse_diagram(self._target())
        levi = self._levi()
        canonical_cocharacter(d.rs, levi, self._override())
        cells = bb_cells(d, levi)
        rows = []
        for cell in cells:
            rows.append(
                {
                    "rep": format_word(reduced_word(d.rs, cell.rep)),
                    "members": len(cell.members),
                    "sign": cell.sign,
                    "plus_dim": cell.plus_dim,
                    "minus_dim": cell.minus_dim,
                    "fixed_dim": cell.fixed_dim,
                }
            )
        text = table(
            ("rep", "members", "sign", "plus", "minus", "fixed"),
            (
                (
                    r["rep"] or "e",
                    r["members"],
                    r["sign"],
                    r["plus_dim"],
                    r["minus_dim"],
                    r["fixed_dim"],
                )
                for r in rows
            ),
        )
        return text, {
            "diagram": str(d),
            "I": format_index_list(levi),
            "cells": rows,
        }

    def degenerate(self) -> Output:
        d = parse_diagram(self._target())
        sv = self._schubert_variety(d)
        c = chart(
            d,
            sv.w,
            canonical_cocharacter(d.rs, self._levi(), self._override()),
        )
        if self.args.points is None:
            raise AddressError("'degenerate' needs --points")
        points = load_points(self.args.points)
        limits = degenerate(c, points)
        lines = []
        data = []
        for point, multiplicity in limits:
            coords = point.to_json()["coords"]  # type: ignore
            lines.append(
                f"{multiplicity}  "
                + " ".join(f"{r}={v}" for r, v in sorted(coords.items()))
            )
            data.append(
                {"limit": point.to_json(), "multiplicity": multiplicity}
            )
        if self.args.out is not None:
            dump_points(self.args.out, [point for point, _ in limits])
            logging.debug(
                "Wrote %i limit points to %s", len(limits), self.args.out
            )
        text = "".join(f"{line.rstrip()}\n" for line in lines)
        return text, {
            "diagram": str(d),
            "chart": {
                "roots": list(c.roots),
                "weights": list(c.weights),
                "tags": "".join(c.tags),
            },
            "limits": data,
            "transverse": is_transverse_wrt_lambda(c, points),
        }

    def classify(self) -> Output:
        d, s0 = self._pair_parts()
        if s0 is None:
            verdicts = classify_all(d)
            return verdicts_table(verdicts), {
                "diagram": str(d),
                "verdicts": [v.to_json() for v in verdicts],
            }
        verdict = classify(PairDescriptor(d, s0))
        return verdict_text(verdict), verdict.to_json()

    def catalog(self) -> Output:
        catalog = load_catalog()
        entries = list(catalog.entries)
        if self.args.targets:
            diagrams = self._diagrams()
            entries = [
                e for e in entries if any(e.matches(d) for d in diagrams)
            ]
        text = table(
            ("pair", "kind", "item", "source"),
            (
                (e.pair_id, e.kind, e.item or "-", e.source)
                for e in entries
            ),
        )
        return text, {
            "version": catalog.version,
            "entries": [e.to_json() for e in entries],
            "sources": dict(sorted(catalog.sources.items())),
        }

    def verify(self) -> Output:
        if self.args.targets:
            diagrams = self._diagrams()
        else:
            diagrams = default_diagrams(self.args.max_rank)
        jobs = max(1, self.args.jobs)
        logging.debug(
            "Verifying %i diagrams with %i jobs", len(diagrams), jobs
        )
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            reports: List[VerifyReport] = list(
                executor.map(verify_catalog, diagrams)
            )
        self.failed = any(not r.passed for r in reports)
        return verify_table(reports), verify_json(reports)

    def start(self) -> int:
        logging.debug("Core starting with args: %s", self.args)
        logging.debug("Loaded config.txt settings: %s", settings)
        text, data = self.verbs[self.args.verb]()
        if self.args.json:
            self.stream.write(to_json(data))
        else:
            self.stream.write(text)
        if self.failed:
            logging.warning("%s verify found failures", APP_NAME)
            return 1
        return 0
