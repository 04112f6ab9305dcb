# -*- coding: utf-8 -*-
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, List, Tuple, Union

RATIONAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


def to_bool(s: str) -> bool:
    if s.lower() in ("false", "f", "no", "n", "off", "0", "none", ""):
        return False
    return True


def parse_index_list(text: str) -> Tuple[int, ...]:
    """Parse "1,2,3" (or "1 2 3") into a tuple of positive integers.

    Raises ValueError naming the first token that is not a positive integer.
    """
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    indices = []
    for token in tokens:
        if not token.isdigit() or int(token) < 1:
            raise ValueError(f"'{token}' is not a positive integer index")
        indices.append(int(token))
    return tuple(indices)


def format_index_list(indices: Iterable[int]) -> str:
    return ",".join(str(i) for i in sorted(indices))


def parse_rational(text: Union[str, int]) -> Fraction:
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"'{text}' is not a rational string")
    match = RATIONAL_RE.match(text)
    if not match:
        raise ValueError(f"'{text}' is not a rational of the form p/q")
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ValueError(f"'{text}' has a zero denominator")
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_polynomial(coefficients: List[int], var: str = "q") -> str:
    terms = []
    for power, c in enumerate(coefficients):
        if not c:
            continue
        if power == 0:
            terms.append(str(c))
        elif power == 1:
            terms.append(f"{'' if c == 1 else c}{var}")
        else:
            terms.append(f"{'' if c == 1 else c}{var}^{power}")
    return " + ".join(terms) or "0"
