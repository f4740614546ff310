"""Gauss-code import/export.

Tokens are ``O<k><s>`` / ``U<k><s>`` with sign ``s`` in ``+``, ``-``.  A sign
may also be ``?`` or omitted, in which case both local rotations are tried.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Sequence

from .diagram import Diagram
from .errors import NotRealizableError, ParseError, ValidationError

__all__ = ["GaussToken", "format_gauss", "gauss_of", "parse_gauss", "parse_gauss_tokens"]

_TOKEN = re.compile(r"\s*([OU])(\d+)([+\-?]?)(?=\s|$)")


@dataclass(frozen=True)
class GaussToken:
    crossing: int
    over: bool
    sign: int | None  # +1, -1 or unknown

    def __str__(self):
        s = {1: "+", -1: "-", None: "?"}[self.sign]
        return f"{'O' if self.over else 'U'}{self.crossing}{s}"


def parse_gauss_tokens(text: str) -> list[GaussToken]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            while text[pos].isspace():
                pos += 1
            raise ParseError(f"bad Gauss token {text[pos:].split()[0]!r}", pos)
        sign = {"+": 1, "-": -1, "?": None, "": None}[m.group(3)]
        tokens.append(GaussToken(int(m.group(2)), m.group(1) == "O", sign))
        pos = m.end()
    return tokens


def format_gauss(tokens: Sequence[GaussToken]) -> str:
    return " ".join(str(t) for t in tokens)


def _check_well_formed(tokens: Sequence[GaussToken]) -> dict[int, tuple[int, int, int | None]]:
    seen: dict[int, list[tuple[int, GaussToken]]] = {}
    for p, tok in enumerate(tokens):
        seen.setdefault(tok.crossing, []).append((p, tok))
    info = {}
    for cid, uses in seen.items():
        if len(uses) != 2:
            raise ParseError(f"crossing {cid} appears {len(uses)} times, expected 2")
        (p1, t1), (p2, t2) = uses
        if t1.over == t2.over:
            raise ParseError(f"crossing {cid} needs one O and one U passage")
        if t1.sign is not None and t2.sign is not None and t1.sign != t2.sign:
            raise ParseError(f"crossing {cid} has disagreeing signs")
        sign = t1.sign if t1.sign is not None else t2.sign
        over_p, under_p = (p1, p2) if t1.over else (p2, p1)
        info[cid] = (over_p, under_p, sign)
    return info


def parse_gauss(code: str | Sequence[GaussToken], name: str | None = None,
                max_unknown: int = 16) -> Diagram:
    """Realize a Gauss code as a planar diagram.

    Signs fix the local rotation at each crossing; unknown signs are searched
    with ``+`` before ``-`` in crossing-id order, and the first candidate that
    passes the sphericity check is returned.
    """
    tokens = parse_gauss_tokens(code) if isinstance(code, str) else list(code)
    if not tokens:
        return Diagram((), name=name)
    info = _check_well_formed(tokens)
    m = len(tokens)
    ids = sorted(info)

    def incoming(p):
        return p + 1

    def outgoing(p):
        return (p + 1) % m + 1

    unknown = [cid for cid in ids if info[cid][2] is None]
    if len(unknown) > max_unknown:
        raise ParseError(f"{len(unknown)} unsigned crossings exceed the search limit {max_unknown}")

    for choice in itertools.product((1, -1), repeat=len(unknown)):
        signs = dict(zip(unknown, choice))
        codes = []
        for cid in ids:
            over_p, under_p, sign = info[cid]
            sign = signs.get(cid, sign)
            uin, uout = incoming(under_p), outgoing(under_p)
            oin, oout = incoming(over_p), outgoing(over_p)
            codes.append((uin, oout, uout, oin) if sign > 0 else (uin, oin, uout, oout))
        try:
            return Diagram(tuple(codes), name=name)
        except ValidationError:
            continue
    raise NotRealizableError("Gauss code is not realizable by a planar diagram")


def gauss_of(diagram: Diagram) -> list[GaussToken]:
    """Passages along the knot starting at the head of arc 1; ids are index+1."""
    tokens = []
    for arc in range(1, 2 * diagram.n_crossings + 1):
        dart = diagram.head_dart(arc)
        c, k = divmod(dart, 4)
        tokens.append(GaussToken(c + 1, k != 0, diagram.sign(c)))
    return tokens
