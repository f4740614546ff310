"""Oriented knot diagrams as planar combinatorial maps.

A diagram is a tuple of PD crossing codes ``(a, b, c, d)``: the four arc labels
met counterclockwise around the crossing, starting at the incoming
under-strand.  Arcs are numbered ``1..2n`` along the knot orientation.  The
rotation order at every crossing is the whole planar embedding; an explicit
``outer_face`` says which face is unbounded.

Darts are numbered ``4*c + k`` (crossing ``c``, slot ``k``); a dart points out
of its crossing along the arc held in that slot.  Faces are the orbits of
``rotate_ccw . twin``, which walks each face with the face on the right.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import ParseError, ValidationError

Crossing = tuple[int, int, int, int]

__all__ = [
    "Crossing",
    "Diagram",
    "Face",
    "assemble",
    "choose_outer_face",
    "flip_crossings",
    "from_json",
    "load_diagram",
    "parse_pd",
    "reflect",
    "serialize",
    "shift_labels",
    "to_json",
    "trace_faces",
]


@dataclass(frozen=True)
class Face:
    id: int
    darts: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.darts)


class _Map:
    """Dart-level structure of a validated PD code."""

    def __init__(self, crossings: Sequence[Crossing]):
        n = len(crossings)
        m = 2 * n
        self.n = n
        self.over_in: list[int] = []
        self.label: list[int] = []
        self.is_head: list[bool] = []
        self.head_dart: dict[int, int] = {}
        self.tail_dart: dict[int, int] = {}
        if n == 0:
            self.twin = []
            self.face_of: list[int] = []
            self.faces = [Face(0, ()), Face(1, ())]
            return

        for c, code in enumerate(crossings):
            a, b, cc, d = code
            if cc != a % m + 1:
                raise ValidationError(
                    f"under-strand arcs {a} -> {cc} are not knot-consecutive",
                    "under-strand continuity", c)
            self.over_in.append(_over_in_slot(code, m, c))

        for c, code in enumerate(crossings):
            heads = {0, self.over_in[c]}
            for k in range(4):
                lab = code[k]
                head = k in heads
                dart = 4 * c + k
                self.label.append(lab)
                self.is_head.append(head)
                table = self.head_dart if head else self.tail_dart
                if lab in table:
                    kind = "enters" if head else "leaves"
                    raise ValidationError(
                        f"arc {lab} {kind} two crossings (not a single component)",
                        "single component", c)
                table[lab] = dart

        for lab in range(1, m + 1):
            if lab not in self.head_dart or lab not in self.tail_dart:
                raise ValidationError(f"arc {lab} lacks an end", "single component")

        self.twin = [0] * (4 * n)
        for lab in range(1, m + 1):
            h, t = self.head_dart[lab], self.tail_dart[lab]
            self.twin[h] = t
            self.twin[t] = h

        self.face_of = [-1] * (4 * n)
        self.faces = []
        for start in range(4 * n):
            if self.face_of[start] >= 0:
                continue
            fid = len(self.faces)
            orbit = []
            d = start
            while self.face_of[d] < 0:
                self.face_of[d] = fid
                orbit.append(d)
                d = _rot(self.twin[d])
            self.faces.append(Face(fid, tuple(orbit)))

        if len(self.faces) != n + 2:
            raise ValidationError(
                f"V - E + F = {n} - {m} + {len(self.faces)} != 2 (non-planar rotation system)",
                "sphericity")


def _rot(dart: int) -> int:
    return dart - dart % 4 + (dart + 1) % 4


def _over_in_slot(code: Crossing, m: int, c: int) -> int:
    a, b, _, d = code
    b_to_d = b % m + 1 == d
    d_to_b = d % m + 1 == b
    if b_to_d and d_to_b:
        # two arcs only: slot 0's arc already ends here, so the over strand leaves on it
        if b == d:
            raise ValidationError("over-strand uses one arc twice", "over-strand continuity", c)
        return 3 if b == a else 1
    if b_to_d:
        return 1
    if d_to_b:
        return 3
    raise ValidationError(
        f"over-strand arcs {b}, {d} are not knot-consecutive", "over-strand continuity", c)


def _check_labels(crossings: Sequence[Crossing]) -> None:
    m = 2 * len(crossings)
    counts: dict[int, int] = {}
    for c, code in enumerate(crossings):
        if len(code) != 4:
            raise ValidationError("crossing code needs 4 arcs", "crossing arity", c)
        for lab in code:
            if isinstance(lab, bool) or not isinstance(lab, int) or not 1 <= lab <= m:
                raise ValidationError(f"arc label {lab!r} outside 1..{m}", "arc labels", c)
            counts[lab] = counts.get(lab, 0) + 1
    for lab in range(1, m + 1):
        if counts.get(lab, 0) != 2:
            raise ValidationError(
                f"arc {lab} appears {counts.get(lab, 0)} times, expected 2", "arc labels")


@dataclass(frozen=True)
class Diagram:
    """Immutable, validated oriented knot diagram.

    ``outer_face=None`` selects the default outer face (see
    :func:`choose_outer_face`).  ``name`` is descriptive only and does not take
    part in equality.
    """

    crossings: tuple[Crossing, ...]
    outer_face: int | None = None
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        crossings = tuple(tuple(code) for code in self.crossings)
        _check_labels(crossings)
        object.__setattr__(self, "crossings", crossings)
        mp = _Map(crossings)
        object.__setattr__(self, "_map", mp)
        if self.outer_face is None:
            object.__setattr__(self, "outer_face", _largest_face(mp.faces))
        elif not (isinstance(self.outer_face, int) and 0 <= self.outer_face < len(mp.faces)):
            raise ValidationError(
                f"outer face {self.outer_face!r} is not a traced face id "
                f"(0..{len(mp.faces) - 1})", "outer face")

    # -- basic counts -------------------------------------------------------
    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_arcs(self) -> int:
        return max(1, 2 * len(self.crossings))

    @property
    def is_round_unknot(self) -> bool:
        return not self.crossings

    # -- map structure ------------------------------------------------------
    @property
    def faces(self) -> list[Face]:
        return list(self._map.faces)

    def face_of(self, dart: int) -> int:
        return self._map.face_of[dart]

    def twin(self, dart: int) -> int:
        return self._map.twin[dart]

    def dart_label(self, dart: int) -> int:
        return self._map.label[dart]

    def dart_is_head(self, dart: int) -> bool:
        return self._map.is_head[dart]

    def head_dart(self, arc: int) -> int:
        """Dart where ``arc`` enters a crossing (pointing back along the arc)."""
        return self._map.head_dart[arc]

    def tail_dart(self, arc: int) -> int:
        """Dart where ``arc`` leaves a crossing."""
        return self._map.tail_dart[arc]

    def over_in_slot(self, c: int) -> int:
        return self._map.over_in[c]

    def sign(self, c: int) -> int:
        """+1 when the over-strand enters from slot 3 (right-handed), else -1."""
        return 1 if self._map.over_in[c] == 3 else -1

    def next_arc(self, arc: int) -> int:
        return arc % self.n_arcs + 1

    def right_face(self, arc: int) -> int:
        return self._map.face_of[self._map.tail_dart[arc]]

    def left_face(self, arc: int) -> int:
        return self._map.face_of[self._map.head_dart[arc]]

    @cached_property
    def face_sizes(self) -> tuple[int, ...]:
        return tuple(f.size for f in self._map.faces)

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<Diagram{tag} n={self.n_crossings} outer={self.outer_face}>"


def _largest_face(faces: Sequence[Face]) -> int:
    best = 0
    for f in faces:
        if f.size > faces[best].size:
            best = f.id
    return best


def trace_faces(diagram: Diagram) -> list[Face]:
    """Faces of the 4-valent plane map (2 empty faces for the round unknot)."""
    return diagram.faces


def choose_outer_face(diagram: Diagram) -> int:
    """Face with the most boundary darts; lowest id wins ties."""
    return _largest_face(diagram.faces)


# -- text formats -----------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<x>X\[\s*(?P<a>\d+)\s*,\s*(?P<b>\d+)\s*,\s*(?P<c>\d+)\s*,\s*(?P<d>\d+)\s*\])"
    r"|(?P<outer>outer\s*=\s*(?P<oid>\d+))"
    r"|(?P<unknot>unknot)"
    r")(?=\s|$)"
)


def _strip_comments(text: str) -> str:
    # keep offsets stable for error positions
    return re.sub(r"#[^\n]*", lambda m: " " * len(m.group(0)), text)


def parse_pd(text: str, outer_face: int | None = None, name: str | None = None) -> Diagram:
    """Parse PD text: ``X[a,b,c,d]`` terms plus optional ``outer=<id>`` / ``unknot``.

    An explicit ``outer_face`` argument overrides any directive in the text.
    """
    body = _strip_comments(text)
    pos = 0
    codes: list[Crossing] = []
    directive_outer = None
    unknot = False
    while True:
        while pos < len(body) and body[pos].isspace():
            pos += 1
        if pos >= len(body):
            break
        m = _TOKEN.match(body, pos)
        if m is None:
            snippet = body[pos:pos + 12].split()[0] if body[pos:].split() else body[pos:]
            raise ParseError(f"unexpected token {snippet!r}", pos)
        if m.group("x"):
            codes.append(tuple(int(m.group(g)) for g in "abcd"))
        elif m.group("outer"):
            if directive_outer is not None:
                raise ParseError("duplicate outer= directive", m.start("outer"))
            directive_outer = int(m.group("oid"))
        else:
            unknot = True
        pos = m.end()
    if unknot and codes:
        raise ParseError("'unknot' directive cannot be combined with crossings", 0)
    if not unknot and not codes:
        raise ParseError("empty diagram source (use 'unknot' for the round unknot)", 0)
    outer = outer_face if outer_face is not None else directive_outer
    return Diagram(tuple(codes), outer, name=name)


def serialize(diagram: Diagram) -> str:
    """PD text that :func:`parse_pd` maps back to an equal diagram."""
    if diagram.is_round_unknot:
        terms = "unknot"
    else:
        terms = " ".join("X[%d,%d,%d,%d]" % code for code in diagram.crossings)
    return f"{terms} outer={diagram.outer_face}"


def to_json(diagram: Diagram) -> dict:
    return {
        "crossings": [list(code) for code in diagram.crossings],
        "outer_face": diagram.outer_face,
        "name": diagram.name,
    }


def from_json(obj: Mapping | str) -> Diagram:
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
    if not isinstance(obj, Mapping) or "crossings" not in obj:
        raise ParseError("diagram JSON needs a 'crossings' list", 0)
    crossings = obj["crossings"]
    if not isinstance(crossings, list) or not all(isinstance(c, list) for c in crossings):
        raise ParseError("'crossings' must be a list of 4-element lists", 0)
    outer = obj.get("outer_face")
    if outer is not None and (isinstance(outer, bool) or not isinstance(outer, int)):
        raise ParseError("'outer_face' must be an integer or null", 0)
    return Diagram(tuple(tuple(c) for c in crossings), outer, name=obj.get("name"))


def load_diagram(text: str, fmt: str | None = None, outer_face: int | None = None,
                 name: str | None = None) -> Diagram:
    """Parse ``text`` as PD, JSON or Gauss code; ``fmt=None`` sniffs the format."""
    from .gauss import parse_gauss  # gauss imports this module

    if fmt is None:
        stripped = _strip_comments(text).strip()
        if stripped.startswith("{"):
            fmt = "json"
        elif re.fullmatch(r"(?:[OU]\d+[+\-?]?\s*)+", stripped):
            fmt = "gauss"
        else:
            fmt = "pd"
    if fmt == "json":
        d = from_json(text)
        if outer_face is not None:
            d = replace(d, outer_face=outer_face)
        if name is not None and d.name is None:
            d = replace(d, name=name)
        return d
    if fmt == "gauss":
        d = parse_gauss(text, name=name)
        return replace(d, outer_face=outer_face) if outer_face is not None else d
    if fmt == "pd":
        return parse_pd(text, outer_face=outer_face, name=name)
    raise ValueError(f"unknown diagram format {fmt!r}")


# -- whole-diagram symmetries -------------------------------------------------

def shift_labels(diagram: Diagram, k: int) -> Diagram:
    """Relabel arcs cyclically by ``k``; the embedding is unchanged."""
    if diagram.is_round_unknot:
        return diagram
    m = diagram.n_arcs
    codes = tuple(tuple((lab - 1 + k) % m + 1 for lab in code) for code in diagram.crossings)
    return Diagram(codes, diagram.outer_face, name=diagram.name)


def flip_crossings(diagram: Diagram) -> Diagram:
    """Swap over and under at every crossing (same plane curve, same faces)."""
    if diagram.is_round_unknot:
        return diagram
    codes = []
    offsets = []
    for c, code in enumerate(diagram.crossings):
        s = diagram.over_in_slot(c)
        codes.append(tuple(code[(s + j) % 4] for j in range(4)))
        offsets.append(s)
    flipped = Diagram(tuple(codes), 0, name=diagram.name)
    dart = diagram.faces[diagram.outer_face].darts[0]
    c, k = divmod(dart, 4)
    new_dart = 4 * c + (k - offsets[c]) % 4
    return replace(flipped, outer_face=flipped.face_of(new_dart))


def reflect(diagram: Diagram) -> Diagram:
    """Mirror the plane: rotation order reversed, crossing signs negated."""
    if diagram.is_round_unknot:
        return diagram
    codes = tuple((a, d, c, b) for a, b, c, d in diagram.crossings)
    mirrored = Diagram(codes, 0, name=diagram.name)
    # a face keeps its boundary arcs but is now traversed from the other side
    dart = diagram.faces[diagram.outer_face].darts[0]
    c, k = divmod(dart, 4)
    # right of dart (c,k) is the corner (k-1, k); after mirroring that corner is
    # (k', k'+1) with k' = -k, which is right of dart (c, k'+1)
    new_dart = 4 * c + (1 - k) % 4
    return replace(mirrored, outer_face=mirrored.face_of(new_dart))


# -- assembling new diagrams from slot-level descriptions -------------------------

EdgeEnd = tuple[Hashable, str]  # (edge key, "h" | "t")


def assemble(slots: Mapping[Hashable, Sequence[EdgeEnd]],
             under_in: Mapping[Hashable, int],
             order: Iterable[Hashable],
             start_edge: Hashable):
    """Build PD codes from crossings given as CCW lists of edge ends.

    ``slots[x][k] = (edge, "h")`` means ``edge`` ends at crossing ``x`` in
    rotation slot ``k``; ``"t"`` means it starts there.  ``under_in[x]`` is the
    slot of the incoming under-strand.  Edges are labelled ``1..2n`` along the
    knot starting from ``start_edge``.

    Returns ``(codes, labels, place)`` where ``labels[edge]`` is the new arc
    label and ``place[x] = (index, under_in[x])`` so that slot ``k`` of ``x``
    becomes dart ``4*index + (k - under_in[x]) % 4``.
    """
    order = list(order)
    tails: dict[Hashable, tuple[Hashable, int]] = {}
    heads: dict[Hashable, tuple[Hashable, int]] = {}
    for x in order:
        for k, (edge, end) in enumerate(slots[x]):
            table = heads if end == "h" else tails
            if edge in table:
                raise ValidationError(f"edge {edge!r} has two {end}-ends", "assembly")
            table[edge] = (x, k)
    if set(heads) != set(tails):
        raise ValidationError("edge ends do not pair up", "assembly")

    labels: dict[Hashable, int] = {}
    edge = start_edge
    while edge not in labels:
        labels[edge] = len(labels) + 1
        x, k = heads[edge]
        nxt, end = slots[x][(k + 2) % 4]
        if end != "t":
            raise ValidationError("strand does not pass straight through", "assembly")
        edge = nxt
    if edge != start_edge or len(labels) != len(heads):
        raise ValidationError("edges do not form a single component", "single component")

    codes = []
    place = {}
    for i, x in enumerate(order):
        u = under_in[x]
        codes.append(tuple(labels[slots[x][(u + j) % 4][0]] for j in range(4)))
        place[x] = (i, u)
    return tuple(codes), labels, place
