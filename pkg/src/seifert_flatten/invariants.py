"""Knot-type oracles: Kauffman bracket, writhe, Jones polynomial.

Polynomials are Laurent polynomials in ``A``; the Jones polynomial is stored
in ``A`` too, with ``t = A^-4``.

Smoothing conventions for a PD code ``(a, b, c, d)``: the A-smoothing joins
``a-b`` and ``c-d``, the B-smoothing joins ``a-d`` and ``b-c``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .diagram import Diagram
from .errors import CrossingLimitError
from .laurent import LaurentPolynomial
from .seifert import analyze

__all__ = [
    "DEFAULT_LIMIT",
    "InvariantReport",
    "compare_diagrams",
    "jones_polynomial",
    "jones_in_t",
    "kauffman_bracket",
    "state_sum_bracket",
    "writhe",
]

LIMIT_ENV = "SEIFERT_FLATTEN_BRACKET_LIMIT"


def _default_limit() -> int:
    raw = os.environ.get(LIMIT_ENV)
    return int(raw) if raw else 20


DEFAULT_LIMIT = _default_limit()

DELTA = LaurentPolynomial({2: -1, -2: -1})


def writhe(diagram: Diagram) -> int:
    return sum(diagram.sign(c) for c in range(diagram.n_crossings))


def _check_limit(diagram: Diagram, limit: int | None) -> None:
    limit = _default_limit() if limit is None else limit
    if diagram.n_crossings > limit:
        raise CrossingLimitError(
            f"{diagram.n_crossings} crossings exceed the bracket limit {limit}")


def state_sum_bracket(diagram: Diagram, limit: int | None = None) -> LaurentPolynomial:
    """Brute-force sum over all 2^n smoothings, loops counted by union-find."""
    _check_limit(diagram, limit)
    n = diagram.n_crossings
    if n == 0:
        return LaurentPolynomial.constant(1)
    m = 2 * n
    totals: dict[tuple[int, int], int] = {}
    for state in range(1 << n):
        parent = list(range(m + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        a_count = 0
        for c, (a, b, cc, d) in enumerate(diagram.crossings):
            if state >> c & 1:
                union(a, d)
                union(b, cc)
            else:
                a_count += 1
                union(a, b)
                union(cc, d)
        loops = len({find(x) for x in range(1, m + 1)})
        k = (2 * a_count - n, loops)
        totals[k] = totals.get(k, 0) + 1
    result = LaurentPolynomial()
    for (exp, loops), count in totals.items():
        result = result + (DELTA ** (loops - 1)).shift(exp) * count
    return result


def _crossing_order(diagram: Diagram) -> list[int]:
    """Greedy order keeping few arcs half-processed."""
    arcs_at = [set(code) for code in diagram.crossings]
    frontier: set[int] = set()
    order = []
    remaining = set(range(diagram.n_crossings))
    while remaining:
        best = min(remaining, key=lambda c: (-len(arcs_at[c] & frontier),
                                             len(arcs_at[c] - frontier), c))
        order.append(best)
        remaining.discard(best)
        frontier ^= arcs_at[best]
    return order


def kauffman_bracket(diagram: Diagram, limit: int | None = None) -> LaurentPolynomial:
    """Kauffman bracket with the unknot normalized to 1.

    Same state sum as :func:`state_sum_bracket`, reorganized: crossings are
    smoothed one at a time and states sharing a connectivity pattern on the
    still-open arc ends are merged.
    """
    _check_limit(diagram, limit)
    n = diagram.n_crossings
    if n == 0:
        return LaurentPolynomial.constant(1)

    # arc end ids: 2*arc for the tail, 2*arc+1 for the head
    ends_at = []
    for c, code in enumerate(diagram.crossings):
        row = []
        for k, lab in enumerate(code):
            row.append(2 * lab + (1 if diagram.dart_is_head(4 * c + k) else 0))
        ends_at.append(row)
    crossing_of_end = {}
    for c, row in enumerate(ends_at):
        for e in row:
            crossing_of_end[e] = c

    # state: (frozenset of matched open-end pairs, closed-a-loop flag) -> {exp: coeff}
    states: dict[tuple[frozenset, bool], dict[int, int]] = {(frozenset(), False): {0: 1}}
    processed: set[int] = set()
    for c in _crossing_order(diagram):
        row = ends_at[c]
        new_states: dict[tuple[frozenset, bool], dict[int, int]] = {}
        for (pairs, closed), poly in states.items():
            match = {}
            for x, y in pairs:
                match[x] = y
                match[y] = x
            for smoothing, exp in (((0, 1), (2, 3)), 1), (((0, 3), (1, 2)), -1):
                res_pairs, loops = _smooth(row, smoothing, match, crossing_of_end, processed, c)
                key_closed = closed or loops > 0
                extra = loops - (0 if closed else (1 if loops else 0))
                factor = DELTA ** extra if extra else None
                key = (res_pairs, key_closed)
                target = new_states.setdefault(key, {})
                shifted = {e + exp: v for e, v in poly.items()}
                if factor is not None:
                    shifted = (LaurentPolynomial(shifted) * factor).coeffs
                for e, v in shifted.items():
                    target[e] = target.get(e, 0) + v
        states = {k: {e: v for e, v in p.items() if v} for k, p in new_states.items()}
        processed.add(c)

    total = LaurentPolynomial()
    for (pairs, closed), poly in states.items():
        if pairs or not closed:
            raise RuntimeError("bracket frontier did not close")
        total = total + LaurentPolynomial(poly)
    return total


def _smooth(row, smoothing, match, crossing_of_end, processed, c):
    """Smooth crossing ``c``; returns (new matching as frozenset of pairs, loops closed)."""

    # where does each port lead once we leave the crossing along its arc?
    # open ends sit at unprocessed crossings with the other end of their arc processed
    ext = []
    for e in row:
        far = e ^ 1
        fc = crossing_of_end[far]
        if fc == c:
            ext.append(("port", row.index(far)))
        elif fc in processed:
            through = match[e]
            ext.append(("port", row.index(through)) if through in row else ("out", through))
        else:
            ext.append(("out", far))
    partner = {}
    for p, q in smoothing:
        partner[p] = q
        partner[q] = p

    new_match = {x: y for x, y in match.items() if x not in row and y not in row}
    visited = set()
    for start in range(4):
        if start in visited or ext[start][0] != "out":
            continue
        p = start
        visited.add(p)
        end1 = ext[p][1]
        while True:
            q = partner[p]
            visited.add(q)
            kind, val = ext[q]
            if kind == "out":
                end2 = val
                break
            p = val
            visited.add(p)
        new_match[end1] = end2
        new_match[end2] = end1
    loops = 0
    for start in range(4):
        if start in visited:
            continue
        loops += 1
        p = start
        while p not in visited:
            visited.add(p)
            q = partner[p]
            visited.add(q)
            p = ext[q][1]
    pairs = frozenset((min(x, y), max(x, y)) for x, y in new_match.items() if x < y)
    return pairs, loops


def jones_polynomial(diagram: Diagram, limit: int | None = None) -> LaurentPolynomial:
    """(-A^3)^(-writhe) <D>, in the variable A (t = A^-4)."""
    w = writhe(diagram)
    factor = LaurentPolynomial({-3 * w: -1 if w % 2 else 1})
    return kauffman_bracket(diagram, limit) * factor


def jones_in_t(jones_a: LaurentPolynomial) -> dict:
    """Re-express a Jones polynomial in ``t``; exponents are quarter-integers as Fractions."""
    from fractions import Fraction

    return {Fraction(-e, 4): c for e, c in jones_a.terms()}


@dataclass(frozen=True)
class InvariantReport:
    genus_equal: bool
    writhe_equal: bool
    bracket_equal: bool
    jones_equal: bool
    delta_crossings: int
    delta_circuits: int
    jones_a: LaurentPolynomial
    jones_b: LaurentPolynomial

    @property
    def all_equal(self) -> bool:
        return self.genus_equal and self.writhe_equal and self.jones_equal

    def to_json(self) -> dict:
        return {
            "genus_equal": self.genus_equal,
            "writhe_equal": self.writhe_equal,
            "bracket_equal": self.bracket_equal,
            "jones_equal": self.jones_equal,
            "delta_crossings": self.delta_crossings,
            "delta_circuits": self.delta_circuits,
            "jones_a": [list(t) for t in self.jones_a.terms()],
            "jones_b": [list(t) for t in self.jones_b.terms()],
        }


def compare_diagrams(d1: Diagram, d2: Diagram, limit: int | None = None) -> InvariantReport:
    a1, a2 = analyze(d1), analyze(d2)
    b1, b2 = kauffman_bracket(d1, limit), kauffman_bracket(d2, limit)
    w1, w2 = writhe(d1), writhe(d2)
    f1 = LaurentPolynomial({-3 * w1: -1 if w1 % 2 else 1})
    f2 = LaurentPolynomial({-3 * w2: -1 if w2 % 2 else 1})
    j1, j2 = b1 * f1, b2 * f2
    return InvariantReport(
        genus_equal=a1.genus == a2.genus,
        writhe_equal=w1 == w2,
        bracket_equal=b1 == b2,
        jones_equal=j1 == j2,
        delta_crossings=d2.n_crossings - d1.n_crossings,
        delta_circuits=len(a2.circuits) - len(a1.circuits),
        jones_a=j1,
        jones_b=j2,
    )
