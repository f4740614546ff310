"""Rewriting a diagram until its open Seifert disks are pairwise disjoint.

One step takes a nested circuit ``s``, cuts a crossing-free piece out of one of
its arcs and reroutes the strand once around the rest of ``s``, running
parallel to it just inside its disk and passing over ``s``.  Near every
crossing where an inner circuit touches ``s`` the new strand would hit that
circuit's strands, so it hops outside instead: over the arc entering the
crossing, through the corner the smoothing of ``s`` cuts off, and back over
the arc leaving it.  ``s`` falls apart into small unnested circles and every
other circuit keeps its arcs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .diagram import Diagram, assemble
from .errors import AlreadyFlatError, InternalIdentityError
from .seifert import CircuitSet, NestingForest, SeifertAnalysis, analyze

__all__ = [
    "DetourEntry",
    "FlattenReport",
    "RemovalPlan",
    "TransformStep",
    "flatten",
    "plan_removal",
    "remove_nested_circuit",
    "select_target",
]


@dataclass(frozen=True)
class DetourEntry:
    crossing: int
    entry_arc: int  # arc of the target entering the crossing
    exit_arc: int   # arc of the target leaving it


@dataclass(frozen=True)
class RemovalPlan:
    target: int
    free_edge: int
    detour: tuple[DetourEntry, ...]


@dataclass(frozen=True)
class TransformStep:
    removed_circuit: int
    nested_crossings: int
    crossings_before: int
    crossings_after: int
    circuits_before: int
    circuits_after: int
    new_crossings: tuple[tuple[int, int], ...]
    new_circuits: int
    genus_before: int
    genus_after: int
    writhe_before: int
    writhe_after: int
    nested_before: tuple[int, ...]
    nested_after: tuple[int, ...]
    circuit_map: Mapping[int, int] = field(repr=False)

    def to_json(self) -> dict:
        return {
            "removed_circuit": self.removed_circuit,
            "nested_crossings": self.nested_crossings,
            "crossings_before": self.crossings_before,
            "crossings_after": self.crossings_after,
            "circuits_before": self.circuits_before,
            "circuits_after": self.circuits_after,
            "new_crossings": [list(p) for p in self.new_crossings],
            "new_circuits": self.new_circuits,
            "genus_before": self.genus_before,
            "genus_after": self.genus_after,
            "writhe_before": self.writhe_before,
            "writhe_after": self.writhe_after,
            "s2_before": list(self.nested_before),
            "s2_after": list(self.nested_after),
            "circuit_map": {str(k): v for k, v in sorted(self.circuit_map.items())},
        }


@dataclass(frozen=True)
class FlattenReport:
    initial: Diagram
    final: Diagram
    steps: tuple[TransformStep, ...]
    initial_nested_sum: int  # sum over circuits of 2 #C_II, on the initial diagram
    intermediates: tuple[Diagram, ...] = field(default=(), repr=False)

    @property
    def total_added(self) -> int:
        return self.final.n_crossings - self.initial.n_crossings

    def to_json(self) -> dict:
        from .diagram import serialize

        out = {
            "steps": [s.to_json() for s in self.steps],
            "n_steps": len(self.steps),
            "crossings_before": self.initial.n_crossings,
            "crossings_after": self.final.n_crossings,
            "total_added_crossings": self.total_added,
            "initial_nested_sum": self.initial_nested_sum,
            "genus": self.steps[0].genus_before if self.steps else None,
            "final": serialize(self.final),
        }
        if out["genus"] is None:
            out["genus"] = analyze(self.final).genus
        if self.intermediates:
            out["intermediates"] = [serialize(d) for d in self.intermediates]
        return out


def select_target(nf: NestingForest) -> int:
    """Deepest nested circuit, lowest id among equals."""
    nested = {p for p in nf.parent.values() if p is not None}
    if not nested:
        raise AlreadyFlatError("no nested Seifert circuit: disks are already disjoint")
    return min(nested, key=lambda s: (-nf.depth[s], s))


def plan_removal(diagram: Diagram, cs: CircuitSet, nf: NestingForest, target: int) -> RemovalPlan:
    circ = cs[target]
    nested = {c for c in circ.crossing_set if nf.is_nested_in(cs.partner(target, c), target)}
    if not nested:
        raise AlreadyFlatError(f"circuit {target} has no nested crossings")

    def touches_nested(arc):
        return (diagram.tail_dart(arc) // 4 in nested) or (diagram.head_dart(arc) // 4 in nested)

    quiet = [a for a in circ.arcs if not touches_nested(a)]
    free = min(quiet) if quiet else min(circ.arcs)
    k = circ.arcs.index(free)
    walk = circ.arcs[k:] + circ.arcs[:k]
    detour = []
    for j, arc in enumerate(walk):
        c = diagram.head_dart(arc) // 4
        if c in nested:
            detour.append(DetourEntry(c, arc, walk[(j + 1) % len(walk)]))
    return RemovalPlan(target, free, tuple(detour))


def _hugged_corner_dart(diagram: Diagram, entering: int, leaving: int) -> int:
    """Dart whose right-hand face is the corner the circuit turns around."""
    h, t = diagram.head_dart(entering), diagram.tail_dart(leaving)
    c, ka = divmod(h, 4)
    kb = t % 4
    return t if kb == (ka + 1) % 4 else h


def _writhe(diagram: Diagram) -> int:
    return sum(diagram.sign(c) for c in range(diagram.n_crossings))


def remove_nested_circuit(diagram: Diagram, plan: RemovalPlan,
                          analysis: SeifertAnalysis | None = None):
    """Apply one rewrite; returns ``(new_diagram, TransformStep)``.

    Every postcondition is recomputed on the result and a failure raises
    :class:`InternalIdentityError` naming the identity.
    """
    an = analysis if analysis is not None else analyze(diagram)
    cs, nf = an.circuits, an.forest
    s = plan.target
    if s not in an.nested:
        raise AlreadyFlatError(f"circuit {s} is not nested")
    expected = an.nested_crossings[s]
    if {e.crossing for e in plan.detour} != set(expected):
        raise ValueError("plan detour does not cover C_II of the target")
    nested = set(expected)
    arcs = cs[s].arcs
    k = arcs.index(plan.free_edge)
    walk = arcs[k:] + arcs[:k]

    def tail_c(a):
        return diagram.tail_dart(a) // 4

    def head_c(a):
        return diagram.head_dart(a) // 4

    # subdivision points along each arc of s, tail to head
    points: dict[int, list] = {}
    for a in walk:
        pts = []
        if tail_c(a) in nested:
            pts.append(("B", tail_c(a)))
        if a == plan.free_edge:
            pts += ["x1", "x2"]
        if head_c(a) in nested:
            pts.append(("A", head_c(a)))
        if pts:
            points[a] = pts

    def piece(a, j):
        return ("arc", a, j)

    # events met by the rerouted strand, walking s backwards from x1 to x2
    first = walk[0]
    events = []
    if tail_c(first) in nested:
        events.append(("B", tail_c(first)))
    for a in reversed(walk[1:]):
        if head_c(a) in nested:
            events.append(("A", head_c(a)))
        if tail_c(a) in nested:
            events.append(("B", tail_c(a)))
    if head_c(first) in nested:
        events.append(("A", head_c(first)))

    p = points[first].index("x1")
    alias = {("new", 0): piece(first, p), ("new", len(events)): piece(first, p + 2)}

    def key(e):
        return alias.get(e, e)

    inside = 1 if nf.inside_is_right[s] else 3
    outside = 4 - inside
    slots = {}
    under_in = {}
    for c, code in enumerate(diagram.crossings):
        row = []
        for kk, lab in enumerate(code):
            if diagram.dart_is_head(4 * c + kk):
                row.append((key(piece(lab, len(points.get(lab, ())))), "h"))
            else:
                row.append((key(piece(lab, 0)), "t"))
        slots[("old", c)] = row
        under_in[("old", c)] = 0

    by_crossing = {e.crossing: e for e in plan.detour}
    for j, ev in enumerate(events):
        kind, c = ev
        host = by_crossing[c].entry_arc if kind == "A" else by_crossing[c].exit_arc
        q = points[host].index(ev)
        row = [None] * 4
        row[0] = (key(piece(host, q)), "h")
        row[2] = (key(piece(host, q + 1)), "t")
        came, goes = (inside, outside) if kind == "B" else (outside, inside)
        row[came] = (key(("new", j)), "h")
        row[goes] = (key(("new", j + 1)), "t")
        slots[ev] = row
        under_in[ev] = 0

    order = [("old", c) for c in range(diagram.n_crossings)]
    pairs = []
    for entry in plan.detour:
        base = len(order)
        order += [("A", entry.crossing), ("B", entry.crossing)]
        pairs.append((base, base + 1))

    codes, labels, place = assemble(slots, under_in, order, key(piece(1, 0)))
    provisional = Diagram(codes, 0)

    # the outer face survives unless the strand cut a corner off it
    outer_dart = diagram.faces[diagram.outer_face].darts[0]
    new_outer = provisional.face_of(outer_dart)
    for j, ev in enumerate(events):
        kind, c = ev
        if kind != "B":
            continue
        entry = by_crossing[c]
        corner = _hugged_corner_dart(diagram, entry.entry_arc, entry.exit_arc)
        if diagram.face_of(corner) == diagram.outer_face:
            lab = labels[key(("new", j + 1))]
            cut = provisional.face_of(corner)
            sides = {provisional.right_face(lab), provisional.left_face(lab)}
            sides.discard(cut)
            if len(sides) != 1:
                raise InternalIdentityError("detour edge separates two faces")
            new_outer = sides.pop()
            break
    result = Diagram(codes, new_outer, name=diagram.name)

    step = _verify_step(diagram, an, result, plan, labels, tuple(pairs))
    return result, step


def _verify_step(before: Diagram, an: SeifertAnalysis, after: Diagram, plan: RemovalPlan,
                 labels, pairs) -> TransformStep:
    s = plan.target
    bn = analyze(after)
    cs, cs2 = an.circuits, bn.circuits
    n_c2 = len(an.nested_crossings[s])

    dc = after.n_crossings - before.n_crossings
    if dc != 2 * n_c2:
        raise InternalIdentityError("#C(D') - #C(D) = 2 #C_II(s)", f"{dc} != 2*{n_c2}")

    circuit_map = {}
    for circ in cs.circuits:
        if circ.id == s:
            continue
        new_arcs = {labels[("arc", a, 0)] for a in circ.arcs}
        ids = {cs2.circuit_of_arc[a] for a in new_arcs}
        if len(ids) != 1 or set(cs2[next(iter(ids))].arcs) != new_arcs:
            raise InternalIdentityError("surviving circuits keep their arcs", f"circuit {circ.id}")
        circuit_map[circ.id] = ids.pop()
    image = set(circuit_map.values())
    fresh = len(cs2) - len(image)
    if fresh != dc + 1:
        raise InternalIdentityError("#(S(D') \\ S(D)) = #(C(D') \\ C(D)) + 1", f"{fresh} != {dc + 1}")

    back = {v: k for k, v in circuit_map.items()}
    if not bn.nested <= image:
        raise InternalIdentityError("S_II(D') is contained in S_II(D)", "a new circuit is nested")
    mapped = {back[t] for t in bn.nested}
    if mapped != set(an.nested) - {s}:
        raise InternalIdentityError("S_II(D') = S_II(D) \\ {s}",
                                    f"{sorted(mapped)} != {sorted(set(an.nested) - {s})}")

    for old, new in circuit_map.items():
        if len(bn.nested_crossings[new]) != len(an.nested_crossings[old]):
            raise InternalIdentityError("#C_II(t) unchanged for surviving t", f"circuit {old}")

    if bn.genus != an.genus:
        raise InternalIdentityError("G(D') = G(D)", f"{bn.genus} != {an.genus}")
    w0, w1 = _writhe(before), _writhe(after)
    if w0 != w1:
        raise InternalIdentityError("writhe(D') = writhe(D)", f"{w1} != {w0}")
    for a, b in pairs:
        if after.sign(a) + after.sign(b) != 0:
            raise InternalIdentityError("paired new crossings have opposite signs")

    return TransformStep(
        removed_circuit=s,
        nested_crossings=n_c2,
        crossings_before=before.n_crossings,
        crossings_after=after.n_crossings,
        circuits_before=len(cs),
        circuits_after=len(cs2),
        new_crossings=pairs,
        new_circuits=fresh,
        genus_before=an.genus,
        genus_after=bn.genus,
        writhe_before=w0,
        writhe_after=w1,
        nested_before=tuple(sorted(an.nested)),
        nested_after=tuple(sorted(bn.nested)),
        circuit_map=circuit_map,
    )


def flatten(diagram: Diagram, keep_intermediates: bool = False):
    """Remove nested circuits one at a time; returns ``(final, FlattenReport)``."""
    an = analyze(diagram)
    initial_sum = 2 * an.nested_sum
    n_nested = len(an.nested)
    steps = []
    seen = []
    current = diagram
    while an.nested:
        target = select_target(an.forest)
        plan = plan_removal(current, an.circuits, an.forest, target)
        current, step = remove_nested_circuit(current, plan, an)
        steps.append(step)
        if keep_intermediates:
            seen.append(current)
        an = analyze(current)

    if len(steps) != n_nested:
        raise InternalIdentityError("flatten takes #S_II(D) steps", f"{len(steps)} != {n_nested}")
    if not an.disjoint:
        raise InternalIdentityError("final Seifert disks are pairwise disjoint")
    added = current.n_crossings - diagram.n_crossings
    if added != initial_sum:
        raise InternalIdentityError("total added = sum 2 #C_II(i) over the initial diagram",
                                    f"{added} != {initial_sum}")
    return current, FlattenReport(diagram, current, tuple(steps), initial_sum, tuple(seen))
