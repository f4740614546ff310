"""Seifert circuits, their nesting, and the canonical disk-band surface.

Smoothing every crossing coherently with the orientation turns the diagram
into disjoint simple closed curves.  On the sphere these cut out
``#circuits + 1`` regions whose adjacency graph is a tree; rooting it at the
region holding the outer face, the Seifert disk of a circuit is the set of
regions below its edge.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .diagram import Diagram
from .errors import InternalIdentityError, ValidationError

__all__ = [
    "BandSurface",
    "CircuitSet",
    "NestingForest",
    "SeifertAnalysis",
    "SeifertCircuit",
    "analyze",
    "band_surface",
    "classify_crossings",
    "diagram_genus",
    "disks_pairwise_disjoint",
    "nested_circuits",
    "nested_crossings_of",
    "nesting_forest",
    "seifert_circuits",
]


@dataclass(frozen=True)
class SeifertCircuit:
    id: int
    arcs: tuple[int, ...]
    crossing_set: frozenset[int]


@dataclass(frozen=True)
class CircuitSet:
    circuits: tuple[SeifertCircuit, ...]
    crossing_pairs: Mapping[int, tuple[int, int]]
    circuit_of_arc: Mapping[int, int]
    # (circuit, crossing) -> (arc entering the crossing, arc leaving it)
    passes: Mapping[tuple[int, int], tuple[int, int]]

    def __len__(self):
        return len(self.circuits)

    def __getitem__(self, sid: int) -> SeifertCircuit:
        return self.circuits[sid]

    def partner(self, sid: int, crossing: int) -> int:
        a, b = self.crossing_pairs[crossing]
        return b if a == sid else a


def _smoothing_exit(diagram: Diagram, head: int) -> int:
    """Dart where the circuit continues after entering through dart ``head``."""
    c, k = divmod(head, 4)
    if diagram.over_in_slot(c) == 3:
        out = 1 if k == 0 else 2
    else:
        out = 3 if k == 0 else 2
    return 4 * c + out


def seifert_circuits(diagram: Diagram) -> CircuitSet:
    """Oriented smoothing: under-in joins over-out, over-in joins under-out."""
    if diagram.is_round_unknot:
        circ = SeifertCircuit(0, (1,), frozenset())
        return CircuitSet((circ,), {}, {1: 0}, {})

    circuit_of: dict[int, int] = {}
    circuits = []
    passes = {}
    for start in range(1, diagram.n_arcs + 1):
        if start in circuit_of:
            continue
        sid = len(circuits)
        arcs = []
        crossings = set()
        arc = start
        while arc not in circuit_of:
            circuit_of[arc] = sid
            arcs.append(arc)
            head = diagram.head_dart(arc)
            nxt = diagram.dart_label(_smoothing_exit(diagram, head))
            c = head // 4
            crossings.add(c)
            passes[(sid, c)] = (arc, nxt)
            arc = nxt
        if arc != start:
            raise InternalIdentityError("smoothing is a permutation of arcs")
        circuits.append(SeifertCircuit(sid, tuple(arcs), frozenset(crossings)))

    pairs = {}
    for c, code in enumerate(diagram.crossings):
        s = circuit_of[code[0]]
        t = circuit_of[code[diagram.over_in_slot(c)]]
        if s == t:
            raise ValidationError("both passages lie on one Seifert circuit",
                                  "degenerate crossing", c)
        pairs[c] = (min(s, t), max(s, t))
    return CircuitSet(tuple(circuits), pairs, circuit_of, passes)


@dataclass(frozen=True)
class NestingForest:
    """Region tree of the smoothed arrangement.

    ``edges[s] = (outer_region, inner_region)``; ``disk_faces[s]`` holds the
    region ids strictly inside circuit ``s``.
    """

    regions: tuple[frozenset[int], ...]  # region id -> original face ids
    region_of_face: tuple[int, ...]
    root: int
    edges: Mapping[int, tuple[int, int]]
    depth: Mapping[int, int]
    disk_faces: Mapping[int, frozenset[int]]
    parent: Mapping[int, int | None]  # circuit -> enclosing circuit
    inside_is_right: Mapping[int, bool]

    @property
    def n_regions(self) -> int:
        return len(self.regions)

    def child_circuits(self, sid: int) -> list[int]:
        return [t for t, p in self.parent.items() if p == sid]

    def is_nested_in(self, t: int, s: int) -> bool:
        """True iff the disk of ``t`` is strictly inside the disk of ``s``."""
        p = self.parent[t]
        while p is not None:
            if p == s:
                return True
            p = self.parent[p]
        return False


def _merged_faces(diagram: Diagram) -> list[int]:
    """Union of faces joined by smoothing, as a face -> representative list."""
    parent = list(range(len(diagram.faces)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in range(diagram.n_crossings):
        # positive: smoothing hugs corners (0,1),(2,3); the corners (1,2),(3,0) fuse
        if diagram.over_in_slot(c) == 3:
            f, g = diagram.face_of(4 * c + 2), diagram.face_of(4 * c)
        else:
            f, g = diagram.face_of(4 * c + 1), diagram.face_of(4 * c + 3)
        rf, rg = find(f), find(g)
        if rf != rg:
            parent[max(rf, rg)] = min(rf, rg)
    return [find(f) for f in range(len(parent))]


def nesting_forest(diagram: Diagram, cs: CircuitSet) -> NestingForest:
    rep = _merged_faces(diagram)
    reps = sorted(set(rep))
    region_id = {r: i for i, r in enumerate(reps)}
    region_of_face = tuple(region_id[r] for r in rep)
    regions = tuple(frozenset(f for f, r in enumerate(region_of_face) if r == i)
                    for i in range(len(reps)))

    sides: dict[int, tuple[int, int]] = {}
    for circ in cs.circuits:
        if diagram.is_round_unknot:
            sides[circ.id] = (0, 1)
            continue
        right = {region_of_face[diagram.right_face(a)] for a in circ.arcs}
        left = {region_of_face[diagram.left_face(a)] for a in circ.arcs}
        if len(right) != 1 or len(left) != 1 or right == left:
            raise InternalIdentityError("circuit separates exactly two regions",
                                        f"circuit {circ.id}")
        sides[circ.id] = (right.pop(), left.pop())

    if len(regions) != len(cs) + 1:
        raise InternalIdentityError("#regions = #circuits + 1",
                                    f"{len(regions)} regions, {len(cs)} circuits")

    adj: dict[int, list[tuple[int, int]]] = {r: [] for r in range(len(regions))}
    for sid, (r, l) in sides.items():
        adj[r].append((sid, l))
        adj[l].append((sid, r))

    root = region_of_face[diagram.outer_face]
    region_depth = {root: 0}
    edges = {}
    depth = {}
    parent_region_circuit: dict[int, int | None] = {root: None}
    order = [root]
    queue = deque([root])
    while queue:
        r = queue.popleft()
        for sid, other in adj[r]:
            if sid in edges:
                continue
            if other in region_depth:
                raise InternalIdentityError("region graph is a tree", "cycle found")
            edges[sid] = (r, other)
            depth[sid] = region_depth[r]
            region_depth[other] = region_depth[r] + 1
            parent_region_circuit[other] = sid
            order.append(other)
            queue.append(other)
    if len(region_depth) != len(regions):
        raise InternalIdentityError("region graph is a tree", "disconnected")

    parent = {sid: parent_region_circuit[outer] for sid, (outer, _) in edges.items()}
    below: dict[int, set[int]] = {r: {r} for r in range(len(regions))}
    for r in reversed(order):
        up = parent_region_circuit[r]
        if up is not None:
            below[edges[up][0]] |= below[r]
    disk_faces = {sid: frozenset(below[inner]) for sid, (_, inner) in edges.items()}
    inside_is_right = {sid: sides[sid][0] == edges[sid][1] for sid in edges}

    return NestingForest(regions, region_of_face, root, edges, depth, disk_faces,
                         parent, inside_is_right)


def nested_circuits(nf: NestingForest) -> frozenset[int]:
    """S_II: circuits whose disk strictly contains another circuit's disk."""
    return frozenset(p for p in nf.parent.values() if p is not None)


def nested_crossings_of(sid: int, cs: CircuitSet, nf: NestingForest) -> frozenset[int]:
    """C_II(s): crossings of ``s`` whose partner circuit lies strictly inside ``s``."""
    if not 0 <= sid < len(cs):
        raise KeyError(f"unknown circuit id {sid}")
    return frozenset(c for c in cs[sid].crossing_set if nf.is_nested_in(cs.partner(sid, c), sid))


def classify_crossings(cs: CircuitSet, nf: NestingForest) -> dict[int, tuple[int, int, bool]]:
    """crossing -> (s, t, nested); for nested crossings ``s`` is the outer circuit."""
    out = {}
    for c, (a, b) in cs.crossing_pairs.items():
        if nf.is_nested_in(b, a):
            out[c] = (a, b, True)
        elif nf.is_nested_in(a, b):
            out[c] = (b, a, True)
        else:
            out[c] = (a, b, False)
    return out


def disks_pairwise_disjoint(nf: NestingForest) -> bool:
    """Pairwise emptiness of disk region sets.

    Each disk is recomputed by cutting its circle out of the region graph and
    collecting the component away from the root, so this does not consult the
    rooted parent structure that :func:`nested_circuits` reads.
    """
    adj: dict[int, list[tuple[int, int]]] = {r: [] for r in range(nf.n_regions)}
    for sid, (a, b) in nf.edges.items():
        adj[a].append((sid, b))
        adj[b].append((sid, a))
    disks = []
    for sid, (a, b) in nf.edges.items():
        seen = {a}
        stack = [a]
        while stack:
            r = stack.pop()
            for e, other in adj[r]:
                if e != sid and other not in seen:
                    seen.add(other)
                    stack.append(other)
        side_a = frozenset(seen)
        disks.append(frozenset(range(nf.n_regions)) - side_a if nf.root in side_a else side_a)
    for i in range(len(disks)):
        for j in range(i + 1, len(disks)):
            if disks[i] & disks[j]:
                return False
    return True


def diagram_genus(diagram: Diagram, cs: CircuitSet) -> int:
    """(#C - #S + 1) / 2, the genus of the canonical Seifert surface."""
    g = Fraction(diagram.n_crossings - len(cs) + 1, 2)
    if g.denominator != 1 or g < 0:
        raise ValidationError(f"genus {g} is not a non-negative integer", "inconsistent diagram")
    return int(g)


@dataclass(frozen=True)
class Band:
    crossing: int
    disks: tuple[int, int]
    positions: tuple[int, int]  # index of the entering arc along each circuit
    twist: int


@dataclass(frozen=True)
class BandSurface:
    """Abstract disks-and-bands surface with a cell count and traced boundary."""

    disks: tuple[int, ...]
    bands: tuple[Band, ...]
    n_vertices: int
    n_edges: int
    n_cells: int
    boundary: tuple[tuple[int, ...], ...]  # each component as a cycle of free segments

    @property
    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_cells

    @property
    def boundary_components(self) -> int:
        return len(self.boundary)

    @property
    def genus(self) -> int:
        twice = 2 - self.euler_characteristic - self.boundary_components
        if twice % 2:
            raise InternalIdentityError("orientable surface has integral genus")
        return twice // 2


def band_surface(diagram: Diagram, cs: CircuitSet, nf: NestingForest | None = None) -> BandSurface:
    """Glue one disk per circuit and one half-twisted band per crossing.

    The boundary is traced through the bands: the free segment of disk ``s``
    that runs into band ``c`` continues on the other disk along the segment
    leaving that band's attachment.  Free segments are named by arc label.
    """
    bands = []
    attachments = {circ.id: 0 for circ in cs.circuits}
    for c in range(diagram.n_crossings):
        s, t = cs.crossing_pairs[c]
        pos = []
        for sid in (s, t):
            entering, _ = cs.passes[(sid, c)]
            pos.append(cs[sid].arcs.index(entering))
            attachments[sid] += 1
        bands.append(Band(c, (s, t), tuple(pos), diagram.sign(c)))

    n_vertices = 4 * len(bands)
    n_edges = 2 * len(bands)
    for sid, k in attachments.items():
        if k == 0:
            n_vertices += 1
            n_edges += 1
        else:
            n_edges += 2 * k  # k attaching intervals alternating with k free segments
    n_cells = len(cs) + len(bands)

    # free segment -> next free segment along the boundary
    step = {}
    for circ in cs.circuits:
        if not circ.crossing_set:
            step[circ.arcs[0]] = circ.arcs[0]
    for band in bands:
        s, t = band.disks
        a_s, b_s = cs.passes[(s, band.crossing)]
        a_t, b_t = cs.passes[(t, band.crossing)]
        step[a_s] = b_t
        step[a_t] = b_s
    seen = set()
    boundary = []
    for seg in sorted(step):
        if seg in seen:
            continue
        cycle = []
        while seg not in seen:
            seen.add(seg)
            cycle.append(seg)
            seg = step[seg]
        boundary.append(tuple(cycle))

    surf = BandSurface(tuple(c.id for c in cs.circuits), tuple(bands),
                       n_vertices, n_edges, n_cells, tuple(boundary))
    if surf.boundary_components != 1:
        raise InternalIdentityError("not a knot surface",
                                    f"{surf.boundary_components} boundary components")
    return surf


@dataclass(frozen=True)
class SeifertAnalysis:
    diagram: Diagram
    circuits: CircuitSet
    forest: NestingForest
    nested: frozenset[int]
    nested_crossings: Mapping[int, frozenset[int]]
    genus: int
    disjoint: bool

    @property
    def nested_sum(self) -> int:
        """sum over circuits of #C_II(s)."""
        return sum(len(v) for v in self.nested_crossings.values())

    def report(self) -> dict:
        return {
            "crossings": self.diagram.n_crossings,
            "circuits": len(self.circuits),
            "genus": self.genus,
            "s2": sorted(self.nested),
            "c2": {str(s): sorted(v) for s, v in sorted(self.nested_crossings.items())},
            "disjoint_disks": self.disjoint,
            "depths": {str(s): d for s, d in sorted(self.forest.depth.items())},
        }


def analyze(diagram: Diagram) -> SeifertAnalysis:
    cs = seifert_circuits(diagram)
    nf = nesting_forest(diagram, cs)
    c2 = {circ.id: nested_crossings_of(circ.id, cs, nf) for circ in cs.circuits}
    return SeifertAnalysis(diagram, cs, nf, nested_circuits(nf), c2,
                           diagram_genus(diagram, cs), disks_pairwise_disjoint(nf))
