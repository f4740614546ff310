"""Braid words, their closures as PD diagrams, and a seeded random generator."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .diagram import Diagram, assemble
from .errors import GeneratorBudgetError

__all__ = ["BraidWord", "closure", "random_braid_diagram", "random_braid_word"]

MAX_ATTEMPTS = 1000


@dataclass(frozen=True)
class BraidWord:
    """``letters`` holds signed generator indices: ``+i`` is sigma_i, ``-i`` its inverse."""

    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("a braid needs at least 2 strands")
        object.__setattr__(self, "letters", tuple(self.letters))
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(f"generator {x} out of range for {self.strands} strands")

    def permutation(self) -> list[int]:
        """perm[p] = bottom position reached at the top by the strand starting at p."""
        perm = list(range(self.strands + 1))
        for p in range(1, self.strands + 1):
            q = p
            for x in self.letters:
                i = abs(x)
                if q == i:
                    q = i + 1
                elif q == i + 1:
                    q = i
            perm[p] = q
        return perm

    def closure_components(self) -> int:
        perm = self.permutation()
        seen = set()
        count = 0
        for p in range(1, self.strands + 1):
            if p in seen:
                continue
            count += 1
            while p not in seen:
                seen.add(p)
                p = perm[p]
        return count

    def is_knot(self) -> bool:
        return bool(self.letters) and self.closure_components() == 1

    def __str__(self):
        return " ".join(f"s{x}" if x > 0 else f"S{-x}" for x in self.letters)


def closure(word: BraidWord, name: str | None = None) -> Diagram:
    """Closed braid with strands running upward, closed around the right.

    The outer face is the region left of strand position 1.  A crossing
    sigma_i has its over-strand going from position i to i+1, which makes
    sigma_i a positive crossing.
    """
    if not word.is_knot():
        raise ValueError("braid closure is not a knot")
    cur = {p: ("bottom", p) for p in range(1, word.strands + 1)}
    slots = {}
    under_in = {}
    for t, x in enumerate(word.letters):
        i = abs(x)
        nw, ne = ("arc", t, "left"), ("arc", t, "right")
        # counterclockwise from south-west: SW, SE, NE, NW
        slots[t] = [(cur[i], "h"), (cur[i + 1], "h"), (ne, "t"), (nw, "t")]
        under_in[t] = 1 if x > 0 else 0
        cur[i], cur[i + 1] = nw, ne

    alias = {("bottom", p): cur[p] for p in cur}
    slots = {t: [(alias.get(e, e), end) for e, end in sl] for t, sl in slots.items()}
    start = alias[("bottom", 1)]
    codes, labels, _ = assemble(slots, under_in, range(len(word.letters)), start)
    d = Diagram(codes, name=name)
    outer = d.left_face(labels[start])
    return Diagram(codes, outer, name=name)


def random_braid_word(strands: int, length: int, seed: int) -> BraidWord:
    if not 2 <= strands <= 6:
        raise ValueError("strands must be in 2..6")
    if not 1 <= length <= 16:
        raise ValueError("length must be in 1..16")
    rng = random.Random(seed)
    for _ in range(MAX_ATTEMPTS):
        letters = tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length))
        word = BraidWord(strands, letters)
        if word.is_knot():
            return word
    raise GeneratorBudgetError(
        f"no single-component closure after {MAX_ATTEMPTS} draws "
        f"(strands={strands}, length={length}, seed={seed})")


def random_braid_diagram(strands: int, length: int, seed: int) -> Diagram:
    word = random_braid_word(strands, length, seed)
    return closure(word, name=f"braid[{strands}]:{word}")
