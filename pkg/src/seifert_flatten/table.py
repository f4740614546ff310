"""Small bundled knot table used for calibration and examples.

Jones polynomials are stored in ``A`` (``t = A^-4``) as (exponent, coefficient)
pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, parse_pd

__all__ = ["BundledKnot", "TABLE", "bundled", "names"]


@dataclass(frozen=True)
class BundledKnot:
    name: str
    source: str
    genus: int
    jones: tuple[tuple[int, int], ...]
    note: str = ""

    def diagram(self) -> Diagram:
        return parse_pd(self.source, name=self.name)


_UNKNOT_JONES = ((0, 1),)
# t + t^3 - t^4
_TREFOIL_JONES = ((-16, -1), (-12, 1), (-4, 1))
# t^-2 - t^-1 + 1 - t + t^2
_FIG8_JONES = ((-8, 1), (-4, -1), (0, 1), (4, -1), (8, 1))

TABLE = {k.name: k for k in [
    BundledKnot("unknot", "unknot outer=0", 0, _UNKNOT_JONES, "round unknot"),
    BundledKnot("kink+", "X[1,1,2,2] outer=0", 0, _UNKNOT_JONES, "positive one-kink unknot"),
    BundledKnot("kink-", "X[1,2,2,1] outer=1", 0, _UNKNOT_JONES, "negative one-kink unknot"),
    BundledKnot("trefoil-braid", "X[4,2,5,1] X[2,6,3,5] X[6,4,1,3] outer=3", 1, _TREFOIL_JONES,
                "closure of sigma_1^3, outer face left of strand 1"),
    BundledKnot("trefoil", "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2] outer=1", 1, _TREFOIL_JONES,
                "standard alternating right-handed trefoil"),
    BundledKnot("figure-eight", "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8] outer=0", 1,
                _FIG8_JONES, "standard 4-crossing diagram; Seifert disks not disjoint"),
    BundledKnot("figure-eight-flat",
                "X[10,2,11,1] X[16,12,1,11] X[13,8,14,9] X[7,14,8,15] X[6,6,7,5] "
                "X[15,4,16,5] X[12,4,13,3] X[9,2,10,3] outer=0", 1, _FIG8_JONES,
                "flattened figure-eight; Seifert disks pairwise disjoint"),
    BundledKnot("figure-eight-braid", "X[4,2,5,1] X[2,7,3,8] X[8,6,1,5] X[6,3,7,4] outer=3", 1,
                _FIG8_JONES, "closure of (sigma_1 sigma_2^-1)^2"),
]}


def names() -> list[str]:
    return list(TABLE)


def bundled(name: str) -> Diagram:
    try:
        return TABLE[name].diagram()
    except KeyError:
        raise KeyError(f"no bundled knot named {name!r}; known: {', '.join(TABLE)}") from None
