import random
from functools import lru_cache

import pytest

from seifert_flatten import random_braid_diagram

CORPUS_SIZE = 520


def corpus_params(size=CORPUS_SIZE):
    """Deterministic (strands, length, seed) triples: strands <= 5, length <= 10."""
    out = []
    for seed in range(size):
        strands = 2 + seed % 4
        rng = random.Random(10_000 + seed)
        # the closure is a knot only if the permutation is a full cycle, which
        # forces length = strands - 1 (mod 2)
        length = rng.randrange(strands - 1, 11, 2)
        out.append((strands, length, seed))
    return out


@lru_cache(maxsize=None)
def corpus(size=CORPUS_SIZE):
    return tuple(random_braid_diagram(k, n, s) for k, n, s in corpus_params(size))


@pytest.fixture(scope="session")
def small_corpus():
    return corpus()[:120]
