from hypothesis import given, settings
from hypothesis import strategies as st

from seifert_flatten import analyze, band_surface, flip_crossings, random_braid_diagram
from seifert_flatten.seifert import (
    disks_pairwise_disjoint,
    nested_circuits,
    nested_crossings_of,
    nesting_forest,
    seifert_circuits,
)
from seifert_flatten.table import bundled


def by_depth(an):
    return sorted(an.forest.depth, key=an.forest.depth.get)


def test_round_unknot():
    an = analyze(bundled("unknot"))
    assert len(an.circuits) == 1 and an.circuits.crossing_pairs == {}
    assert an.forest.n_regions == 2 and an.forest.depth == {0: 0}
    assert an.nested == frozenset() and an.disjoint and an.genus == 0


def test_trefoil_closure():
    an = analyze(bundled("trefoil-braid"))
    outer, inner = by_depth(an)
    assert len(an.circuits) == 2
    assert set(an.circuits.crossing_pairs.values()) == {(0, 1)}
    assert an.forest.n_regions == 3
    assert (an.forest.depth[outer], an.forest.depth[inner]) == (0, 1)
    assert an.forest.is_nested_in(inner, outer)
    assert an.nested == {outer}
    assert an.nested_crossings[outer] == {0, 1, 2}
    assert an.nested_crossings[inner] == frozenset()
    assert not an.disjoint and an.genus == 1


def test_figure_eight_closure():
    an = analyze(bundled("figure-eight-braid"))
    outer, middle, inner = by_depth(an)
    assert [an.forest.depth[s] for s in (outer, middle, inner)] == [0, 1, 2]
    assert an.forest.n_regions == 4
    pairs = sorted(an.circuits.crossing_pairs.values())
    assert pairs == sorted([tuple(sorted((outer, middle)))] * 2 + [tuple(sorted((middle, inner)))] * 2)
    assert an.nested == {outer, middle}
    middle_inner = {c for c, p in an.circuits.crossing_pairs.items() if set(p) == {middle, inner}}
    assert an.nested_crossings[middle] == middle_inner and len(middle_inner) == 2
    assert an.genus == 1


def test_standard_figure_eight():
    an = analyze(bundled("figure-eight"))
    assert len(an.circuits) == 3 and an.genus == 1
    assert an.nested and not an.disjoint
    assert analyze(bundled("figure-eight-flat")).disjoint


def test_band_surface_examples():
    for name, disks, bands, chi, genus in [("unknot", 1, 0, 1, 0), ("trefoil-braid", 2, 3, -1, 1),
                                           ("figure-eight", 3, 4, -1, 1)]:
        d = bundled(name)
        bs = band_surface(d, seifert_circuits(d))
        assert (len(bs.disks), len(bs.bands), bs.euler_characteristic) == (disks, bands, chi)
        assert bs.boundary_components == 1 and bs.genus == genus


def test_nesting_free_functions_agree_with_analysis():
    d = bundled("figure-eight-braid")
    cs = seifert_circuits(d)
    nf = nesting_forest(d, cs)
    an = analyze(d)
    assert nested_circuits(nf) == an.nested
    assert all(nested_crossings_of(s, cs, nf) == an.nested_crossings[s] for s in an.nested_crossings)


braids = st.tuples(st.integers(2, 5), st.integers(1, 10), st.integers(0, 10**6))


def _diagram(args):
    k, n, seed = args
    n = max(n, k - 1)
    if (n - k + 1) % 2:  # a full-cycle permutation needs length = strands - 1 (mod 2)
        n += 1
    return random_braid_diagram(k, n, seed)


@settings(max_examples=100, deadline=None)
@given(braids)
def test_disjoint_iff_no_nested_circuit(args):
    d = _diagram(args)
    for outer in range(len(d.faces)):
        dd = d.__class__(d.crossings, outer)
        cs = seifert_circuits(dd)
        nf = nesting_forest(dd, cs)
        assert disks_pairwise_disjoint(nf) == (not nested_circuits(nf))


@settings(max_examples=100, deadline=None)
@given(braids)
def test_genus_is_flip_invariant_and_matches_band_surface(args):
    d = _diagram(args)
    an = analyze(d)
    assert analyze(flip_crossings(d)).genus == an.genus
    bs = band_surface(d, an.circuits)
    assert bs.boundary_components == 1 and bs.genus == an.genus
