import pytest

from seifert_flatten import RenderError, flatten
from seifert_flatten.render import layout, render_svg
from seifert_flatten.table import bundled


def test_round_unknot_is_one_curve():
    svg = render_svg(bundled("unknot"))
    assert svg.count('class="strand"') == 1 and "<circle" in svg


def test_gap_count_equals_crossings():
    assert render_svg(bundled("figure-eight")).count('class="under-gap"') == 4
    final, _ = flatten(bundled("trefoil-braid"))
    assert render_svg(final).count('class="under-gap"') == 9


def test_deterministic_and_circles():
    d = bundled("figure-eight-braid")
    assert render_svg(d, circles=True) == render_svg(d, circles=True)
    svg = render_svg(d, circles=True)
    assert "depth-2" in svg


def test_parallel_arcs_are_separated():
    d = bundled("figure-eight")
    pos = layout(d)
    paths = {}
    for arc in range(1, d.n_arcs + 1):
        paths[arc] = (pos[("a", arc, 0)], pos[("a", arc, 1)])
    assert len(set(paths.values())) == d.n_arcs


def test_too_many_crossings():
    final, _ = flatten(bundled("figure-eight-braid"))
    from seifert_flatten import render

    old = render.MAX_CROSSINGS
    render.MAX_CROSSINGS = 4
    try:
        with pytest.raises(RenderError):
            render_svg(final)
    finally:
        render.MAX_CROSSINGS = old
