import pytest

from seifert_flatten import (
    AlreadyFlatError,
    analyze,
    flatten,
    jones_polynomial,
    plan_removal,
    remove_nested_circuit,
    writhe,
)
from seifert_flatten.flatten import select_target
from seifert_flatten.table import bundled


def _plan(d):
    an = analyze(d)
    return an, plan_removal(d, an.circuits, an.forest, select_target(an.forest))


def test_select_target():
    an = analyze(bundled("trefoil-braid"))
    assert select_target(an.forest) == min(an.nested)
    an = analyze(bundled("figure-eight-braid"))
    target = select_target(an.forest)
    assert an.forest.depth[target] == 1


def test_already_flat():
    an = analyze(bundled("unknot"))
    with pytest.raises(AlreadyFlatError):
        select_target(an.forest)


def test_plans():
    an, plan = _plan(bundled("trefoil-braid"))
    assert len(plan.detour) == 3
    assert {e.crossing for e in plan.detour} == {0, 1, 2}
    assert plan.free_edge in an.circuits.circuits[plan.target].arcs
    an, plan = _plan(bundled("figure-eight-braid"))
    assert len(plan.detour) == 2


def test_trefoil_step():
    d = bundled("trefoil-braid")
    an, plan = _plan(d)
    d2, step = remove_nested_circuit(d, plan, an)
    a2 = analyze(d2)
    assert (d2.n_crossings, len(a2.circuits), a2.genus) == (9, 8, 1)
    assert a2.nested == frozenset()
    assert step.new_circuits == 7
    assert len(step.new_crossings) == 3
    for a, b in step.new_crossings:
        assert d2.sign(a) == -d2.sign(b)


def test_figure_eight_closure_step():
    d = bundled("figure-eight-braid")
    an, plan = _plan(d)
    d2, step = remove_nested_circuit(d, plan, an)
    a2 = analyze(d2)
    assert d2.n_crossings == d.n_crossings + 4
    assert len(a2.circuits) == len(an.circuits) + 4
    assert a2.genus == 1 and len(a2.nested) == len(an.nested) - 1


def test_standard_figure_eight():
    d = bundled("figure-eight")
    final, report = flatten(d)
    an = analyze(final)
    # two nested crossings on one circuit: 2 * 2 added
    assert (final.n_crossings, len(an.circuits), an.genus) == (8, 7, 1)
    assert an.disjoint and len(report.steps) == 1
    assert jones_polynomial(final) == jones_polynomial(d)
    assert writhe(final) == writhe(d)
    assert final == bundled("figure-eight-flat")


def test_figure_eight_closure_full():
    final, report = flatten(bundled("figure-eight-braid"))
    assert len(report.steps) == 2 and final.n_crossings == 12
    assert all(s.genus_after == 1 for s in report.steps)


def test_trefoil_full_and_idempotence():
    final, report = flatten(bundled("trefoil-braid"))
    assert report.total_added == 6 and final.n_crossings == 9
    again, rep2 = flatten(final)
    assert again == final and rep2.steps == ()


def test_round_unknot_is_identity():
    d = bundled("unknot")
    final, report = flatten(d)
    assert final == d and report.steps == ()


def test_intermediates_and_json(small_corpus):
    for d in small_corpus[:40]:
        final, report = flatten(d, keep_intermediates=True)
        assert len(report.intermediates) == len(report.steps)
        if report.steps:
            assert report.intermediates[-1] == final
        js = report.to_json()
        assert js["n_steps"] == len(report.steps)
        assert js["total_added_crossings"] == js["initial_nested_sum"]


def test_outer_face_choice_changes_nesting():
    # the same diagram with different outer faces can need different work
    d = bundled("figure-eight")
    totals = set()
    for f in range(len(d.faces)):
        dd = d.__class__(d.crossings, f)
        final, report = flatten(dd)
        assert analyze(final).disjoint
        totals.add(report.total_added)
    assert totals <= {4, 8}
