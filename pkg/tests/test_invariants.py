import pytest

from seifert_flatten import (
    CrossingLimitError,
    LaurentPolynomial,
    compare_diagrams,
    jones_polynomial,
    kauffman_bracket,
    reflect,
    shift_labels,
    writhe,
)
from seifert_flatten.invariants import state_sum_bracket
from seifert_flatten.table import TABLE, bundled


def test_unknot_and_kinks():
    assert kauffman_bracket(bundled("unknot")) == 1
    assert kauffman_bracket(bundled("kink+")) == LaurentPolynomial({3: -1})
    assert kauffman_bracket(bundled("kink-")) == LaurentPolynomial({-3: -1})
    for name in ("unknot", "kink+", "kink-"):
        assert jones_polynomial(bundled(name)) == 1


def test_writhe_values():
    assert writhe(bundled("unknot")) == 0
    assert writhe(bundled("kink+")) == 1
    assert writhe(bundled("trefoil-braid")) == 3


def test_frontier_matches_state_sum(small_corpus):
    for d in small_corpus[:80]:
        assert kauffman_bracket(d) == state_sum_bracket(d)


def test_trefoil_jones():
    # t + t^3 - t^4 with t = A^-4
    expected = LaurentPolynomial({-4: 1, -12: 1, -16: -1})
    assert jones_polynomial(bundled("trefoil-braid")) == expected
    assert jones_polynomial(bundled("trefoil")) == expected


def test_mirror_inverts_variable(small_corpus):
    for d in small_corpus[:30]:
        assert kauffman_bracket(reflect(d)) == kauffman_bracket(d).substitute_power(-1)


def test_label_shift_invariance(small_corpus):
    for d in small_corpus[:30]:
        for k in (1, 3):
            assert kauffman_bracket(shift_labels(d, k)) == kauffman_bracket(d)


def test_limit():
    d = bundled("figure-eight-flat")
    with pytest.raises(CrossingLimitError):
        kauffman_bracket(d, limit=4)


def test_limit_from_environment(monkeypatch):
    monkeypatch.setenv("SEIFERT_FLATTEN_BRACKET_LIMIT", "3")
    with pytest.raises(CrossingLimitError):
        kauffman_bracket(bundled("figure-eight"))


def test_compare():
    same = compare_diagrams(bundled("trefoil"), bundled("trefoil"))
    assert same.all_equal and same.delta_crossings == 0
    diff = compare_diagrams(bundled("trefoil-braid"), bundled("unknot"))
    assert not diff.jones_equal and not diff.all_equal
    f8 = compare_diagrams(bundled("figure-eight"), bundled("figure-eight-flat"))
    assert f8.all_equal and f8.delta_crossings == 4 and f8.delta_circuits == 4


@pytest.mark.parametrize("name", list(TABLE))
def test_table_jones(name):
    assert jones_polynomial(bundled(name)).terms() == list(TABLE[name].jones)
