import pytest

from seifert_flatten import (
    BraidWord,
    GeneratorBudgetError,
    analyze,
    closure,
    jones_polynomial,
    random_braid_diagram,
    random_braid_word,
    writhe,
)
from seifert_flatten.table import TABLE, bundled


def test_two_strand_odd_words_are_knots():
    for m in range(4):
        d = closure(BraidWord(2, (1,) * (2 * m + 1)))
        assert len(analyze(d).circuits) == 2


def test_figure_eight_word():
    d = closure(BraidWord(3, (1, -2, 1, -2)))
    assert d == bundled("figure-eight-braid")
    assert jones_polynomial(d).terms() == list(TABLE["figure-eight"].jones)


def test_positive_generator_is_positive_crossing():
    d = closure(BraidWord(2, (1, 1, 1)))
    assert writhe(d) == 3
    assert writhe(closure(BraidWord(2, (-1, -1, -1)))) == -3


def test_two_component_word_rejected():
    w = BraidWord(3, (1, 1))
    assert w.closure_components() == 3 and not w.is_knot()
    with pytest.raises(ValueError):
        closure(w)


def test_generator_is_deterministic_and_resamples():
    assert random_braid_word(3, 4, 1) == random_braid_word(3, 4, 1)
    assert random_braid_diagram(2, 3, 7) == random_braid_diagram(2, 3, 7)
    assert random_braid_word(3, 4, 1).is_knot()
    assert random_braid_diagram(2, 3, 7).n_crossings == 3


def test_generator_budget():
    # an even word on two strands always closes to a two-component link
    with pytest.raises(GeneratorBudgetError):
        random_braid_word(2, 4, 0)


@pytest.mark.parametrize("strands, length", [(1, 3), (7, 3), (3, 0), (3, 17)])
def test_generator_ranges(strands, length):
    with pytest.raises(ValueError):
        random_braid_word(strands, length, 0)
