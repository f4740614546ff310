import pytest

from seifert_flatten import NotRealizableError, ParseError, kauffman_bracket, parse_gauss, parse_pd
from seifert_flatten.gauss import format_gauss, gauss_of, parse_gauss_tokens
from seifert_flatten.table import bundled


def test_one_kink():
    d = parse_gauss("O1+ U1+")
    assert d.n_crossings == 1 and len(d.faces) == 3 and d.sign(0) == 1


def test_trefoil_bracket_matches_table():
    d = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+")
    assert kauffman_bracket(d) == kauffman_bracket(bundled("trefoil"))


def test_parity_violation_is_not_realizable():
    with pytest.raises(NotRealizableError):
        parse_gauss("O1+ U2+ U1+ O2+")


def test_unsigned_crossings_are_searched():
    d = parse_gauss("O1 U2 O3 U1 O2 U3")
    assert d.n_crossings == 3 and len(d.faces) == 5


@pytest.mark.parametrize("code", ["O1+ O1+", "O1+ U2+", "X1+ U1+"])
def test_malformed(code):
    with pytest.raises(ParseError):
        parse_gauss(code)


@pytest.mark.parametrize("name", ["kink+", "kink-", "trefoil", "figure-eight", "figure-eight-flat"])
def test_gauss_round_trip_preserves_bracket(name):
    d = bundled(name)
    tokens = gauss_of(d)
    assert parse_gauss_tokens(format_gauss(tokens)) == tokens
    back = parse_gauss(format_gauss(tokens))
    assert back.n_crossings == d.n_crossings
    assert kauffman_bracket(back) == kauffman_bracket(d)


def test_empty_code_is_round_unknot():
    assert parse_gauss("").is_round_unknot


def test_gauss_of_pd_trefoil():
    d = parse_pd("X[4,2,5,1] X[2,6,3,5] X[6,4,1,3]")
    text = format_gauss(gauss_of(d))
    assert text.count("O") == 3 and text.count("U") == 3
