import pytest

from nutcirc.errors import ParameterError
from nutcirc.polyParser import PolyParser
from nutcirc.polynomial import DensePoly, SparsePoly

Q3_TEXT = "5:2,4:1,3:-1,2:1,1:-1,0:-2"


@pytest.fixture
def parser():
    return PolyParser()


def test_parse_sparse(parser):
    assert parser.parseSparse(Q3_TEXT) == SparsePoly({5: 2, 4: 1, 3: -1, 2: 1, 1: -1, 0: -2})
    assert parser.parseSparse(" 2 : 1 , 0 : -1 ") == SparsePoly({2: 1, 0: -1})


def test_empty_text_is_zero(parser):
    assert parser.parseSparse("").isZero()
    assert parser.parse("").isZero()


@pytest.mark.parametrize("text", ["1:1,2:1", "2:1,2:3", "0:0", "x^2", "2:1,", "a:1"])
def test_parse_sparse_rejects(parser, text):
    with pytest.raises(ParameterError):
        parser.parseSparse(text)


def test_parse_dense(parser):
    assert parser.parseDense("-1,0,1") == DensePoly([-1, 0, 1])
    assert parser.parseDense("1,2,0") == DensePoly([1, 2])
    with pytest.raises(ParameterError):
        parser.parseDense("1;2")


def test_parse_dispatches_on_format(parser):
    assert parser.parse("1,1") == SparsePoly({0: 1, 1: 1})
    assert parser.parse("4:1,0:1") == SparsePoly({4: 1, 0: 1})


def test_format_round_trip(parser):
    p = parser.parseSparse(Q3_TEXT)
    assert parser.formatSparse(p) == Q3_TEXT
    assert parser.formatDense(p) == "-2,-1,1,-1,1,2"
    assert parser.formatHuman(p) == "-2-x+x^2-x^3+x^4+2 x^5"


def test_integer_list(parser):
    assert parser.parseIntegerList("1,2,4,5,6,7") == [1, 2, 4, 5, 6, 7]
    with pytest.raises(ParameterError):
        parser.parseIntegerList("1,,2")
