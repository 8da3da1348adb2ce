import json
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tanglecolor import (ConwayWord, ZERO_TANGLE, build_rational, count_colorings,
                         parse_any, parse_conway, parse_knot_pd, parse_tangle_file,
                         serialize_diagram, serialize_report)
from tanglecolor.coloring import boundary_space
from tanglecolor.errors import (EmptyWordError, LabelArityError, MissingBoundaryError,
                                NotationSyntaxError, OddBoundaryError, ParseError)
from tanglecolor.notation import INFINITY_WORD

from conftest import GOLDEN_DIAGRAMS, GOLDEN_TANGLES, random_words

TREFOIL = "X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n"


def test_parse_trefoil():
    D = parse_knot_pd(TREFOIL)
    assert len(D.crossings) == 3
    assert D.edges == frozenset(range(1, 7))
    assert D.free_loops == 0
    assert D.crossings[0].under == (1, 2)
    assert D.crossings[0].over == (4, 5)


def test_parse_free_loop_and_kink():
    D = parse_knot_pd("O")
    assert (len(D.crossings), D.free_loops) == (0, 1)
    D = parse_knot_pd("X 1 2 2 1")
    assert len(D.crossings) == 1


def test_comments_and_blank_lines():
    D = parse_knot_pd("# trefoil\n\nX 1 4 2 5  # first\nX 3 6 4 1\n   \nX 5 2 6 3\n")
    assert D == parse_knot_pd(TREFOIL)


def test_parse_tangles():
    zero = parse_tangle_file("B 1 1 2 2")
    assert zero.n == 2 and zero.crossings == ()
    inf = parse_tangle_file("B 1 2 2 1")
    assert inf.boundary == (1, 2, 2, 1)
    plus = parse_tangle_file("X 2 1 4 3\nB 1 2 3 4")
    assert plus.n == 2 and plus.crossings[0].over == (1, 3)
    six = parse_tangle_file("B 1 1 2 2 3 3")
    assert six.n == 3


@pytest.mark.parametrize("text, error, line", [
    ("X 1 2 3", NotationSyntaxError, 1),
    ("X 1 4 2 5\nY 1 2", NotationSyntaxError, 2),
    ("X 1 2 2 a", NotationSyntaxError, 1),
    ("X 1 2 2 0", NotationSyntaxError, 1),
    ("X 1 2 2 -1", NotationSyntaxError, 1),
    ("O 3", NotationSyntaxError, 1),
    ("B 1 1", NotationSyntaxError, 1),
    ("X 1 2 3 4", LabelArityError, 1),
    ("X 1 1 2 2\n\nX 1 3 3 4", LabelArityError, 3),
])
def test_knot_pd_errors(text, error, line):
    with pytest.raises(error) as info:
        parse_knot_pd(text)
    assert info.value.lineno == line


@pytest.mark.parametrize("text, error", [
    ("X 1 2 2 1", MissingBoundaryError),
    ("B 1 1 2", OddBoundaryError),
    ("B", NotationSyntaxError),
    ("B 1 1\nB 2 2", NotationSyntaxError),
    ("X 2 1 4 3\nB 1 2 3", OddBoundaryError),
    ("X 2 1 4 3\nB 1 2 3 5", LabelArityError),
    ("B 1 1 1 1", LabelArityError),
])
def test_tangle_errors(text, error):
    with pytest.raises(error) as info:
        parse_tangle_file(text)
    assert isinstance(info.value.lineno, int)


def test_label_arity_once_and_thrice():
    with pytest.raises(LabelArityError):
        parse_knot_pd("X 1 2 2 3")
    with pytest.raises(LabelArityError):
        parse_knot_pd("X 1 1 1 2\nX 2 3 3 4\nX 4 5 5 6")


def test_conway():
    assert parse_conway("2 3 -2") == ConwayWord((2, 3, -2))
    assert parse_conway("0").entries == (0,)
    assert parse_conway("inf") is INFINITY_WORD
    with pytest.raises(EmptyWordError):
        parse_conway("")
    with pytest.raises(EmptyWordError):
        parse_conway("   ")
    with pytest.raises(NotationSyntaxError):
        parse_conway("1 x")
    with pytest.raises(NotationSyntaxError):
        parse_conway("0 0")


def test_serialize_report_examples():
    report = count_colorings(parse_knot_pd(TREFOIL), 3)
    text = serialize_report(report)
    assert text.startswith('{"p":3,"nullity":2,"count":"9",')
    assert json.loads(text)["nontrivial"] is True
    assert serialize_report({"determinant": str(3)}) == '{"determinant":"3"}'
    space = boundary_space(parse_tangle_file("X 2 1 4 3\nB 1 2 3 4"), 5).space
    assert serialize_report(space) == '{"p":5,"dim":2,"rref":[[1,0,1,2],[0,1,0,4]]}'


def test_big_counts_are_strings():
    D = parse_knot_pd("O\n" * 40)
    record = json.loads(serialize_report(count_colorings(D, 13)))
    assert record["count"] == str(13 ** 40)


def _multiset(D):
    return Counter(D.crossings)


@pytest.mark.parametrize("name", GOLDEN_DIAGRAMS + GOLDEN_TANGLES)
def test_roundtrip_golden(golden, name):
    D = golden(name)
    E = parse_any(serialize_diagram(D))
    assert type(E) is type(D)
    assert _multiset(E) == _multiset(D)
    assert E.boundary == D.boundary
    assert E.free_loops == D.free_loops


def test_roundtrip_rational():
    for w in random_words(5, 40):
        T = build_rational(w)
        assert parse_tangle_file(serialize_diagram(T)) == T
    assert parse_tangle_file(serialize_diagram(ZERO_TANGLE)) == ZERO_TANGLE


statement = st.one_of(
    st.builds(lambda xs: "X " + " ".join(xs),
              st.lists(st.sampled_from(["1", "2", "3", "4", "0", "-1", "a", "5"]),
                       min_size=0, max_size=5)),
    st.just("O"), st.just("O 1"), st.just("# note"), st.just(""),
    st.builds(lambda xs: "B " + " ".join(map(str, xs)),
              st.lists(st.integers(-1, 5), max_size=6)),
    st.text(max_size=8),
)


@settings(max_examples=400, deadline=None)
@given(st.lists(statement, max_size=6))
def test_parser_totality(lines):
    text = "\n".join(lines)
    for parse in (parse_knot_pd, parse_tangle_file, parse_any):
        try:
            parse(text)
        except ParseError as exc:
            assert exc.lineno >= 1
            assert exc.category
