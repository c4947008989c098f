import pytest
from hypothesis import given
from hypothesis import strategies as st

from reqmine import (
    DuplicateHeader,
    EmptyInput,
    NonBinaryValue,
    RaggedRow,
    ResponseMatrix,
    attribute_frequencies,
    parse_survey,
    select_top_requirements,
    serialize_survey,
)

PAPER_TOP_FIVE = [
    "Random question",
    "Custom Mash up",
    "eTutor teaches according to the level",
    "Choose look of etutor",
    "concise_knowledge",
]


@st.composite
def matrices(draw, max_rows=20, max_cols=8):
    m = draw(st.integers(1, max_cols))
    n = draw(st.integers(1, max_rows))
    names = [f"a{j}" for j in range(m)]
    rows = draw(st.lists(st.lists(st.integers(0, 1), min_size=m, max_size=m), min_size=n, max_size=n))
    return ResponseMatrix(tuple(names), tuple(map(tuple, rows)))


def test_minimal_input():
    mat = parse_survey("A,B\n1,0\n")
    assert mat.attribute_names == ("A", "B")
    assert mat.rows == ((1, 0),)


def test_crlf_and_missing_trailing_newline():
    assert parse_survey("A,B\r\n1,0\r\n0,1") == parse_survey("A,B\n1,0\n0,1\n")


def test_figure1_shape(figure1_text):
    mat = parse_survey(figure1_text)
    assert (mat.n_rows, mat.n_attributes) == (19, 10)


@pytest.mark.parametrize(
    "text, exc, line, column",
    [
        ("A,B\n1,2\n", NonBinaryValue, 2, 2),
        ("A,B\n1,0\n1\n", RaggedRow, 3, None),
        ("A,B\n1,0,1\n", RaggedRow, 2, None),
        ("A,A\n1,0\n", DuplicateHeader, 1, 2),
        ("A,,B\n1,0,1\n", DuplicateHeader, 1, 2),
        ("", EmptyInput, 1, None),
        ("A,B\n", EmptyInput, 2, None),
        ("A,B\n1,0\n\n0,1\n", RaggedRow, 3, None),
        ("A,B\n1, 0\n", NonBinaryValue, 2, 2),
        ("A,B\n1,\n", NonBinaryValue, 2, 2),
    ],
)
def test_parse_errors_name_location(text, exc, line, column):
    with pytest.raises(exc) as info:
        parse_survey(text)
    assert info.value.line == line
    assert info.value.column == column
    assert f"line {line}" in str(info.value)


def test_frequencies():
    mat = ResponseMatrix(("a", "b"), ((1, 1), (1, 1), (1, 1)))
    assert attribute_frequencies(mat) == [1.0, 1.0]
    mat = ResponseMatrix(("a", "b"), ((1, 0), (1, 1), (0, 0), (1, 1)))
    assert attribute_frequencies(mat) == [0.75, 0.5]


def test_figure1_custom_mashup_is_universal(figure1_text):
    mat = parse_survey(figure1_text)
    freqs = attribute_frequencies(mat)
    assert freqs[mat.index_of("Custom Mash up")] == 1.0


def test_select_top():
    assert select_top_requirements([0.9, 0.2], 0.5) == [0]
    assert select_top_requirements([0.6, 0.6], 0.5) == [0, 1]
    assert select_top_requirements([0.2, 0.7, 0.9, 0.7], 0.5) == [2, 1, 3]


def test_figure1_top_contains_named_five(figure1_text):
    mat = parse_survey(figure1_text)
    top = select_top_requirements(attribute_frequencies(mat), 0.5)
    names = {mat.attribute_names[j] for j in top}
    assert set(PAPER_TOP_FIVE) <= names


@given(matrices())
def test_round_trip(mat):
    assert parse_survey(serialize_survey(mat)) == mat


@given(matrices())
def test_frequency_counts_sum_to_ones(mat):
    n = mat.n_rows
    total = sum(round(f * n) for f in attribute_frequencies(mat))
    assert total == sum(map(sum, mat.rows))
    for f in attribute_frequencies(mat):
        assert 0.0 <= f <= 1.0
        assert abs(f * n - round(f * n)) < 1e-9


@given(st.lists(st.floats(0, 1), min_size=1, max_size=12), st.floats(0, 1))
def test_top_selection_properties(freqs, threshold):
    assert select_top_requirements(freqs, 0.0) == sorted(range(len(freqs)), key=lambda j: (-freqs[j], j))
    assert select_top_requirements(freqs, 1.5) == []
    top = select_top_requirements(freqs, threshold)
    assert all(freqs[j] >= threshold for j in top)
    assert len(top) == sum(f >= threshold for f in freqs)
    for a, b in zip(top, top[1:]):
        assert freqs[a] > freqs[b] or (freqs[a] == freqs[b] and a < b)
