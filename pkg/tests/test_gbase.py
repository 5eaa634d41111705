import pytest
from hypothesis import given

from braidnf.errors import MalformedGBaseError
from braidnf.gbase import (
    SEPARATOR,
    GBaseWord,
    Link,
    endpoints_permutation,
    format_gbase,
    parse_gbase,
    standard_gbase,
    validate,
)
from braidnf.reduction import reduce

from conftest import valid_gbases

FIGURE_TEXT = (
    "(-1,0) (1,1) (2,0) (-1,0) (1,0) (-1,0) (4,0) (-1,0) (4,1) (3,0) (-1,0)"
)


def links(*pairs):
    return tuple(Link(p, q) for p, q in pairs)


def test_standard_gbase_small():
    assert standard_gbase(1).links == links((-1, 0), (1, 0), (-1, 0))
    assert standard_gbase(2).links == links((-1, 0), (1, 0), (-1, 0), (2, 0), (-1, 0))


def test_standard_gbase_shape():
    g = standard_gbase(4)
    assert sum(1 for l in g.links if l == SEPARATOR) == 5
    assert [l.point for l in g.links if l.position == 0 and l != SEPARATOR] == [1, 2, 3, 4]


@pytest.mark.parametrize("n", [1, 2, 3, 7])
def test_standard_gbase_is_reduced_straight_segment_encoding(n):
    # encoding each straight segment with its below-passes and reducing
    # must land on the emitted form: rule 4 deletes every below-pass
    raw = [SEPARATOR]
    for point in range(1, n + 1):
        raw.extend(Link(j, -1) for j in range(1, point))
        raw.append(Link(point, 0))
        raw.append(SEPARATOR)
    assert reduce(GBaseWord(n, tuple(raw))) == standard_gbase(n)
    assert validate(standard_gbase(n), reduced_expected=True) is None


def test_standard_gbase_rejects_bad_strand_count():
    with pytest.raises(MalformedGBaseError):
        standard_gbase(0)


def test_validate_accepts_standard():
    assert validate(standard_gbase(3), reduced_expected=True) is None


def test_validate_flags_below_pass_after_separator():
    g = GBaseWord(1, links((-1, 0), (1, -1), (1, 0), (-1, 0)))
    assert validate(g) is None  # structurally fine, just unreduced
    violation = validate(g, reduced_expected=True)
    assert violation is not None and violation.index == 1
    assert "below-pass" in violation.reason


def test_validate_flags_repeated_endpoint():
    g = GBaseWord(2, links((-1, 0), (1, 0), (-1, 0), (1, 0), (-1, 0)))
    violation = validate(g)
    assert violation is not None and "permutation" in violation.reason


@pytest.mark.parametrize(
    "n, pairs, fragment",
    [
        (1, [(1, 0)], "start with"),
        (1, [(-1, 0), (1, 0)], "end with"),
        (1, [(-1, 0), (-1, 0)], "no endpoint"),
        (1, [(-1, 0), (1, 1), (-1, 0)], "no endpoint"),
        (2, [(-1, 0), (1, 0), (2, 0), (-1, 0)], "second position-0"),
        (1, [(-1, 0), (1, 0), (-1, 0), (1, 0), (-1, 0)], "separators"),
        (1, [(-1, 0), (3, 1), (1, 0), (-1, 0)], "out of range"),
        (1, [(-1, 0), (1, 1), (0, -1), (1, 0), (-1, 0)], "not adjacent to a separator"),
        (1, [(-1, 0), (2, 1), (1, 0), (-1, 0)], "virtual point 2 must have position -1"),
    ],
)
def test_validate_flags_structural_violations(n, pairs, fragment):
    g = GBaseWord(n, links(*pairs))
    violation = validate(g)
    assert violation is not None
    assert fragment in violation.reason


def test_figure_list_parses_and_round_trips():
    g = parse_gbase(FIGURE_TEXT, 4)
    assert validate(g, reduced_expected=True) is None
    assert format_gbase(g) == FIGURE_TEXT
    assert endpoints_permutation(g) == (2, 1, 4, 3)


def test_format_standard():
    assert format_gbase(standard_gbase(2)) == "(-1,0) (1,0) (-1,0) (2,0) (-1,0)"


@pytest.mark.parametrize("text", ["(0,2)", "(1;0)", "1,0", "(a,b)", "(1,0,2)"])
def test_parse_rejects_malformed_tokens(text):
    with pytest.raises(MalformedGBaseError):
        parse_gbase(text, 3)


def test_parse_rejects_structurally_invalid():
    with pytest.raises(MalformedGBaseError):
        parse_gbase("(-1,0) (1,0) (-1,0) (1,0) (-1,0)", 2)


@given(valid_gbases())
def test_parse_format_round_trip(gbase):
    assert parse_gbase(format_gbase(gbase), gbase.strand_count) == gbase


def test_endpoints_permutation_standard_is_identity():
    for n in (1, 2, 5):
        assert endpoints_permutation(standard_gbase(n)) == tuple(range(1, n + 1))


def test_paths_iteration():
    g = parse_gbase(FIGURE_TEXT, 4)
    assert [len(p) for p in g.paths()] == [2, 1, 1, 2]
