import pytest

from twosided.graphio import (
    GraphParseError,
    dump_intervals,
    format_graph,
    parse_graph,
    parse_intervals,
)
from twosided.model import IntervalSet, Interval


def test_parse_graph_minimal():
    inst = parse_graph("3 2\n1 2\n2 3\n")
    assert inst.n_vertices == 3
    assert inst.edges == ((1, 2), (2, 3))
    assert inst.order == (1, 2, 3)


def test_parse_graph_with_order():
    inst = parse_graph("4 2\n1 3\n2 4\norder: 2 1 3 4\n")
    assert inst.order == (2, 1, 3, 4)


def test_parse_graph_round_trip():
    inst = parse_graph("4 3\n1 2\n3 4\n1 4\norder: 4 3 2 1\n")
    assert parse_graph(format_graph(inst)).edges == inst.edges
    assert parse_graph(format_graph(inst)).order == inst.order


@pytest.mark.parametrize(
    "text",
    [
        "",
        "2\n",
        "2 1\n",
        "2 1\n1 1\n",
        "2 1\n1 x\n",
        "3 1\n1 2\norder: 1 2\n",
        "2 1\n1 2\norder: 1 3\n",
        "2 1\n1 2\ntrailing junk\n",
    ],
)
def test_parse_graph_rejects(text):
    with pytest.raises(GraphParseError):
        parse_graph(text)


def test_interval_dump_round_trip():
    s = IntervalSet(
        (Interval(1, 3, 2, 0), Interval(2, 4, 5, 1)),
        {(0, 1): 2},
    )
    text = dump_intervals(s)
    assert text == "0 1 3 2\n1 2 4 5\npair 0 1 2\n"
    back = parse_intervals(text)
    assert back.intervals == s.intervals
    assert dict(back.pair_weights) == {(0, 1): 2}


def test_parse_intervals_rejects_bad_ids():
    with pytest.raises(GraphParseError):
        parse_intervals("1 1 2 0\n")
