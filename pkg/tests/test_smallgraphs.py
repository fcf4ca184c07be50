"""Exhaustive enumeration of small locally bipartite graphs."""

import os

import pytest

from locolor.graph import GraphError
from locolor.smallgraphs import enumerate_smallest_4chromatic_locally_bipartite


def test_no_witnesses_up_to_five():
    report = enumerate_smallest_4chromatic_locally_bipartite(5)
    assert report.counts == {1: 0, 2: 0, 3: 0, 4: 0, 5: 0}
    assert report.smallest_witness_order is None


def test_no_witnesses_at_six():
    report = enumerate_smallest_4chromatic_locally_bipartite(6)
    assert all(count == 0 for count in report.counts.values())


def test_max_n_validation():
    with pytest.raises(GraphError):
        enumerate_smallest_4chromatic_locally_bipartite(8)
    with pytest.raises(GraphError):
        enumerate_smallest_4chromatic_locally_bipartite(0)


@pytest.mark.skipif(
    not os.environ.get("LOCOLOR_SLOW_TESTS"),
    reason="full 7-vertex scan takes about half a minute; set LOCOLOR_SLOW_TESTS=1",
)
def test_witnesses_appear_at_seven():
    report = enumerate_smallest_4chromatic_locally_bipartite(7)
    assert all(report.counts[n] == 0 for n in range(1, 7))
    assert report.counts[7] > 0
    assert report.h0_among_witnesses
