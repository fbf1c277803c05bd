"""Fixtures shared across test modules."""

from __future__ import annotations

from pathlib import Path

from bishops import SignedGraph

DATA_DIR = Path(__file__).parent / "data"


def example_clique_fixture() -> SignedGraph:
    """Seven-piece signed graph whose positive cliques are {1,2},
    {3,4,5}, {6,7} and negative cliques {1,3}, {2,4}, {5,6}, {7}.

    Its clique graph is a bipartite 8-node graph with one edge per
    piece; fixing x_1, y_2, x_3, x_4, y_5, x_7, y_7 turns the doubled
    clique graph into a spanning negative 1-forest.
    """
    return SignedGraph(7, (
        (1, 2, +1),
        (3, 4, +1),
        (4, 5, +1),
        (6, 7, +1),
        (1, 3, -1),
        (2, 4, -1),
        (5, 6, -1),
    ))


FIXTURE_FIXATION_COORDINATES = (
    ("x", 1),
    ("y", 2),
    ("x", 3),
    ("x", 4),
    ("y", 5),
    ("x", 7),
    ("y", 7),
)
