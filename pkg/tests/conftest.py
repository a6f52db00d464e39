import pytest

from clusterglue.seeds import initial_seed


@pytest.fixture
def left_path():
    """One mutable x1 between frozens x2 -> x1 -> x3, all degrees 1."""
    return initial_seed(
        [("x1", False, 1), ("x2", True, 1), ("x3", True, 1)],
        arrows=[("x2", "x1", 1), ("x1", "x3", 1)],
    )


@pytest.fixture
def right_path():
    """Mirror factor: y3 -> y1 -> y2, all degrees 1."""
    return initial_seed(
        [("y1", False, 1), ("y2", True, 1), ("y3", True, 1)],
        arrows=[("y3", "y1", 1), ("y1", "y2", 1)],
    )


@pytest.fixture
def a2_seed():
    """A2 pair of mutables plus a disconnected frozen."""
    return initial_seed(
        [("x1", False, 0), ("x2", False, 0), ("f", True, 1)],
        arrows=[("x1", "x2", 1)],
    )


@pytest.fixture
def markov_seed():
    """Mutation-infinite three-cycle with doubled arrows plus a dummy frozen."""
    return initial_seed(
        [("m1", False, 1), ("m2", False, 1), ("m3", False, 1), ("f", True, 1)],
        arrows=[("m1", "m2", 2), ("m2", "m3", 2), ("m3", "m1", 2)],
    )
