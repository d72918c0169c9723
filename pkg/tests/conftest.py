import pytest

from qlattice import CommutationGraph

B3_SPEC = {"artin": {"generators": ["s", "t"], "m": [[1, 3], [3, 1]]}}


@pytest.fixture(scope="session")
def free2():
    return CommutationGraph([("a", "Z"), ("b", "Z")], [])


@pytest.fixture(scope="session")
def path3():
    return CommutationGraph(
        [("a", "Z"), ("b", "Z"), ("c", "Z")], [("a", "b"), ("b", "c")]
    )


@pytest.fixture(scope="session")
def b3():
    return CommutationGraph([("v", B3_SPEC)], [])


@pytest.fixture(scope="session")
def mixed():
    """One Z vertex joined by an edge to one B3 vertex."""
    return CommutationGraph([("a", "Z"), ("v", B3_SPEC)], [("a", "v")])


def braid(graph, num, den=""):
    ops = graph.ops["v"]
    return ops.element(tuple(num), tuple(den))


def nw(graph, *pairs):
    """Normal word from (vertex, element) pairs; strings are braid words."""
    sylls = []
    for vertex, elem in pairs:
        if isinstance(elem, str):
            elem = braid(graph, elem)
        sylls.append(graph.syllable(vertex, elem))
    return graph.reduce(sylls)
