import pytest

from dynbsuitor import DynamicGraph, run_static

# six nodes v0..v5 with b = 2 everywhere; small enough to trace by hand
WORKED_EDGES = [
    (0, 1, 1.0),
    (0, 2, 1.0),
    (1, 2, 1.0),
    (1, 3, 1.0),
    (2, 3, 2.0),
    (3, 4, 9.0),
    (3, 5, 4.0),
    (4, 5, 6.0),
]
WORKED_B = [2] * 6
WORKED_MATCHING = {(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)}
WORKED_QUEUES = {0: {2, 1}, 1: {2, 0}, 2: {1, 0}, 3: {5, 4}, 4: {3, 5}, 5: {3, 4}}

# Two saturated endpoints whose repair paths overlap, leaving one loose end.
LOOSE_NAMES = "u uadd startU startUadd v2 v2add v1 v1add startV startVadd vl v vadd".split()
LOOSE_EDGES = [
    ("u", "uadd", 20), ("u", "startU", 5), ("startU", "startUadd", 20), ("startU", "v2", 4),
    ("v2", "v1", 3), ("v2", "v2add", 20), ("v1", "v1add", 20), ("v1", "startV", 2),
    ("startV", "startVadd", 20), ("startV", "vl", 2.2), ("startV", "v", 2.5), ("v", "vadd", 20),
]


@pytest.fixture
def worked_graph():
    return DynamicGraph(6, WORKED_EDGES)


@pytest.fixture
def worked_state(worked_graph):
    return run_static(worked_graph, WORKED_B)


def loose_end_instance():
    ix = {name: i for i, name in enumerate(LOOSE_NAMES)}
    g = DynamicGraph(len(LOOSE_NAMES), [(ix[a], ix[b], float(w)) for a, b, w in LOOSE_EDGES])
    return g, [2] * len(LOOSE_NAMES), ix
