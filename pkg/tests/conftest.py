import random

import pytest
from hypothesis import strategies as st

from pauli_dla.pauli import PauliString


@st.composite
def paulis(draw, n=None, max_n=6):
    n = n or draw(st.integers(1, max_n))
    a = draw(st.integers(0, (1 << n) - 1))
    b = draw(st.integers(0, (1 << n) - 1))
    c = draw(st.integers(0, 3))
    return PauliString(n, a, b, c)


@st.composite
def pauli_pairs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    return draw(paulis(n)), draw(paulis(n))


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_multigraph(rng, max_k=12, max_edges=20):
    """Random loopless multigraph whose line graph is connected."""
    from pauli_dla.graphs import MultiGraph, line_graph

    while True:
        k = rng.randint(2, max_k)
        count = rng.randint(1, max_edges)
        inst = []
        # a random tree first keeps most samples connected
        for v in range(1, k):
            if len(inst) < count:
                inst.append((rng.randrange(v), v))
        while len(inst) < count:
            u, v = rng.sample(range(k), 2)
            inst.append((min(u, v), max(u, v)))
        used = sorted({x for e in inst for x in e})
        relabel = {x: i for i, x in enumerate(used)}
        d = MultiGraph.from_instances(len(used), [(relabel[u], relabel[v]) for u, v in inst])
        g, _ = line_graph(d)
        if g.is_connected():
            return d


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
