import networkx as nx
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hoffman_ds.graph import Graph

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def regular_graphs(draw, max_n=12):
    n = draw(st.integers(4, max_n))
    d = draw(st.integers(1, n - 1).filter(lambda d: n * d % 2 == 0))
    seed = draw(st.integers(0, 10**6))
    return to_graph(nx.random_regular_graph(d, n, seed=seed))


def to_graph(nxg) -> Graph:
    nxg = nx.convert_node_labels_to_integers(nxg)
    return Graph.from_edges(nxg.number_of_nodes(), nxg.edges())


def to_nx(g: Graph):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def random_hoffman(rnd, max_slim=4, max_fat=3):
    """A small random Hoffman graph built from a seeded random.Random."""
    from hoffman_ds.hoffman import make_hoffman

    s = rnd.randint(1, max_slim)
    edges = [(u, v) for u in range(s) for v in range(u + 1, s) if rnd.random() < 0.5]
    slim = Graph.from_edges(s, edges, [f"x{i}" for i in range(s)])
    memberships = []
    for _ in range(rnd.randint(1, max_fat)):
        members = [x for x in range(s) if rnd.random() < 0.5] or [rnd.randrange(s)]
        memberships.append(members)
    return make_hoffman(slim, memberships)


def summand_index(h1, h2, gluing):
    """Where each vertex of h2 lands in direct_sum(h1, h2, gluing)."""
    glued_into = {f2: f1 for f1, f2 in gluing.items()}
    index, pos = {}, h1.underlying.n
    for v in range(h2.underlying.n):
        if v in glued_into:
            index[v] = glued_into[v]
        else:
            index[v] = pos
            pos += 1
    return index


def random_gluing(rnd, h1, h2, size):
    size = min(size, len(h1.fat_vertices), len(h2.fat_vertices))
    f1 = rnd.sample(h1.fat_vertices, size)
    f2 = rnd.sample(h2.fat_vertices, len(f1))
    return dict(zip(f1, f2))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line[1])
