import networkx as nx
from hypothesis import settings, strategies as st

from lmdim.graph import Graph

# Fixed example generation keeps test_output.txt reproducible.
settings.register_profile("repro", derandomize=True)
settings.load_profile("repro")


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.order))
    out.add_edges_from(g.edges)
    return out


def from_nx(x: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(x.nodes))}
    return Graph(len(idx), tuple((idx[u], idx[v]) for u, v in x.edges))


@st.composite
def graphs(draw, min_order=1, max_order=10, connected=False):
    n = draw(st.integers(min_order, max_order))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        # A random spanning path keeps the graph connected.
        perm = draw(st.permutations(range(n)))
        chosen = set(chosen) | {tuple(sorted(p)) for p in zip(perm, perm[1:])}
    return Graph(n, tuple(chosen))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[key])
