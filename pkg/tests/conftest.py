import pytest
from hypothesis import settings

from hog.core import build_graph

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@pytest.fixture
def figure_eight():
    """Two 2-cycles sharing the hub node h."""
    return build_graph(
        ["h", "p", "q"],
        [("a0", "h", "p"), ("a1", "p", "h"), ("a2", "h", "q"), ("a3", "q", "h")],
    )


@pytest.fixture
def two_way_pair():
    """Nodes u, v with parallel arcs a, b: u->v and c: v->u."""
    return build_graph(["u", "v"], [("a", "u", "v"), ("b", "u", "v"), ("c", "v", "u")])
