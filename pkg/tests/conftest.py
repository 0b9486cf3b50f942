import pytest

from hypercrit import Hypergraph
from hypercrit.search import complete_uniform, corpus, fano, paper_example_4v, star, triangle


@pytest.fixture
def fano_plane():
    return fano()


@pytest.fixture
def tri():
    return triangle()


@pytest.fixture
def ex4():
    return paper_example_4v()


@pytest.fixture
def star2():
    return star(2)


@pytest.fixture
def k35():
    return complete_uniform(3)


@pytest.fixture(scope="session")
def small_corpus():
    """Isomorph-free H_r members: n <= 5, at most 6 edges, rank 2..4."""
    return corpus(n_max=5, max_edges=6, max_rank=4)


def hg(n, *edges):
    return Hypergraph(n, edges)
