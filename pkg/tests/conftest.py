import pytest

from coveralg.poset import from_cover_relations


@pytest.fixture
def p3():
    """p1 <= p2 and p1 <= p3."""
    return from_cover_relations(3, [(1, 2), (1, 3)])
