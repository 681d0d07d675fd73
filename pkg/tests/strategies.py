import itertools

from hypothesis import strategies as st

from coveralg.poset import from_cover_relations


@st.composite
def natural_posets(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_cover_relations(n, [pr for pr, k in zip(pairs, keep) if k])
