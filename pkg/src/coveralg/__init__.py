"""Exact Hilbert series of vertex cover algebras of Cohen-Macaulay bipartite graphs.

Every Cohen-Macaulay bipartite graph comes from a naturally labeled finite
poset; all entry points take a :class:`~coveralg.poset.Poset`.  Elements are
0-indexed in the Python API and 1-indexed in files and CLI output.
"""

from .covers import (
    BipartiteGraph,
    VertexCover,
    cover_to_ideal,
    generator_monomial,
    graph_from_poset,
    ideal_to_cover,
    is_k_cover,
    is_unmixed,
    minimal_covers_naive,
    minimal_covers_recursive,
)
from .errors import (
    CoverAlgError,
    CycleError,
    DomainError,
    InconsistentInputError,
    NotAnIdealError,
    NotMinimalError,
    NotNaturallyLabeledError,
    SizeLimitError,
)
from .hilbert import (
    HilbertSeries,
    HVector,
    a_invariant,
    antichain_series,
    basic_h_vector,
    basic_hilbert_series,
    chain_series,
    check_shape,
    corollary_hvect_count,
    cover_algebra_h_vector,
    cover_algebra_hilbert_series,
    cover_algebra_hilbert_series_rational,
    eulerian,
    hilbert_function,
    multiplicity,
)
from .lattice import (
    IdealLattice,
    delta,
    enumerate_ideals,
    f_to_h,
    is_ideal,
    order_complex_f_vector,
    phi,
    psi,
)
from .poset import (
    DescentProfile,
    Poset,
    antichain,
    chain,
    from_cover_relations,
    induced_subposet,
    is_isomorphic,
    linear_extensions_by_descents,
    natural_relabel,
    random_poset,
)

__version__ = "0.1.0"
