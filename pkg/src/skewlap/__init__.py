"""Skew Laplacian energy of oriented graphs.

The core object is ``D~ - S``: the diagonal of out-degree minus in-degree,
minus the skew-adjacency matrix.  Its energy ``sle`` is the sum of the
moduli of its (generally complex) eigenvalues.
"""

from .bounds import (
    BoundCheck,
    BoundsReport,
    Equality,
    bounds_report,
    classify_lower_equality,
    classify_upper_equality,
    comparison_bounds,
    sle_bounds,
    sle_coarse_bounds,
    verify_odd_eulerian_components,
)
from .digraph import (
    Digraph,
    DigonArc,
    DuplicateArc,
    LoopArc,
    ParseError,
    VertexOutOfRange,
    component_count,
    format_edge_list,
    has_isolated_vertices,
    in_degrees,
    is_balanced,
    is_eulerian,
    new_digraph,
    out_degrees,
    parse_edge_list,
    total_degrees,
    weak_components,
)
from .eigen import Spectrum, characteristic_polynomial, eigenvalues, spectral_moment, zero_multiplicity
from .energy import EnergyReport, energy_report, m_invariants, skew_energy, sle
from .families import (
    directed_cycle,
    directed_path,
    oriented_complete_bipartite,
    random_balanced,
    random_oriented,
    random_tournament,
    triangles_plus_isolated,
)

__version__ = "0.1.0"
