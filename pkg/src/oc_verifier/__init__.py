"""Computational checks of Property O for odd-symplectic Grassmannians IG(k, 2n+1)."""
from .chevalley import (
    PAPER_LITERAL,
    STANDARD,
    ChevalleyExpansion,
    chevalley_mult,
    covers,
    ev_arrow,
    lambda_star,
    lambda_star_star,
    related,
)
from .graph import QuantumBruhatGraph, build_graph, export_dot, period, strongly_connected
from .operator import (
    C1Matrix,
    ChevalleyChain,
    build_c1_matrix,
    canonical_cycle,
    chain_point_to_zero,
    chain_to_point,
    chain_zero_to,
    reachability_T,
    verify_conjecture_T_positive,
    verify_theorem_positive,
)
from .partitions import (
    GrassmannianShape,
    enumerate_basis,
    from_even,
    is_valid_odd,
    make_shape,
    point_partition,
    to_even,
)
from .spectrum import (
    PropertyOReport,
    eigenvalues,
    exact_verdict,
    perron_root,
    property_o_report,
    verify_property_o,
)

__version__ = "0.1.0"
