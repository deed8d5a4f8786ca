"""Polar and monopolar partitions of 3-colourable comparability graphs.

Exact partition solvers with brute-force oracles, comparability recognition,
the clause gadget and its certificate, and the reduction from positive
1-in-3-SAT to monopolarity.
"""

from .comparability import (
    Orientation,
    chain_coloring,
    find_transitive_orientation,
    is_3col_comparability,
    is_comparability,
    is_transitive,
    sinks,
)
from .gadget import ClauseGadget, GadgetCertificate, build_q, default_gadget, verify_clause_gadget, verify_q
from .graph import Graph, complement, disjoint_union, double, induced, make_graph
from .partition import (
    Partition,
    PartitionKind,
    enumerate_monopolar,
    solve_monopolar,
    solve_polar,
    solve_unipolar,
    validate,
)
from .reduction import Formula, build_reduction, brute_force_1in3, check_1in3, parse_formula

__version__ = "0.1.0"
