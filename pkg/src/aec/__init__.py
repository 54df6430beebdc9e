"""Acyclic edge coloring of 4-regular graphs with at most six colors."""

__version__ = "0.1.0"

from .bichromatic import (  # noqa: E402
    BichromaticCycle,
    BichromaticPath,
    ColorState,
    enumerate_bichromatic_cycles,
    exists_ij_path,
    maximal_path_from,
    tau,
)
from .coloring import (  # noqa: E402
    K,
    ColorPermutation,
    EdgeColoring,
    Infeasible,
    color_set,
    find_anchor_permutation,
    misra_gries,
    permute_colors,
    proper_edge_coloring,
)
from .cycle_breaker import BreakStats, break_cycle, color_triangle_free, fallback_search  # noqa: E402
from .generator import GenSpec, named, random_regular  # noqa: E402
from .graph import (  # noqa: E402
    Graph,
    SurgerySpec,
    apply_surgery,
    block_decomposition,
    from_edge_list,
    is_simple_4_regular,
    triangles_at,
)
from .reducer import (  # noqa: E402
    ReduceStats,
    TriangleConfig,
    acyclic_edge_coloring,
    build_reduction,
    classify_triangle_config,
    color_4_regular,
    extend_coloring,
    solve_delta4,
)
from .solvers import SolverBudget, acyclic_chromatic_index, exact_color, heuristic_color  # noqa: E402
from .verifier import Verdict, verify  # noqa: E402
