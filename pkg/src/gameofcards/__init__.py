"""The Game of Cards: players on a ring pass cards to poorer right neighbours."""

from .convergence import (
    ConvergenceReport,
    convergence_report,
    convergence_time_q0,
    dominance_compare,
    dominance_longest_chain,
    inactive_player,
    recurrence_bound,
    shot_vector_to_P,
    time_to_P,
)
from .errors import (
    BudgetExceededError,
    CapExceededError,
    DualTargetError,
    GameError,
    MoveNotEnabledError,
    ParameterError,
    UnreachableError,
)
from .kernel import (
    Config,
    GameParams,
    apply_move,
    canonical_dual,
    enabled_positions,
    format_config,
    is_dual,
    is_fixed_point,
    make_params,
    parse_config,
    prefix_delta,
)
from .order import (
    PosetView,
    Relation,
    build_poset,
    compare_gc,
    inf_gc,
    shot_identity_check,
    shot_vector,
    sup_gc,
)
from .statespace import (
    BOT,
    ReachableSet,
    ReducedGraph,
    TransitionGraph,
    build_graph,
    path_exists,
    reachable_set,
    reduce,
    strongly_connected_components,
)

__version__ = "0.1.0"
