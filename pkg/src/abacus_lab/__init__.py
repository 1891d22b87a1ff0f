from .errors import AbacusError, PreconditionError, PropertyViolation, ValidationError
from .partition import (
    OrderRelation,
    Partition,
    RimHook,
    conjugate,
    dominance,
    e_divisible_hooks,
    e_rim,
    is_e_regular,
    j_map,
    lex_compare,
    parse_partition,
    proper_e_rim,
    remove_rim_hook,
    rim_hook,
)
from .abacus import (
    BetaSet,
    bd,
    beta_set,
    e_core,
    e_core_weight,
    emp,
    emp_range,
    format_beta_set,
    parse_beta_set,
    partition_of,
    render_abacus,
    same_core,
    size_of,
)
from .runner import (
    CombinedPair,
    RunnerMatrix,
    admissible,
    combined_runner_matrix,
    is_d_combined_pair,
    runner_matrix_of_beta_set,
    runner_matrix_of_partition,
    validate_de,
)
from .hooks import HookClassReport, classify_beta_set, classify_partition, regularity_from_balance
from .involution import (
    AmaTrace,
    LeadingBeads,
    Ms,
    ama,
    ama_trace,
    leading_beads,
    ms,
    mullineux,
    proper_rim_removal_via_abacus,
    xu_recursive,
)
from .extremal import (
    FamilyResult,
    SwapLog,
    a1,
    a2,
    greedy_max,
    maximize,
    min_weight_and_family,
    minimize,
    no_skewed_exists,
)
from .oracle import SweepConfig, enumerate_e_regular, enumerate_partitions, partition_count, run_sweep

__version__ = "0.1.0"
