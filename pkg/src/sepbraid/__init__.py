"""Braids of point motions known only through a separation predicate."""

from .arrangement import (
    Arrangement,
    Axis,
    arrangement_of_configuration,
    config_in_cell,
    embed,
    incomparable_pairs,
    intersect,
    is_arrangement,
    permutation_point_in,
    point_in_cell,
    relabel,
)
from .boxes import count_box_arrangements
from .braids import (
    BraidWord,
    Permutation,
    PermutationPoint,
    act_on_point,
    braids_equal,
    compose,
    elementary_braid,
    free_reduce,
    normal_form,
    permutation_of_braid,
)
from .cover import cover, cover_steps
from .engine import (
    BraidResult,
    braid_of_cover,
    braid_stream,
    bridge_to_canonical,
    canonical_point,
    close_loop,
)
from .engine import compose as compose_results
from .exceptions import (
    BraidError,
    ClosureError,
    ContractViolation,
    EmptyIntersectionError,
    InputError,
    NonGenericPathError,
    SepError,
)
from .oracle import discontinuity_times, exact_braid, ord_permutation
from .paths import (
    PathApproximation,
    PLPath,
    PLTube,
    SepResult,
    SeparationTable,
    interval_eval,
    load_path,
    sep_exact,
    sep_tube,
)
from .pointed import PointedArrangement

__version__ = "0.1.0"
