"""Exact-arithmetic block combinatorics for cyclotomic rational Cherednik and
Ariki-Koike style categories: Scopes chambers, RoCK tests, and RoCK block
construction, all over the affine root system of sl_e.
"""

__version__ = "0.1.0"

from .abacus import (
    Abacus,
    abacus_from_multipartition,
    can_push_bead,
    multipartition_from_abacus,
    parse_ascii,
    render_ascii,
    runner_census,
    swap_runners,
)
from .blocks import (
    TCoordinates,
    block_of_multipartition,
    is_dominant,
    validate_multipartition,
    weight_from_block,
)
from .oracle import (
    BudgetExceededError,
    EnumerationBudget,
    enumerate_block,
    oracle_in_support,
    oracle_wall_bounds,
)
from .root_system import (
    Block,
    Context,
    DomainError,
    OutOfSupportError,
    Point,
    Root,
    add_root,
    base_point,
    cartan_entry,
    coroot_pairing,
    in_support,
    reflect_block,
    reflect_point,
)
from .scopes import (
    ChamberSignature,
    PairCheck,
    RockReport,
    WallBounds,
    all_rocks,
    canonical_scopes_signature,
    find_dom_w_chamber,
    find_dominant,
    find_n,
    render_report,
    rock_weight,
    scopes_equivalent,
    scopes_signature,
    test_rock,
)

__all__ = [
    "__version__",
    "Abacus",
    "Block",
    "BudgetExceededError",
    "ChamberSignature",
    "Context",
    "DomainError",
    "EnumerationBudget",
    "OutOfSupportError",
    "PairCheck",
    "Point",
    "RockReport",
    "Root",
    "TCoordinates",
    "WallBounds",
    "abacus_from_multipartition",
    "add_root",
    "all_rocks",
    "base_point",
    "block_of_multipartition",
    "can_push_bead",
    "canonical_scopes_signature",
    "cartan_entry",
    "coroot_pairing",
    "enumerate_block",
    "find_dom_w_chamber",
    "find_dominant",
    "find_n",
    "in_support",
    "is_dominant",
    "multipartition_from_abacus",
    "oracle_in_support",
    "oracle_wall_bounds",
    "parse_ascii",
    "reflect_block",
    "reflect_point",
    "render_ascii",
    "render_report",
    "rock_weight",
    "runner_census",
    "scopes_equivalent",
    "scopes_signature",
    "swap_runners",
    "test_rock",
    "validate_multipartition",
    "weight_from_block",
]
