"""Nondecreasing Dyck paths, Elena trees and their generating functions."""

from .core import (
    DEFAULT_LIMITS,
    BadAlphabet,
    BadToken,
    BudgetExceeded,
    DyckPath,
    ElenaError,
    ElenaWord,
    GrammarViolation,
    IdentityViolated,
    LimitExceeded,
    Limits,
    NonBalanced,
    NotElenaShape,
    NotNondecreasing,
    PlantedPlaneTree,
    StatRecord,
    TooTall,
    TrailingGarbage,
    Tree,
    parse_dyck,
    parse_elena_word,
    parse_tree,
    render_dyck,
    render_elena_word,
    render_tree,
)
from .dyck import altitude_profile, dyck_to_tree, enumerate_dyck_paths, is_nondecreasing, tree_to_dyck, valleys
from .elena import (
    count_elenas,
    dyck_to_word,
    enumerate_elenas,
    is_elena_shape,
    tree_to_word,
    word_to_dyck,
    word_to_tree,
)
from .height4 import elena_to_height4, height4_to_elena, interpret_path
from .stats import AggregateRow, aggregate, brute_D, tree_stats

__version__ = "0.1.0"
