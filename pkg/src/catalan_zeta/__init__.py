"""Property (A) words, Dyck paths, the zeta map and planted trees."""

from .dyck import (
    AreaSequence,
    DyckPath,
    area,
    area_sequence_of,
    bounce,
    dinv,
    enumerate_paths,
    inner_touch_points,
    path_from_area_sequence,
    returns,
    rises,
    validate_path,
)
from .errors import (
    BelowDiagonal,
    CatalanError,
    NotAreaSequence,
    NotPropertyA,
    NotPropertyB,
    NotSingleReturn,
    NotZetaImageShape,
    TooFewCrucial,
    TooFewReturns,
    TooFewRises,
    UnbalancedPath,
)
from .pipeline import path_to_word, strip, word_to_path, wrap
from .trees import (
    PlantedTree,
    StatTable,
    area_sequence_from_tree,
    crucial_vertices,
    speyer_step,
    speyer_step_inverse,
    stat_table,
    tree_from_area_sequence,
    tree_operator,
    tutte_polynomial,
)
from .words import PropertyReport, Word, a_to_b, b_to_a, classify, enumerate_words_A
from .zeta import (
    bounce_counts,
    bounce_path_of_counts,
    c3_to_single_return_holds,
    zeros_to_rises_holds,
    zeta,
    zeta_inverse,
)

__version__ = "0.1.0"
