"""Position-heap indexing and matching for parameterized strings.

Build an index over a text whose symbols split into constants and
parameters, then find every substring that equals a pattern up to a
consistent renaming of the parameter symbols. Construction is online and
runs in near-linear time; queries cost roughly the pattern length times the
alphabet-lookup cost plus the number of occurrences. The ``oracle`` module
holds deliberately naive reference implementations for cross-validation.
"""

from .augment import Augmentation, augment, compute_mrp, preorder_intervals, subtree_positions
from .coding import (
    Alphabet,
    IncrementalEncoder,
    PrevLabel,
    PrevString,
    PString,
    PSymbol,
    Symbol,
    make_alphabet,
    norm,
    p_match_eq,
    parse_alphabet_lines,
    parse_pstring,
    prev_encode,
    render_prev,
)
from .dot import to_dot
from .errors import (
    AlphabetFormatError,
    DuplicateSymbol,
    EmptyPattern,
    IndexFormatError,
    InvalidNode,
    OverlappingAlphabet,
    PPHeapError,
    StructuralError,
    UnknownSymbol,
)
from .heap import (
    BOTTOM,
    ROOT,
    Builder,
    IndexStats,
    PPHIndex,
    audit_index,
    build_index,
    new_builder,
)
from .matching import SegmentWalk, match_pattern, segment_walk
from .oracle import NaiveTree, naive_match, naive_mrp, naive_pph, naive_sequence_hash_tree, trees_equal
from .selftest import TrialFailure, letters_alphabet, run_selftest
from .storage import IndexBundle, dumps, load, loads, read_alphabet_file, save

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AlphabetFormatError",
    "Augmentation",
    "BOTTOM",
    "Builder",
    "DuplicateSymbol",
    "EmptyPattern",
    "IncrementalEncoder",
    "IndexBundle",
    "IndexFormatError",
    "IndexStats",
    "InvalidNode",
    "NaiveTree",
    "OverlappingAlphabet",
    "PPHIndex",
    "PPHeapError",
    "PString",
    "PSymbol",
    "PrevLabel",
    "PrevString",
    "ROOT",
    "SegmentWalk",
    "StructuralError",
    "Symbol",
    "TrialFailure",
    "UnknownSymbol",
    "audit_index",
    "augment",
    "build_index",
    "compute_mrp",
    "dumps",
    "letters_alphabet",
    "load",
    "loads",
    "make_alphabet",
    "match_pattern",
    "naive_match",
    "naive_mrp",
    "naive_pph",
    "naive_sequence_hash_tree",
    "new_builder",
    "norm",
    "p_match_eq",
    "parse_alphabet_lines",
    "parse_pstring",
    "preorder_intervals",
    "prev_encode",
    "read_alphabet_file",
    "render_prev",
    "run_selftest",
    "save",
    "segment_walk",
    "subtree_positions",
    "to_dot",
    "trees_equal",
]
