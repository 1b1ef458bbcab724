"""Plactic monoid toolkit.

Schensted tableau calculus, the finite complete rewriting system over column
generators with its Gröbner–Shirshov basis export, and the transducer and
pair-automaton constructions witnessing biautomaticity, all verifiable by
exhaustive enumeration at small rank.
"""

from plactic.core import (
    Tableau,
    column_ge,
    column_reading,
    dominates,
    insert,
    is_column,
    is_row,
    knuth_equivalent,
    knuth_relations,
    lds,
    lnds,
    row_reading,
    tableau_of_word,
)
from plactic.errors import (
    DelayExceeded,
    NotInL,
    ParseError,
    PlacticError,
    RankError,
    ResourceLimit,
    ViolationFound,
)
from plactic.kernel import BACKEND as KERNEL_BACKEND
from plactic.rewriting import (
    GsbBasis,
    RewritingSystem,
    all_columns,
    check_termination,
    critical_pairs,
    decode_word,
    encode_word,
    generate_rules,
    gsb_export,
    normalize,
    product_columns,
    rewrite_step,
    word_less,
)

__version__ = "0.1.0"
