"""Vertex-transitive countable structures at desk scale.

RAAG Cayley digraphs and their partial-order closures, the Z^alpha linear
orders with condensation and ordinal codes, and the tournament coding of
bi-infinite binary words with its decoder.
"""
__version__ = "0.1.0"

SCHEMA_VERSIONS = {
    "digraph": 1,
    "simple_graph": 1,
    "bit_window": 1,
    "grid_tournament": 1,
    "one_sided_word": 1,
    "order_code": 1,
    "suite_report": 1,
}

from .cayley import CayleyBall, cayley_ball, check_acyclic, check_local_transitivity  # noqa: E402
from .core import LabeledDigraph, SimpleGraph, are_isomorphic, graph_isomorphic  # noqa: E402
from .equiv import OneSidedWord, e0_equivalent, e_z_equivalent  # noqa: E402
from .linord import (  # noqa: E402
    ZElement,
    classify_vt,
    code_compare_with_symbolic,
    condense,
    parse_order,
    z_compare,
    z_power_code,
)
from .ordinals import Ordinal, ord_compare, ordinal_iso  # noqa: E402
from .poset import recover_generator_arcs, transitive_closure  # noqa: E402
from .raag import CommutationGraph, normal_form, parse_word, words_equal  # noqa: E402
from .tournament import (  # noqa: E402
    BitWindow,
    GridTournament,
    build_tournament,
    check_genericity,
    decode,
    identify_columns,
    phi_isomorphism_check,
    shift_equivalent,
    three_cycle_set,
    translation_check,
)
