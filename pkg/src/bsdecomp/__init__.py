"""Exact-rational decomposition of Betti diagrams into pure diagrams."""

from .diagram import Diagram, ZERO, format_betti, parse_betti, render_grid
from .errors import (
    BettiFormatError,
    BsdecompError,
    EmptyColumn,
    LengthMismatch,
    NonPositiveDegree,
    NotADegreeSequence,
    NotInCone,
    RequiresStrictDegrees,
    SizeExceeded,
    UnsupportedCodimension,
)
from .pure import (
    check_degree_sequence,
    delta,
    format_sequence,
    leq,
    min_degree_sequence,
    parse_sequence,
    pure,
    sigma,
)
from .koszul import CIType, koszul_betti, normalize
from .greedy import (
    EliminationTable,
    GreedyTrace,
    PureDecomposition,
    elimination_table,
    greedy_decompose,
    verify_symmetric,
)
from .closed_forms import (
    FirstElimination,
    closed_form_decomposition,
    codim4_first_elimination,
    verify_closed_form,
)
from .shuffle import (
    PureSum,
    ci_shuffle_decomposition,
    expand_pure_sum,
    prod_of,
    quotient_by_regular_element,
    shuffle_count,
    shuffle_identity_check,
    shuffle_product,
    shuffles,
    tensor,
)
from .census import (
    CensusReport,
    EliminationSignature,
    run_census,
    signature_of,
)

__version__ = "0.1.0"
