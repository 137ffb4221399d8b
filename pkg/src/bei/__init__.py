"""Binomial edge ideal toolkit.

Construct edge-binomial ideals of connected graphs, enumerate their
minimal primes from vertex cut sets, decide the approximately
Cohen-Macaulay classification for trees and cycles, evaluate the
closed-form Hilbert series of the supported families, and cross-check
everything against an exact Groebner-basis kernel.
"""

from .classify import (
    APPROX_CM,
    COHEN_MACAULAY,
    NOT_APPROX_CM,
    UNKNOWN,
    Verdict,
    classify,
    is_three_star_like,
    necessary_condition,
)
from .cutsets import (
    ENUMERATION_CAP,
    EnumerationCapError,
    PrimeComponent,
    assh,
    dimension,
    equidimensional_part,
    is_minimal_cut_set,
    minimal_primes,
    prime_generators,
)
from .graphs import (
    Graph,
    GraphError,
    GraphSpec,
    build_graph,
    degree,
    delete_vertices,
    graph_from_spec,
    load_edge_list,
)
from .groebner import (
    DEFAULT_PAIR_BUDGET,
    BudgetExceededError,
    buchberger,
    is_groebner_basis,
    normal_form,
    s_polynomial,
)
from .ideals import (
    Ideal,
    binomial_edge_generators,
    binomial_edge_ideal,
    edge_binomial,
    hilbert_series_ideal,
    hilbert_series_monomial,
    ideal_colon_ideal,
    ideal_equal,
    ideal_intersection,
    ideal_quotient,
    is_zero_dimensional,
    universe_for_graph,
)
from .poly import (
    DEGREVLEX,
    LEX,
    MonomialOrder,
    Polynomial,
    VariableUniverse,
    elim_block,
    format_polynomial,
    parse_polynomial,
)
from .series import (
    HilbertSeries,
    SeriesError,
    attach_pendant,
    h_vector,
    multiplicity,
    series_aux,
    series_complete,
    series_cycle,
    series_line,
    series_tree,
)
from .verify import (
    SuiteReport,
    VerifyConfig,
    closed_form_series,
    run_all,
    verify_aux_series,
    verify_colon_identities,
    verify_decomposition,
    verify_h_vector_symmetry,
    verify_pendant_invariance,
    verify_series,
    verify_sop_cycle,
)

__version__ = "0.1.0"
