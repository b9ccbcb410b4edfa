"""Exact verification of a flag-algebra bound on edge/triangle decompositions."""

from .certificate import CertificateReport, quadratic_form_sweep, verify_lemma
from .cliquelp import (
    Decomposition,
    PackingResult,
    max_fractional_triangle_packing,
    max_integer_triangle_packing,
    pi3,
    pi3f,
)
from .decomposer import AveragingPlan, averaging_decomposition, corollary_check, greedy_decomposition
from .flags import CertificateMatrix, coefficient_cu, pair_density_expectation, seven_flags
from .graphs import (
    CanonicalGraph,
    Graph,
    are_isomorphic,
    canonical_form,
    density,
    enumerate_graphs,
    parse_graph6,
    write_graph6,
)

__version__ = "0.1.0"
