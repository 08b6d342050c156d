"""Zeros of wheel tree polynomials of K_n over small prime fields, and their
correspondence with cographs and Seidel switching classes."""

__version__ = "0.1.0"

from .graphs import (
    LabeledGraph,
    Wheel,
    coupled_spanning_trees,
    enumerate_wheels,
    has_induced_c5,
    has_induced_p4,
    induced_subgraph,
    is_cograph,
    is_coupled_spanning_tree,
    parse_graph,
)
from .kernels import default_backend_name
from .pointcount import CountReport, classify_point, count_zeros, tabulate_by_type
from .spseries import count_labeled_cographs, cotree_to_graph, sp_sequence
from .switching import (
    SwitchingClass,
    canonical_representative,
    cograph_to_class,
    count_c5free_classes,
    orbit_has_induced_c5,
    q_switch,
    switch,
)
from .treepoly import IdealSpec, export_polynomial, is_zero_point, tau_eval, tau_eval_expanded_mod2
from .verify import verify_theorem1
from .weights import (
    EdgeWeighting,
    FieldElement,
    classify_type,
    complement_weighting,
    parse_point,
    weight_induced_subgraph,
    weighting_to_graph,
)
