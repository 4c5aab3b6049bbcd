"""Exact Weyl-group invariants of quantised function and Borel algebras at a
root of unity, verified against a finite-dimensional-algebra oracle."""

from .rootsys import (
    CartanData,
    CartanType,
    GoodEll,
    cartan_data,
    cartan_data_from_string,
    cartan_type,
    is_good_ell,
    pairing_matrix_mod_ell,
    parse_cartan_type,
)
from .weyl import (
    WeylElement,
    bruhat_leq,
    enumerate_group,
    from_word,
    length,
    longest_element,
    order,
    parse_word,
    rank_s,
    reduced_word,
    root_sequence,
    stabilizes_weight,
)
from .lattice import (
    EllSubgroup,
    SubLattice,
    a_w_lattice,
    b_w_lattice,
    fixed_lattice,
    normalizer_lattice,
    quotient_invariants,
)
from .invariants import (
    BorelInvariants,
    StratumInvariants,
    StratumPair,
    azumaya_structure,
    block_count_function_algebra,
    borel_invariants,
    dimension_bookkeeping,
    fiber_class,
    is_fully_azumaya,
    rep_type_borel,
    rep_type_function_algebra,
    stratum_invariants,
)
from .skewalg import (
    AbelianAction,
    FDAlgebra,
    blquiv_report,
    build_borel_sl2,
    build_fiber_algebra,
    central_idempotents,
    make_field_char,
    radical,
    skew_product,
    tensor,
)
from .quiver import CayleyGraph, cayley_graph, connected_components, to_dot
from .strata import build_poset, build_table, consistency_sweep

__version__ = "0.1.0"
