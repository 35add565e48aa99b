"""Cyclic permutation groups of prime power order as automorphism groups of
edge-colored complete graphs: classification, witness constructions,
certificates, and an independent closure-based oracle."""

from .cgraph import (
    ColoredGraph,
    edge_color,
    from_json,
    i_degree,
    spanned_subgraph,
    to_dot,
    to_json,
    x_connected,
)
from .autsearch import (
    automorphism_group,
    automorphism_group_bruteforce,
    is_automorphism,
    stabilizer_is_trivial,
)
from .classifier import Verdict, classify, enumerate_specs, in_gr
from .closure import (
    NOT_IN_GR,
    EdgeOrbitPartition,
    EnumerationBudgetError,
    MembershipReport,
    edge_orbits,
    gr_k_membership,
    min_colors,
    two_star_closure,
)
from .constructions import (
    Certificate,
    append_trivial_orbits,
    build_many_orbit_2colored,
    build_mixed_two_power,
    build_order_two,
    build_prime_power_generic,
    build_small_p_many_orbits,
    build_two_nontrivial_3colored,
    build_two_orbit_3colored,
    negative_certificate,
    nie3_certificate,
)
from .permgroup import (
    CyclicSpec,
    OrbitLayout,
    PermGroup,
    Permutation,
    contains,
    cyclic_group,
    dihedral_group,
    direct_sum,
    group_equals,
    parallel_product,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
