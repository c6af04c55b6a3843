"""Finite algebraic structures as Cayley tables.

Axiom checks and classification for one- and two-operation tables, the
structures living inside Z_n, embedded group and field search, and the
"special structure" predicates: a semigroup (monoid, ring, ideal) that is
not a group (field) but has a proper subset that is one.
"""
from .embed import (
    GroupWitness,
    Reason,
    SpecialVerdict,
    brute_force_groups,
    embedded_groups,
    is_special_monoid,
    is_special_semigroup,
    maximal_subgroup_at,
)
from .errors import *  # noqa: F401,F403
from .magma import (
    CayleyTable,
    Kind,
    StructureClass,
    classify_magma,
    is_associative,
    is_refinement,
    new_table,
    restrict,
)
from .modular import OrbitSummary, generated_mul_semigroup, power_orbit, zn_table
from .rings import (
    FieldWitness,
    RingClass,
    RingKind,
    RingTable,
    brute_force_fields,
    classify_ring,
    embedded_fields,
    is_ideal,
    is_special_ideal,
    is_special_ring,
    is_special_subring,
    new_ring,
    restrict_ring,
    zn_ring,
)

__version__ = "0.1.0"
