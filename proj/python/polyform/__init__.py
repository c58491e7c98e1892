"""Exact combinatorial structure counts for genus-0 polyhedra.

Everything is integer arithmetic on face multisets and tetrahedral
complexes; no geometry is computed or assumed.  The heavy lifting lives
in the compiled `_polyform` extension; this package only re-exports it.
"""

from ._polyform import (
    PolyformError,
    audit,
    audit_file,
    boundary_from_interior,
    census,
    check,
    enumerate_face_types,
    enumerate_vertex_types,
    extended_euler,
    external_bounds,
    fixture_sets,
    flatness_series,
    heuristic_prune,
    internal_ranges,
    pair_combination_count,
    partition_count,
    replay,
    restricted_partition_count,
    salt_ladder,
    vertex_estimate,
)

__all__ = [
    "PolyformError",
    "audit",
    "audit_file",
    "boundary_from_interior",
    "census",
    "check",
    "enumerate_face_types",
    "enumerate_vertex_types",
    "extended_euler",
    "external_bounds",
    "fixture_sets",
    "flatness_series",
    "heuristic_prune",
    "internal_ranges",
    "pair_combination_count",
    "partition_count",
    "replay",
    "restricted_partition_count",
    "salt_ladder",
    "vertex_estimate",
]
