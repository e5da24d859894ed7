"""graphgroups: symbolic computation in trace monoids, right-angled Artin
groups, one-relator groups and generalised Baumslag-Solitar groups.

The library provides canonical normal forms and word problems (trace, raag,
concrete_groups), folded subgroup graphs of free groups (stallings), explicit
embedding maps with bounded brute-force verification (embeddings), and the
C*-simplicity / P_nai classification for GBS data and one-relator
presentations (gbs, one_relator).  Everything is exact: integers, rationals
and canonical forms, no floating point.
"""

from . import (
    concrete_groups,
    embeddings,
    gbs,
    graphs,
    one_relator,
    raag,
    stallings,
    trace,
    verification,
    words,
)
from .errors import GraphGroupsError

__all__ = [
    "GraphGroupsError",
    "concrete_groups",
    "embeddings",
    "gbs",
    "graphs",
    "one_relator",
    "raag",
    "stallings",
    "trace",
    "verification",
    "words",
]

__version__ = "0.1.0"
