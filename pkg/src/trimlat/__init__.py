"""Trimmed zeta/Moebius transforms on the subset lattice, with set-cover counting
and Chromatic/Domatic Number solvers for bounded-degree graphs."""

from .bitlattice import (
    RankFrontier,
    SetFamily,
    SparseTable,
    elements_of,
    mask_of,
    maximal_members,
    minimal_members,
    upper_closure,
)
from .counting import TupleCounts, cover_numbers, packing_numbers, partition_numbers
from .graphs import Graph
from .solvers import chromatic_number, domatic_meet_in_middle, domatic_number
from .transforms import trimmed_moebius, trimmed_ranked_zeta, trimmed_zeta, yates_transform

__version__ = "0.1.0"
