"""Commutator subgroups of right-angled Artin groups and graph products.

Enumerates the minimal iterated-commutator generating sets, decides freeness
through chordality, evaluates the counting formulas, and checks them against
free-group reduction, grid cycle ranks and cellular homology.
"""

from .combinatorics import (
    Graph,
    SimplicialComplex,
    clique_complex,
    connected_components,
    is_chordal,
    is_flag,
    missing_face,
    restriction,
)
from .errors import BoundError, ConsistencyError, ValidationError, VerificationError
from .freegroup import Word, commutator, exponent_sums, invert, multiply, parse_word, realize_nested, reduce, swap_expand
from .generators import (
    CommutatorDescriptor,
    CountReport,
    coefficient_of,
    count_J,
    count_P,
    count_W_closed,
    count_W_recursive,
    enumerate_descriptors,
)
from .graphproduct import CyclicGroup, GPDescriptor, VertexGroupSpec, enumerate_gp_descriptors, gp_is_free_kernel
from .rewriting import FactorizedWord, decompose_loop, express_in_basis, lift_path, rewrite_f2
from .topology import (
    build_cube_complex,
    build_grid,
    cycle_rank,
    h1_rank_and_torsion,
    nontree_loop_word,
    paper_spanning_tree,
)

__version__ = "0.1.0"
