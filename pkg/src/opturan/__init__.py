"""Outerplanar Turán numbers of cycles and paths.

Closed-form values, certified extremal constructions, k-block decompositions
and a brute-force oracle for small orders.
"""

from .constructions import (
    BlockSpec, Certificate, assemble_blocks, cactus, extremal_cycle_graph, extremal_path_graph,
    realize_block_profile, verify_certificate,
)
from .detect import cycle_spectrum, has_cycle_len, is_pk_free, longest_path_len
from .errors import (
    BudgetExceeded, Disconnected, DomainError, GraphError, Infeasible, NotBiconnected, NotOuterplanar,
    OPTuranError, TooLarge,
)
from .formulas import Family, Regime, TuranValue, ex_cycle, ex_path, ex_path_bounded, ex_path_connected
from .graph import Graph, from_graph6, to_graph6
from .kblock import KBlockDecomposition, k_blocks
from .oracle import brute_ex_cycle, brute_ex_path, enumerate_triangulations
from .outerplane import InnerFace, OuterplaneEmbedding, embed, inner_faces, is_outerplanar

__version__ = "0.1.0"
