"""Rigid Young tableaux, lattice-path triangles and weight-multiplicity oracles."""
from .tableaux_core import (
    BoundExceeded, Tableau, count_syt, enumerate_syt, staircase, strict_sequence, tableau_from_strict_sequence,
)
from .rigid_tableaux import (
    RigidIndex, count_sB, count_sD, enumerate_almost_even, enumerate_parity, enumerate_sB, enumerate_sD,
    is_rigid, is_spin_rigid,
)
from .lattice_paths import catalan, enumerate_paths, motzkin, pascal, riordan, triangle
from .insertion_schemes import (
    insert_box, partition_level3, reverse_rigid_jdt, rigid_jdt, tableau_to_motzkin, tableau_to_pascal_path,
)
from .rs_bijections import phi, phi_inverse, rs, rs_inverse
from .closed_formulas import FORMULAS, selberg, s_kt
from .lie_oracle import (
    AffineWeight, affine_kac_enumerate, cartan, check_conjecture, freudenthal, staircase_index, verify_theorem_7x,
)
from .young_walls import (
    GroundState, TensorWall, YoungWall, connected_component_count, content, crystal_e, crystal_f, s_index,
    signature, tensor_e, tensor_f, wall_from_partition,
)

__version__ = "0.1.0"

__all__ = [
    "BoundExceeded", "Tableau", "count_syt", "enumerate_syt", "staircase", "strict_sequence",
    "tableau_from_strict_sequence", "RigidIndex", "count_sB", "count_sD", "enumerate_almost_even",
    "enumerate_parity", "enumerate_sB", "enumerate_sD", "is_rigid", "is_spin_rigid", "catalan",
    "enumerate_paths", "motzkin", "pascal", "riordan", "triangle", "insert_box", "partition_level3",
    "reverse_rigid_jdt", "rigid_jdt", "tableau_to_motzkin", "tableau_to_pascal_path", "phi", "phi_inverse",
    "rs", "rs_inverse", "FORMULAS", "selberg", "s_kt", "AffineWeight", "affine_kac_enumerate", "cartan",
    "check_conjecture", "freudenthal", "staircase_index", "verify_theorem_7x", "GroundState", "TensorWall",
    "YoungWall", "connected_component_count", "content", "crystal_e", "crystal_f", "s_index", "signature",
    "tensor_e", "tensor_f", "wall_from_partition",
]
