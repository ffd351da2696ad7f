"""Schubert-cell combinatorics and integral cohomology of real Grassmannians."""

from .checkered import (
    CheckeredDiagram,
    EtaHatTrace,
    FillVariant,
    SignVector,
    checkered_fill,
    epsilon_start,
    eta,
    eta_hat,
    eta_star,
    sign_action,
)
from .cochain import (
    AbelianGroup,
    Coefficients,
    CohomologyTable,
    WeightedLattice,
    boundary_matrix_mod2,
    classify_edges,
    cohomology,
    cohomology_snf_oracle,
    homology,
    is_orientable,
    solve_signs,
)
from .errors import CapacityError, FalsificationError, RangeError, RealGrassError, ValidationError
from .linalg import BinaryMatrix, rank_mod2, smith_normal_form
from .qpoly import (
    IntPolynomial,
    PointCount,
    euler_characteristic,
    fq_point_count,
    gaussian_binomial,
    p_closed,
    p_star_closed,
    p_sum,
    poincare_polynomial,
    reciprocity_check,
)
from .schubert import (
    BruhatGraph,
    CoverEdge,
    GrassmannShape,
    Partition,
    SchubertSymbol,
    build_bruhat_graph,
    canonical_reduced_word,
    enumerate_cells,
    lattice_paths,
    partition_to_symbol,
    symbol_to_partition,
)

__version__ = "0.1.0"
