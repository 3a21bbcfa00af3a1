"""Exact quantum torus arithmetic and periodicity checks for quantum T-systems of type A_n x A_ell."""
from .cartan import (
    CartanSeries,
    GammaTable,
    build_cartan_series,
    coefficient_exponent_ft,
    default_pmax,
    gamma,
)
from .charmap import (
    DominantFamily,
    LatticeMapReport,
    eval_highest,
    independence_check,
    kr_beta_highest,
    lattice_cases,
    lattice_highest,
    lattice_map,
    thm41_dominant_family,
)
from .errors import (
    DivisionError,
    DominanceError,
    OverlapError,
    QTSystemError,
    TruncationError,
    WindowError,
)
from .laurent import TCoefficient
from .torus import QuantumTorus, TorusElement
from .tsystem import (
    CheckReport,
    OrbitTable,
    Phase,
    Relation,
    SystemConfig,
    boundary_cell,
    boundary_index,
    boundary_value,
    evolve,
    initial_value,
    orbit_from_json,
    orbit_to_json,
    relations,
    render_relation,
    verify,
)
from .ymonomial import (
    YMonomial,
    a_decompose,
    a_monomial,
    kr_monomial,
    nakajima_below,
    torus_to_y,
)

__version__ = "0.1.0"
