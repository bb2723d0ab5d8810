"""lat2d: continuous complete invariants, metrics and chirality measures
for two-dimensional lattices, with inverse design of bases from invariants."""

from lat2d.backend import BACKEND
from lat2d.chirality import projected_chirality, root_chirality, signed_chirality
from lat2d.design import (
    cell_area,
    lattice_mix,
    reconstruction_angle_from_pi,
    ri_dot,
    ri_from_pi,
    superbase_from_ri,
)
from lat2d.errors import (
    DegenerateBasis,
    DegeneratePath,
    InconsistentSign,
    InsufficientLength,
    InvalidPI,
    InvalidParams,
    LatticeError,
    NonTermination,
    NotObtuse,
    OutsideObt,
    UnsupportedQ,
)
from lat2d.geometry import (
    Basis,
    Conorms,
    Superbase,
    Vec2,
    Vonorms,
    conorms,
    make_superbase,
    norm_from_coefficients,
    reduce_to_obtuse,
    vonorms,
)
from lat2d.invariants import (
    OrientedProjectedInvariant,
    OrientedRootInvariant,
    ProjectedInvariant,
    RootInvariant,
    is_mirror_symmetric,
    metric_tensor,
    oriented_projected_invariant,
    oriented_root_invariant,
    projected_invariant,
    reduced_basis,
    root_invariant,
    sign_of,
    sign_via_region,
    size,
)
from lat2d.metrics import (
    coform_cyclic_metric,
    max_sum_moduli,
    oriented_projected_metric,
    oriented_root_metric,
    projected_metric,
    root_metric,
    superbase_isometry_metric,
)
from lat2d.neighbors import (
    DistanceSequence,
    VoronoiVectorSet,
    extract_vonorms_from_rsd,
    kth_distance_oracle,
    rsd,
    voronoi_vectors,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Basis",
    "Conorms",
    "DegenerateBasis",
    "DegeneratePath",
    "DistanceSequence",
    "InconsistentSign",
    "InsufficientLength",
    "InvalidPI",
    "InvalidParams",
    "LatticeError",
    "NonTermination",
    "NotObtuse",
    "OrientedProjectedInvariant",
    "OrientedRootInvariant",
    "OutsideObt",
    "ProjectedInvariant",
    "RootInvariant",
    "Superbase",
    "UnsupportedQ",
    "Vec2",
    "Vonorms",
    "VoronoiVectorSet",
    "cell_area",
    "coform_cyclic_metric",
    "conorms",
    "extract_vonorms_from_rsd",
    "is_mirror_symmetric",
    "kth_distance_oracle",
    "lattice_mix",
    "make_superbase",
    "max_sum_moduli",
    "metric_tensor",
    "norm_from_coefficients",
    "oriented_projected_invariant",
    "oriented_projected_metric",
    "oriented_root_invariant",
    "oriented_root_metric",
    "projected_chirality",
    "projected_invariant",
    "projected_metric",
    "reconstruction_angle_from_pi",
    "reduce_to_obtuse",
    "reduced_basis",
    "ri_dot",
    "ri_from_pi",
    "root_chirality",
    "root_invariant",
    "root_metric",
    "rsd",
    "sign_of",
    "sign_via_region",
    "signed_chirality",
    "size",
    "superbase_from_ri",
    "superbase_isometry_metric",
    "voronoi_vectors",
    "vonorms",
]
