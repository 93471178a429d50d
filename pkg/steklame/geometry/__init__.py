from .boundaries import (  # noqa: F401
    TWO_PI,
    Boundary,
    CurvePoint,
    FourierBoundary,
    SupportBoundary,
    eval_curve,
    periodic_nodes,
)
from .functionals import (  # noqa: F401
    area,
    best_fit_circle,
    boundary_centroid,
    boundary_moment,
    convexity_margin,
    convexity_rows,
    disk_radius,
    perimeter,
)
from .sampling import (  # noqa: F401
    BoundarySample,
    DiscreteBoundary,
    PerturbationField,
    VelocityField,
    discretize,
    perturbation_field,
    point_in_polygon,
    sample_boundary,
)
from .storage import (  # noqa: F401
    BoundaryStorage,
    JsonBoundaryStorage,
    dump_boundary,
    load_boundary,
)
