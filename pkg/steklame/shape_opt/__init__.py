from .convexity import least_distance, project_convex  # noqa: F401
from .derivative import (  # noqa: F401
    area_gradient,
    cluster_shape_derivative,
    coefficient_gradient,
    scale_invariant_gradient,
    shape_density,
    shape_derivative,
)
from .optimizer import (  # noqa: F401
    IterationRecord,
    OptState,
    ShapeOptimizer,
    normalize_area,
    random_start,
)
