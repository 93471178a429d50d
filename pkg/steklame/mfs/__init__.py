from .certificate import Certificate, residual_certificate  # noqa: F401
from .fields import (  # noqa: F401
    CertifiablePair,
    boundary_gram,
    eigenfunction_grid,
    eval_eigenfunction,
    kelvin_displacement,
    kelvin_jacobian,
    trace_fields,
)
from .pencil import (  # noqa: F401
    Pencil,
    assemble,
    collocation_matrices,
    condition_estimate,
)
from .solver import (  # noqa: F401
    EigenPair,
    Spectrum,
    compute_spectrum,
    orthonormalize_cluster,
    first_value_cutoff,
    rigid_motion_cutoff,
    solve_spectrum,
)
