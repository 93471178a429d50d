import math

UNIT_AREA_RADIUS = 1 / math.sqrt(math.pi)

LAMBDA = 1.0
MU = 0.5

# R=1, lambda=1, mu=0.5
DISK_VALUES = [1.0, 1.0, 1.2, 1.2, 1.8, 1.8, 2.0, 2.0]

# R=1, lambda=mu=1
EQUAL_MODULI_DISK_VALUES = [2.0, 2.0, 2.0, 2.0, 3.0, 3.0, 4.0, 4.0, 4.0, 4.0]

OMEGA_ONE_BOUNDARY = {
    "type": "fourier",
    "order": 3,
    "coeffs": {
        "x_cos": [0.0, 1.0, 0.0, 0.0],
        "x_sin": [0.0, 0.0, 0.0],
        "y_cos": [0.0, 0.0, 0.0, 0.0],
        "y_sin": [1.0, 0.0, 0.3],
    },
}

UNIT_CIRCLE_BOUNDARY = {
    "type": "fourier",
    "order": 1,
    "coeffs": {
        "x_cos": [0.0, 1.0],
        "x_sin": [0.0],
        "y_cos": [0.0, 0.0],
        "y_sin": [1.0],
    },
}

ELLIPSE_SUPPORT_BOUNDARY = {
    "type": "support",
    "order": 2,
    "coeffs": {"cos": [1.0, 0.0, 0.1], "sin": [0.0, 0.0]},
}

SAMPLE_RUN_CONFIG = {
    "objective": 1,
    "lambda": LAMBDA,
    "mu": MU,
    "parametrization": "fourier",
    "order": 3,
    "constraint": "area",
    "seed": 7,
    "mfs": {"sources": 48, "alpha": 0.03, "residual_tol": 1e-3},
    "quadrature": {"nodes": 256, "convexity_grid": 64},
    "optimizer": {
        "max_iterations": 3,
        "tolerance": 1e-6,
        "n_schedule": [48],
    },
}

CONVEX_RUN_CONFIG = {
    **SAMPLE_RUN_CONFIG,
    "objective": 3,
    "parametrization": "support",
    "constraint": "convex",
}
