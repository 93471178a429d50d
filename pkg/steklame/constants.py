THREADS_ENV_VAR = "STEKLAME_THREADS"
DEFAULT_THREADS = 1

FILE_ENCODING = "utf-8"
OUTPUT_DIR_PERMISSIONS = 0o755

# geometry
DEFAULT_QUADRATURE_NODES = 512
DEFAULT_CONVEXITY_GRID = 256
SIMPLICITY_SAMPLES = 512
MIN_SPEED = 1e-12
CONVEXITY_TOLERANCE = 1e-10

# mfs
DEFAULT_ALPHA = 0.015
DEFAULT_IM_TOL = 1e-6
DEFAULT_ZERO_TOL_FACTOR = 1e-6
DEFAULT_RESIDUAL_TOL = 1e-6
CONVERGENCE_RESIDUAL_TOL = 1e-2
DEFAULT_CLUSTER_GAP = 1e-4
DEFAULT_CHECK_FACTOR = 4
MIN_SOURCES = 8
KERNEL_MIN_DISTANCE = 1e-12
MIN_TRACE_NORM = 1e-8
RIGID_MOTION_COUNT = 3

# disk
TIE_RTOL = 1e-12

# shape optimization
SIMPLE_GAP = 1e-3
DEFAULT_INITIAL_STEP = 1e-2
MAX_BACKTRACKS = 20
CLUSTER_STEP_FACTOR = 0.5
DEFAULT_N_SCHEDULE = (64, 128, 256)
DEFAULT_CONVEXITY_FLOOR = 1e-3

# output
CONFIG_FILENAME = "config.json"
ITERATIONS_FILENAME = "iterations.csv"
BOUNDARY_FILENAME = "boundary.json"
SPECTRUM_FILENAME = "spectrum.csv"
SUMMARY_FILENAME = "summary.json"
EIGENFUNCTION_FILENAME = "eigenfunction_{index}.csv"
