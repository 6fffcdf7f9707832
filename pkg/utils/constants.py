"""Numeric defaults shared across modules."""

# Finite differences
FD_STEP_GRADIENT = 1e-5          # oracle step for gradients of game losses
FD_STEP_OBJECTIVE = 1e-4         # gradients of Lyapunov objectives (third-order quantities)
FD_STEP_OPERATOR_JAC = 1e-6      # Jacobian of operators without an exact derivative (LOLA)

# Optimizer trajectories
DIVERGENCE_BOUND = 1e6

# IPD
IPD_DEFAULT_GAMMA = 0.96
# Per-step losses over joint actions (CC, CD, DC, DD) for (player A, player B)
IPD_DEFAULT_LOSS_TABLE = (
    (1.0, 1.0),
    (3.0, 0.0),
    (0.0, 3.0),
    (2.0, 2.0),
)
SMALL_IPD_DEFECT_RESPONSE = 0.01
MIXED_GAME_DEFAULT_TAU = 0.25

# Optimizer defaults exposed in reports
IPD_LOLA_ALPHA = 1.0
IPD_LOLA_ETA = 10.0

# Tree search
REBRANCH_TOL = 1e-3
MAX_DEPTH = 3
DEDUP_RADIUS = 0.05
LAMBDA_FLOOR = 0.1

# Eigensolvers
JACOBI_MAX_SWEEPS = 100
QR_ITERATIONS_PER_DIM2 = 100

# Bifurcation checks
NORMAL_FORM_STEP = 1e-4
THIRD_DERIVATIVE_STEP = 1e-3
NEWTON_MAX_ITER = 50
HOPF_OFFSET_MU = 0.04
HOPF_START_RADIUS = 0.05

# Environment
THREADS_ENV_VAR = "RIDGEWALK_THREADS"
CONFIG_FILE_NAME = "ridgewalk.config.json"
