HERMITIAN_TOL = 1e-12
NORMALIZED_TOL = 1e-12
PROJECTOR_TOL = 1e-10
UNITARY_TOL = 1e-10
PREPARATION_TOL = 1e-10
SPHERE_TOL = 1e-10
VARIANCE_FLOOR = 1e-14
NORM_FLOOR = 1e-14
ORTHONORMAL_REPAIR_TOL = 1e-8
EXACT_ERROR_TOL = 1e-12

# above this ||H t||, e^{-iHt} is built from the eigendecomposition of H
EXPM_NORM_LIMIT = 100.0

# central differences
FD_STEP = 1e-5

# short-time extrapolation: t_k = t0 / 2**k, t0 = RICHARDSON_T0 / ||H - <H>||
RICHARDSON_T0 = 0.1
RICHARDSON_LEVELS = 6
RICHARDSON_RTOL = 1e-8
RICHARDSON_ATOL = 1e-12

MIN_FLOW_STEPS = 1000
FLOW_STEPS_PER_RADIAN = 100

CSV_DIGITS = 17
BRACKET_TOL = 1e-8
DEFAULT_PERFORMANCE = 3
