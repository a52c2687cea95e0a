"""
Central constants and configuration values for locmat.

This module consolidates the tunables used across the package: field tables,
verification defaults and environment variable names.
"""

# ============================================================================
# Field Constants
# ============================================================================

# Characteristics 2 and 3 are excluded
MIN_CHARACTERISTIC = 5

# Default irreducible moduli for GF(p^k), coefficients in ascending degree.
# Every entry is monic; irreducibility is re-checked on construction.
DEFAULT_MODULI = {
    (5, 2): (3, 0, 1),  # t^2 - 2
    (5, 3): (1, 1, 0, 1),  # t^3 + t + 1
    (7, 2): (4, 0, 1),  # t^2 - 3
    (7, 3): (5, 0, 0, 1),  # t^3 - 2
    (11, 2): (9, 0, 1),  # t^2 - 2
    (11, 3): (4, 1, 0, 1),  # t^3 + t + 4
    (13, 2): (11, 0, 1),  # t^2 - 2
    (13, 3): (11, 0, 0, 1),  # t^3 - 2
}

# Largest extension degree accepted for caller-supplied moduli
MAX_EXTENSION_DEGREE = 6

# ============================================================================
# Group Constants
# ============================================================================

# Upper bound on k in the brute-force SL membership scan
SL_ORACLE_K_MAX = 1000

# Smallest period at which descriptors are compared (transvections need two indices).
# Descriptors are probed at n and 2n; at period 2 alone psi agrees with an inner map on SL_2
DESCRIPTOR_PROBE_MIN_PERIOD = 2

# ============================================================================
# Verification Constants
# ============================================================================

DEFAULT_SEED = 42
DEFAULT_TRIALS = 200
SUITE_NAMES = ("steinitz", "permatrix", "groups", "homothety", "autos")

# Periods sampled by the randomized suites
SUITE_PERIODS = (1, 2, 3, 4, 6)

# Worker threads for running suites side by side
SUITE_WORKERS = 4

# ============================================================================
# Environment
# ============================================================================

ENV_SEED = "LOCMAT_SEED"
ENV_LOG_LEVEL = "LOCMAT_LOG_LEVEL"
LOG_DIR_NAME = ".locmat"
LOG_FILE_NAME = "locmat.log"
