"""
Simple test data constants for locmat tests.
Minimal, deterministic values with known answers.
"""

# Steinitz expressions and their canonical text
STEINITZ_CASES = [
    ("12", "2^2 * 3"),
    ("3 * 2^inf", "2^inf * 3"),
    ("lcm(12, 18)", "2^2 * 3^2"),
    ("gcd(12, 18)", "2 * 3"),
    ("gcd(12, 2^inf)", "2^2"),
    ("omega", "omega"),
    ("omega(2^3)", "omega(2^3)"),
    ("1", "1"),
]

# Malformed expressions and the position the parser reports
STEINITZ_SYNTAX_ERRORS = [
    ("2 + 3", 2),
    ("2^", 2),
    ("lcm(2, 3", 8),
]

# Row blocks over GF(5)
ROTATION_BLOCK = [[0, 1], [4, 0]]
TRANSVECTION_BLOCK = [[1, 1], [0, 1]]
SINGULAR_BLOCK = [[1, 2], [2, 4]]

# Decomposition of the rotation into t_ij(a) triples
ROTATION_WORD = [(1, 2, 1), (2, 1, 4), (1, 2, 1)]

# Matrix files
MATRIX_JSON = '{"field": "GF(5)", "period": 2, "block": [[1, 1], [0, 1]]}'
SCALAR_TWO_JSON = '{"field": "GF(5)", "period": 1, "block": [["2"]]}'
NONCANONICAL_JSON = '{"field": "GF(5)", "period": 2, "block": [["GF(5):3", "0"], [0, 3]]}'
PERIOD_THREE_JSON = (
    '{"field": "GF(5)", "period": 3, "block": [[2, 0, 0], [0, 1, 0], [0, 0, 1]]}'
)
ROTATION_JSON = '{"field": "GF(5)", "period": 2, "block": [[0, 1], [4, 0]]}'

# Descriptor files
PSI_JSON = '{"psi": true, "frob": 0, "inner": null, "field": "GF(5)"}'
FROB_JSON = '{"psi": false, "frob": 1, "inner": null, "field": "GF(5,2)"}'
