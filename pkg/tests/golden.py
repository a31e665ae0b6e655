"""Reference values for the worked examples and tables.

Polynomials are kept in factored form as strings; tests expand them with
sympy and compare against the coefficients this package computes.
"""

RUNNING_EXAMPLE = ((0, 3, 2), (1, 2, 0), (2, 0, 2))
RUNNING_P = ((1, 1, 1, 1, 1, 3, 3), (2, 2, 2), (3, 3))
RUNNING_Q = ((1, 1, 1, 2, 2, 3, 3), (2, 2, 2), (3, 3))
RUNNING_BIWORD_TOP = "233111221133"
RUNNING_BIWORD_BOTTOM = "111222223333"

MATRICES = {
    ((1, 1), (1, 1)): [
        [1, 1],
        [0, -1],
    ],
    ((1, 1, 1), (1, 1, 1)): [
        [1, 1, 1, 0, 0, 1],
        [0, 0, 0, 1, 1, -1],
        [0, 0, -1, 0, 0, -1],
        [0, 0, 0, -1, 0, 1],
        [0, 0, 0, 0, -1, 1],
        [0, -1, 0, 0, 0, -1],
    ],
    ((2, 1), (1, 1, 1)): [
        [1, 1, 0],
        [0, 0, 1],
        [0, -1, -1],
    ],
    ((1, 2), (1, 1, 1)): [
        [1, 1, 1],
        [0, -1, 0],
        [0, 0, -1],
    ],
    ((2, 1, 1), (1, 2, 1)): [
        [1, 1, 0, 1, 1, 0, 1],
        [0, 0, 1, 0, 0, 1, -1],
        [0, 0, 0, 0, -1, 0, 0],
        [0, 0, 0, -1, -1, 0, -1],
        [0, 0, -1, 0, 1, 0, 1],
        [0, 0, 0, 0, 0, -1, 1],
        [0, -1, 0, 0, 0, 0, -1],
    ],
    ((4, 3), (2, 2, 3)): [
        [1, 1, 1, 0, 0, 1, 0, 0],
        [0, 0, 0, 1, 1, -1, 0, 1],
        [0, 0, 0, 0, 0, 0, 1, -1],
        [0, -1, -2, -1, -1, -2, 0, -1],
        [0, 0, 0, 0, -1, 2, -2, 0],
        [0, 0, 0, 0, 0, 0, 0, 1],
        [0, 0, 1, 0, 1, 1, 1, 1],
        [0, 0, 0, 0, 0, -1, 0, -1],
    ],
    ((2, 2), (1, 1, 1, 1)): [
        [1, 1, 1, 0, 0, 1],
        [0, 0, 0, 1, 1, 0],
        [0, 0, 0, 0, -1, -1],
        [0, -1, 0, -1, -1, -1],
        [0, 0, -1, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
    ],
    ((3, 2), (2, 1, 1, 1)): [
        [1, 1, 1, 0, 0, 1, 0],
        [0, 0, 0, 1, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 1],
        [0, -1, 0, -1, -1, -1, 0],
        [0, 0, -1, 0, 0, -1, -1],
        [0, 0, 0, 0, -1, 0, -1],
        [0, 0, 0, 0, 1, 1, 1],
    ],
    ((2, 1, 1), (2, 1, 1)): [
        [1, 1, 1, 0, 0, 1, 1],
        [0, 0, 0, 1, 1, -1, 0],
        [0, 0, -1, 0, 0, -1, -1],
        [0, 0, 0, -1, 0, 1, 0],
        [0, 0, 0, 0, -1, 1, 0],
        [0, -1, 0, 0, 0, -1, -1],
        [0, 0, 0, 0, 0, 0, 1],
    ],
    # triangular pairs
    ((3, 5), (3, 2, 3)): [
        [1, 1, 1, 1, 1, 1, 1, 1, 1],
        [0, -1, 0, -2, -1, 0, -2, -1, 0],
        [0, 0, -1, 0, -1, -2, -1, -2, -3],
        [0, 0, 0, 1, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0, 2, 2, 0],
        [0, 0, 0, 0, 0, 1, 0, 1, 3],
        [0, 0, 0, 0, 0, 0, -1, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, -1, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, -1],
    ],
    ((3, 4), (3, 2, 2)): [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [0, -1, 0, -2, -1, 0, -2, -1],
        [0, 0, -1, 0, -1, -2, -1, -2],
        [0, 0, 0, 1, 0, 0, 1, 0],
        [0, 0, 0, 0, 1, 0, 2, 2],
        [0, 0, 0, 0, 0, 1, 0, 1],
        [0, 0, 0, 0, 0, 0, -1, 0],
        [0, 0, 0, 0, 0, 0, 0, -1],
    ],
    ((4, 4), (4, 3, 1)): [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [0, -1, 0, -2, -1, -3, -2, -3],
        [0, 0, -1, 0, -1, 0, -1, -1],
        [0, 0, 0, 1, 0, 3, 1, 3],
        [0, 0, 0, 0, 1, 0, 2, 3],
        [0, 0, 0, 0, 0, -1, 0, -1],
        [0, 0, 0, 0, 0, 0, -1, -3],
        [0, 0, 0, 0, 0, 0, 0, 1],
    ],
}

# basis of R_{35,323} in the reference order
BASIS_35_323 = [
    ((3, 0, 0), (0, 2, 3)), ((2, 1, 0), (1, 1, 3)), ((2, 0, 1), (1, 2, 2)),
    ((1, 2, 0), (2, 0, 3)), ((1, 1, 1), (2, 1, 2)), ((1, 0, 2), (2, 2, 1)),
    ((0, 2, 1), (3, 0, 2)), ((0, 1, 2), (3, 1, 1)), ((0, 0, 3), (3, 2, 0)),
]

# change of basis with psi * RSK_{34,322} * psi^-1 = RSK_{44,431}
PSI = [
    ["1", "0", "0", "0", "0", "-2/3", "0", "0"],
    ["0", "0", "1", "-1", "0", "1", "0", "0"],
    ["-1", "0", "0", "-1", "0", "1", "0", "0"],
    ["0", "0", "0", "0", "0", "1", "0", "0"],
    ["3", "3", "0", "5", "1", "-2", "-1", "0"],
    ["-1", "0", "-1", "0", "0", "-1", "-1", "1/3"],
    ["-3", "-3", "0", "-3", "0", "0", "3", "0"],
    ["2", "1", "1", "1", "0", "1", "0", "0"],
]

# (sigma, pi): (char poly, min poly or None), factored
POLYS = {
    ((1, 1), (1, 1)): ("(t-1)*(t+1)", None),
    ((1, 1, 1), (1, 1, 1)): ("(t-1)*(t+1)**2*(t**3+2*t**2+1)", "(t-1)*(t+1)*(t**3+2*t**2+1)"),
    ((2, 1, 1), (1, 2, 1)): ("(t-1)*(t+1)*(t**5+t**4-3*t**3-2*t**2-t-1)", None),
    ((4, 3), (2, 2, 3)): ("(t-1)**2*(t**2+t+1)**3", "(t-1)**2*(t**2+t+1)**2"),
    ((2, 2), (1, 1, 1, 1)): ("(t-1)**2*(t**2-t-1)*(t**2+t+1)", "(t-1)**2*(t**2-t-1)*(t**2+t+1)"),
    ((3, 2), (2, 1, 1, 1)): ("(t-1)**2*(t**2+t+1)*(t**3+t+1)", "(t-1)**2*(t**2+t+1)*(t**3+t+1)"),
    ((2, 1, 1), (2, 1, 1)): ("(t-1)**2*(t+1)**2*(t**3+2*t**2+1)", "(t-1)**2*(t+1)*(t**3+2*t**2+1)"),
    ((3, 4), (3, 2, 2)): ("(t-1)**4*(t+1)**4", None),
    ((4, 4), (4, 3, 1)): ("(t-1)**4*(t+1)**4", None),
    ((3, 2, 1), (3, 2, 1)): ("(t-1)**3*(t+1)**3*(t**3-2*t**2-1)*(t**3+2*t**2+1)", None),
}

# reduced-pair tables: (sigma, pi, det, trace, char poly factored)
REDUCED = {
    3: [
        ("21", "111", 1, 0, "(t-1)*(t**2+t+1)"),
        ("12", "111", 1, -1, "(t-1)*(t+1)**2"),
        ("111", "111", -1, -3, "(t-1)*(t+1)**2*(t**3+2*t**2+1)"),
    ],
    4: [
        ("22", "211", 1, 0, "(t-1)**2*(t+1)**2"),
        ("22", "121", 1, 1, "(t-1)*(t+1)*(t**2-t-1)"),
        ("22", "112", 1, 1, "(t-1)**2*(t**2+t+1)"),
        ("211", "211", -1, -2, "(t-1)**2*(t+1)**2*(t**3+2*t**2+1)"),
        ("121", "121", -1, -2, "(t-1)**2*(t+1)**2*(t**3+2*t**2+1)"),
        ("112", "112", -1, -2, "(t-1)**2*(t+1)**2*(t**3+2*t**2+1)"),
        ("211", "121", -1, -1, "(t-1)*(t+1)*(t**5+t**4-3*t**3-2*t**2-t-1)"),
        ("211", "112", -1, -1, "(t-1)**2*(t+1)*(t**2+t+1)**2"),
        ("121", "112", -1, -2, "(t-1)*(t+1)**2*(t**4+t**3-2*t**2-t-1)"),
    ],
    5: [
        ("32", "221", 1, 0, "(t-1)*(t+1)*(t**3+t+1)"),
        ("32", "212", 1, 1, "(t-1)*(t**2-t+1)*(t**2+t+1)"),
        ("32", "122", 1, 1, "(t-1)*(t**2-t+1)*(t**2+t+1)"),
        ("23", "221", 1, 1, "(t-1)**3*(t+1)**2"),
        ("23", "212", 1, 1, "(t-1)**3*(t+1)**2"),
        ("23", "122", 1, 2, "(t-1)**2*(t+1)*(t**2-t-1)"),
        ("311", "221", -1, -1, "(t-1)*(t+1)*(t**6+t**5+4*t**3+2*t**2+t+1)"),
        ("311", "212", -1, -1, "(t-1)*(t**2+t+1)**2*(t**3-t+1)"),
        ("311", "122", -1, -1, "(t-1)*(t+1)*(t**2-t+1)*(t**2+t+1)**2"),
        ("221", "131", -1, -1, "(t-1)*(t+1)*(t**6+t**5-2*t**4+2*t**3+2*t**2+1)"),
        ("212", "131", -1, -1, "(t-1)*(t+1)**2*(t**5-4*t**3+t**2+1)"),
        ("221", "113", -1, 0, "(t-1)**3*(t+1)*(t**2+t+1)**2"),
        ("212", "113", -1, 0, "(t-1)**3*(t+1)*(t**2+t+1)**2"),
        ("221", "221", -1, 1, "(t-1)**3*(t+1)**2*(t**3-2*t**2-1)*(t**3+2*t**2+1)"),
        ("212", "212", -1, 1, "(t-1)**3*(t+1)**2*(t**3-2*t**2-1)*(t**3+2*t**2+1)"),
        ("122", "122", -1, 1, "(t-1)**3*(t+1)**2*(t**3-2*t**2-1)*(t**3+2*t**2+1)"),
        ("221", "212", -1, 1, "(t-1)**3*(t+1)**2*(t**6-4*t**4-2*t**3-3*t**2-t-1)"),
        ("221", "122", -1, 1, "(t-1)**2*(t+1)*(t**2-t-1)*(t**6+t**5-2*t**4-t**3-2*t**2-t-1)"),
        ("212", "122", -1, 2, "(t-1)**2*(t+1)*(t**3-2*t**2-1)*(t**5+t**4-3*t**3-2*t**2-t-1)"),
        ("131", "122", -1, -1, "(t-1)**2*(t+1)**2*(t**4+t**3-2*t**2-t-1)"),
        ("122", "113", -1, -1, "(t-1)**2*(t+1)**2*(t**4+t**3-2*t**2-t-1)"),
    ],
}

NOT_DIAGONALIZABLE_REDUCED = {"211/211", "121/121", "212/212", "122/122", "221/212", "212/122"}

# m -> values for d = 1, 2, ...
DET_TABLE = {
    1: [1, 1, 1, 1, 1, 1, 1, 1, 1],
    2: [1, -1, 1, -1, 1, 1, 1, 1, 1],
    3: [1, -1, -1, 1, 1, -1, -1],
    4: [1, 1, 1, 1, 1],
    5: [1, 1, 1, 1],
}
TRACE_TABLE = {
    1: [1, 1, 1, 1, 1, 1, 1, 1, 1],
    2: [4, 8, 12, 17, 24, 32, 40, 49, 60],
    3: [9, 27, 42, 70, 160, 241, 203],
    4: [16, 64, 48, -33, 613],
    5: [25, 125, -175, -1650],
}
TRACE_INV_TABLE = {
    1: [1, 1, 1, 1, 1, 1, 1, 1, 1],
    2: [4, 8, 12, 17, 24, 32, 40, 49, 60],
    3: [9, 27, 44, 64, 118, 185, 201],
    4: [16, 64, 80, -29, 24],
    5: [25, 125, 25, -1250],
}

PERM_TRACE = [1, 0, -3, -5, 23, 96, -279, -3498, 124, 120819, 185838]
C_D = [0, 0, 1, 7, 53, 406, 3373, 30360, 297256, 3153559, 36186708]
