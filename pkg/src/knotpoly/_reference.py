"""Printed closed forms for the (2,2)-tangle systems, used as comparison targets.

Positions are 1-based flat (row, col) indices into the standard tensor basis.
Expressions use ``E``, ``i``, ``p`` (V1) or ``b``, ``c`` (Alexander) for the free
parameters; the parser treats them as extra variables, not as the imaginary unit.
"""

ALEXANDER_LAYOUT = {
    "a": (1, 1), "b": (2, 2), "c": (2, 3),
    "d": (3, 2), "e": (3, 3), "f": (4, 4),
}

ALEXANDER_FREE = ("b", "c")

# solution in terms of (b, c)
ALEXANDER_SOLUTION = {
    "a": "b + c",
    "d": "c*t",
    "e": "b + c*(1 - t)",
    "f": "b - c*t",
}

ALEXANDER_CLOSURE = "c*t^(1/2)"

V1_LAYOUT = {
    "a": (1, 1),
    "b": (2, 2), "j": (2, 5),
    "d": (3, 3), "s": (3, 9),
    "f": (4, 4), "m": (4, 7), "u": (4, 10), "B": (4, 13),
    "c": (5, 2), "k": (5, 5),
    "l": (6, 6),
    "g": (7, 4), "n": (7, 7), "v": (7, 10), "C": (7, 13),
    "q": (8, 8), "F": (8, 14),
    "e": (9, 3), "t": (9, 9),
    "h": (10, 4), "o": (10, 7), "w": (10, 10), "D": (10, 13),
    "y": (11, 11),
    "z": (12, 12), "H": (12, 15),
    "i": (13, 4), "p": (13, 7), "x": (13, 10), "E": (13, 13),
    "r": (14, 8), "G": (14, 14),
    "A": (15, 12), "I": (15, 15),
    "J": (16, 16),
}

V1_FREE = ("E", "i", "p")

# each variable as a triple of coefficients against (E, i, p)
V1_SOLUTION = {
    "a": ("1", "1", "(-1+t1)/t1"),
    "b": ("1", "(-1+t0)/t0", "(-1+t1)*(-2+t0)/(t1*(-1+t0))"),
    "c": ("0", "1", "(-1+t1)*t0/(t1*(-1+t0))"),
    "d": ("1", "(-1+t1)/t1", "(-2+t1)/t1"),
    "e": ("0", "1", "1"),
    "f": ("1", "2 - 1/t1 - 1/t0", "2 - 2/t1"),
    "g": ("0", "(-1+t1)/t1", "(-1+t1)*t0/(t1*(-1+t0))"),
    "h": ("0", "1-t0", "-((-1+t1)*t0)/(-1+t0)"),
    "j": ("0", "1/t0", "(-1+t1)/(t1*(-1+t0))"),
    "k": ("1", "0", "(1-t1)/(t1*(-1+t0))"),
    "l": ("1", "-1/t0", "-(2*(-1+t1))/(t1*(-1+t0))"),
    "m": ("0", "-1 + 1/t0", "-1"),
    "n": ("1", "0", "-(-2+t1+t0)/(t1*(-1+t0))"),
    "o": ("0", "t1", "(-1+t1*t0)/(-1+t0)"),
    "q": ("1", "(-1+t0)/t0", "(-1+t1)*(-2+t0)/(t1*(-1+t0))"),
    "r": ("0", "-t1", "(t0-t1*t0)/(-1+t0)"),
    "s": ("0", "1/t1", "1/t1"),
    "t": ("1", "0", "-1/t1"),
    "u": ("0", "(-1+t0)/(t1*t0)", "1/t1"),
    "v": ("0", "1/t1", "(-1+t1*t0)/(t1^2*(-1+t0))"),
    "w": ("1", "0", "(-2+t1+t0)/(t1*(-1+t0))"),
    "x": ("0", "0", "-1/t1"),
    "y": ("1", "-1/t1", "-2/t1"),
    "z": ("1", "(-1+t1)/t1", "(-2+t1)/t1"),
    "A": ("0", "-1/t1", "-1/t1"),
    "B": ("0", "1/(t1*t0)", "0"),
    "C": ("0", "0", "(1-t1)/(t1^2*(-1+t0))"),
    "D": ("0", "0", "(-1+t1)/(t1*(-1+t0))"),
    "F": ("0", "-1/(t1*t0)", "(1-t1)/(t1^2*(-1+t0))"),
    "G": ("1", "0", "(1-t1)/(t1*(-1+t0))"),
    "H": ("0", "-1", "-1"),
    "I": ("1", "0", "-1/t1"),
    "J": ("1", "1", "(-1+t1)/t1"),
}

# diagonal closure values; left = diag(x1, x2, x3, x4), right = diag(x4, x2, x3, x1)
V1_CLOSURES = {
    "x1": "-i - 2*p + p/t1 - 2*p/(t0-1) + 2*p/((t0-1)*t1) + p*t0/(t0-1) - p*t0/((t0-1)*t1)",
    "x2": "-i + p/((t0-1)*t1) - p*t0/(t0-1)",
    "x3": "-i - p + p/t1 - p/(t0-1) + 2*p/((t0-1)*t1) - p*t0/((t0-1)*t1)",
    "x4": "-E - i - p - E/(t0-1) - p/(t0-1) + p/((t0-1)*t1) + E*t0/(t0-1)",
}

# two printed triples fail the linear system; these are the values it forces
V1_CORRECTED = {
    "h": ("0", "1-t1", "-((-1+t1)*t0)/(-1+t0)"),
    "w": ("1", "0", "-(-2+t1+t0)/(t1*(-1+t0))"),
}
