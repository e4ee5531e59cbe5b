"""Reference recurrence coefficients c_j(q) for (s^k)_n, 0 <= k <= 11.

Transcribed cell-by-cell from the published coefficient tables; each entry
is an ascending q-coefficient list ([constant, linear]).  The k = 9 and
k = 11 rows end in a genuine zero cell, which is kept verbatim: the
mechanically derived recurrence for those k is one order shorter.
"""
from __future__ import annotations

from .exactalg import QPoly

REFERENCE_COEFFICIENTS = {
    0: [[-1, 1], [1, -1], [1]],
    1: [[0, 1], [-1, -1], [2]],
    2: [[2, 1], [-7, -1], [8], [-2]],
    3: [[4, 1], [-19, 1], [18, -2], [-2]],
    4: [[7, 1], [-41, 6], [31, -7], [6], [-2]],
    5: [[11, 1], [-71, 18], [-17, -9], [88, -10], [-10]],
    6: [[17, 1], [-99, 44], [-303, 17], [404, -62], [-14], [-4]],
    7: [[26, 1], [-68, 99], [-1400, 177], [1183, -235], [302, -42], [-42]],
    8: [[40, 1], [206, 213], [-4842, 757], [2981, -717], [1782, -254],
        [-162], [-4]],
    9: [[62, 1], [1288, 447], [-15116, 2433], [10555, -2431], [3662, -450],
        [-450], []],
    10: [[97, 1], [4782, 924], [-48560, 6096], [75623, -13946],
         [-24351, 5903], [-8408, 1022], [814], [4]],
    11: [[153, 1], [15110, 1892], [-181164, 9924], [592503, -99514],
         [-360899, 78523], [-74876, 9174], [9174], []],
}


def reference_row(k: int) -> list:
    """Coefficients for one k as QPoly values (includes any trailing zero)."""
    return [QPoly(c) for c in REFERENCE_COEFFICIENTS[k]]


MAX_TABLED_K = max(REFERENCE_COEFFICIENTS)
