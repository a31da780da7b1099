"""Published values of the counting tables and series.

Used as fixed reference data by the ``verify tables`` suite and the tests.
"""

#: K[n, l] for n <= 11; row n lists l = 0..n
K2_TABLE = {
    0: [1],
    1: [1, 0],
    2: [0, 1, 0],
    3: [1, 0, 1, 0],
    4: [0, 1, 1, 1, 0],
    5: [0, 1, 2, 2, 1, 0],
    6: [0, 0, 3, 3, 4, 1, 0],
    7: [1, 0, 1, 7, 7, 6, 1, 0],
    8: [0, 1, 1, 6, 14, 14, 9, 1, 0],
    9: [0, 1, 3, 4, 21, 28, 28, 12, 1, 0],
    10: [0, 0, 3, 8, 17, 54, 58, 50, 16, 1, 0],
    11: [0, 1, 2, 9, 27, 61, 126, 119, 85, 20, 1, 0],
}

#: B[n, k] for n <= 10; row n lists k = 0..n
BCOLOR_TABLE = {
    0: [1],
    1: [1, 1],
    2: [1, 2, 1],
    3: [2, 5, 5, 2],
    4: [3, 11, 16, 11, 3],
    5: [6, 26, 50, 50, 26, 6],
    6: [11, 60, 143, 188, 143, 60, 11],
    7: [23, 142, 404, 656, 656, 404, 142, 23],
    8: [46, 334, 1105, 2143, 2652, 2143, 1105, 334, 46],
    9: [98, 794, 2995, 6737, 9934, 9934, 6737, 2995, 794, 98],
    10: [207, 1888, 7999, 20504, 35080, 41788, 35080, 20504, 7999, 1888, 207],
}

#: K[n, l, c] for n <= 8; key (n, c), row lists l = 0..n
K3_TABLE = {
    (0, 0): [1],
    (1, 0): [1, 0],
    (1, 1): [1, 0],
    (2, 0): [0, 1, 0],
    (2, 1): [0, 2, 0],
    (2, 2): [0, 1, 0],
    (3, 0): [1, 0, 1, 0],
    (3, 1): [1, 1, 3, 0],
    (3, 2): [1, 1, 3, 0],
    (3, 3): [1, 0, 1, 0],
    (4, 0): [0, 1, 1, 1, 0],
    (4, 1): [0, 2, 5, 4, 0],
    (4, 2): [0, 2, 8, 6, 0],
    (4, 3): [0, 2, 5, 4, 0],
    (4, 4): [0, 1, 1, 1, 0],
    (5, 0): [0, 1, 2, 2, 1, 0],
    (5, 1): [0, 3, 5, 13, 5, 0],
    (5, 2): [0, 4, 9, 27, 10, 0],
    (5, 3): [0, 4, 9, 27, 10, 0],
    (5, 4): [0, 3, 5, 13, 5, 0],
    (5, 5): [0, 1, 2, 2, 1, 0],
    (6, 0): [0, 0, 3, 3, 4, 1, 0],
    (6, 1): [0, 0, 12, 15, 27, 6, 0],
    (6, 2): [0, 0, 21, 37, 70, 15, 0],
    (6, 3): [0, 0, 24, 50, 94, 20, 0],
    (6, 4): [0, 0, 21, 37, 70, 15, 0],
    (6, 5): [0, 0, 12, 15, 27, 6, 0],
    (6, 6): [0, 0, 3, 3, 4, 1, 0],
    (7, 0): [1, 0, 1, 7, 7, 6, 1, 0],
    (7, 1): [1, 1, 6, 34, 45, 48, 7, 0],
    (7, 2): [1, 2, 15, 76, 141, 148, 21, 0],
    (7, 3): [1, 3, 20, 108, 239, 250, 35, 0],
    (7, 4): [1, 3, 20, 108, 239, 250, 35, 0],
    (7, 5): [1, 2, 15, 76, 141, 148, 21, 0],
    (7, 6): [1, 1, 6, 34, 45, 48, 7, 0],
    (7, 7): [1, 0, 1, 7, 7, 6, 1, 0],
    (8, 0): [0, 1, 1, 6, 14, 14, 9, 1, 0],
    (8, 1): [0, 2, 5, 39, 86, 116, 78, 8, 0],
    (8, 2): [0, 2, 11, 109, 249, 426, 280, 28, 0],
    (8, 3): [0, 2, 17, 179, 447, 876, 566, 56, 0],
    (8, 4): [0, 2, 20, 206, 540, 1104, 710, 70, 0],
    (8, 5): [0, 2, 17, 179, 447, 876, 566, 56, 0],
    (8, 6): [0, 2, 11, 109, 249, 426, 280, 28, 0],
    (8, 7): [0, 2, 5, 39, 86, 116, 78, 8, 0],
    (8, 8): [0, 1, 1, 6, 14, 14, 9, 1, 0],
}

#: B_n for n <= 15
WEDDERBURN = [1, 1, 1, 2, 3, 6, 11, 23, 46, 98, 207, 451, 983, 2179, 4850, 10905]

#: coefficients of the square of the B_n series, degrees 0..15
WEDDERBURN_SQUARED = [1, 2, 3, 6, 11, 22, 44, 92, 193, 414, 896, 1966, 4347, 9700, 21787, 49262]
