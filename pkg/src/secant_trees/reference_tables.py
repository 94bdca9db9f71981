"""Hand-checked reference values at small sizes.

These anchor the verification suite and the test goldens from outside the
code: the joint matrices up to size 10 (entries listed row by row for
m = 2 .. 2n over k = 1 .. 2n-1), the first rows of the rightmost-label
triangle, and the tree counts 1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521
(secant numbers at even, tangent numbers at odd indices; OEIS A000111).
"""

REFERENCE_JOINT: dict[int, list[list[int]]] = {
    2: [[1]],
    4: [
        [0, 0, 1],
        [1, 2, 0],
        [0, 1, 0],
    ],
    6: [
        [0, 0, 1, 3, 1],
        [1, 2, 0, 9, 3],
        [3, 7, 10, 0, 1],
        [1, 4, 8, 2, 0],
        [0, 2, 2, 1, 0],
    ],
    8: [
        [0, 0, 5, 15, 21, 15, 5],
        [5, 10, 0, 45, 63, 45, 15],
        [15, 35, 50, 0, 101, 63, 21],
        [21, 54, 86, 106, 0, 45, 15],
        [15, 46, 82, 87, 50, 0, 5],
        [5, 22, 46, 60, 40, 10, 0],
        [0, 16, 16, 14, 10, 5, 0],
    ],
    10: [
        [0, 0, 61, 183, 285, 327, 285, 183, 61],
        [61, 122, 0, 549, 855, 981, 855, 549, 183],
        [183, 427, 610, 0, 1405, 1575, 1341, 855, 285],
        [285, 720, 1132, 1466, 0, 1989, 1575, 981, 327],
        [327, 884, 1460, 1863, 2050, 0, 1405, 855, 285],
        [285, 836, 1448, 1838, 1870, 1466, 0, 549, 183],
        [183, 606, 1110, 1466, 1490, 1155, 610, 0, 61],
        [61, 288, 588, 854, 950, 804, 488, 122, 0],
        [0, 272, 272, 256, 224, 178, 122, 61, 0],
    ],
}

REFERENCE_TOTALS: dict[int, int] = {2: 1, 4: 5, 6: 61, 8: 1385, 10: 50521}

REFERENCE_TRIANGLE: dict[int, tuple[int, ...]] = {
    2: (1,),
    3: (1, 1),
    4: (2, 2, 1),
    5: (5, 5, 4, 2),
    6: (16, 16, 14, 10, 5),
    7: (61, 61, 56, 46, 32, 16),
    8: (272, 272, 256, 224, 178, 122, 61),
}

REFERENCE_TREE_COUNTS: tuple[int, ...] = (1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521)

SECANT_NUMBERS: tuple[int, ...] = (1, 1, 5, 61, 1385, 50521, 2702765)
