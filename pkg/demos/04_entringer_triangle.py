"""
The Entringer triangle and the rightmost-node statistic
=======================================================

Row n of the triangle is built from row n-1 by leftmost partial sums, read
so that the first two entries both take the full previous row sum.  Row
sums are the tree counts (secant and tangent numbers interleaved), and the
same numbers show up as the bottom rows of the joint matrices: for even
sizes, entry j counts the trees whose rightmost node is labelled j.
"""

from secant_trees import (
    ent_distribution,
    entringer_bruteforce,
    entringer_triangle,
    joint_matrix_bruteforce,
    secant_numbers,
    tree_count,
)

tri = entringer_triangle(8)
print(tri.to_text())

print("row sums:", [tri.row_total(n) for n in range(2, 9)])
assert [tri.row_total(n) for n in range(2, 9)] == [tree_count(n) for n in range(2, 9)]
print("secant numbers:", secant_numbers(12))

# Measured against the raw statistic, rows 2..8.
assert entringer_bruteforce(8) == tri
print("rule rows == brute-force rows up to n=8")

# The bottom row of the size-8 matrix is the size-6 distribution shifted.
M8 = joint_matrix_bruteforce(8)
raw6 = ent_distribution(6)
assert [M8.get(8, k) for k in range(2, 7)] == list(raw6[:5])
print("size-8 bottom row:", [M8.get(8, k) for k in range(2, 7)], "== row 6")
