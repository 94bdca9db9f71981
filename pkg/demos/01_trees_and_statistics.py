"""
Complete increasing trees, their projections, and the three statistics
======================================================================

A complete increasing tree has labels 1..n growing along every root-to-leaf
path, every node a leaf or binary -- except that an even-size tree has one
node with a single left child, sitting at the rightmost position.  Reading
the labels left to right under the planar embedding gives a down-up
alternating permutation, and that reading is a bijection.
"""

from secant_trees import enumerate_trees, tree_from_perm

# The five trees of size 4, with their projections and statistics.
print("size 4: projection | eoc pom ent | minimal chain")
for tree in enumerate_trees(4):
    s = tree.stats()
    word = " ".join(map(str, tree.projection()))
    chain = "->".join(map(str, tree.minimal_chain()))
    print(f"  {word}   |  {s.eoc}   {s.pom}   {s.ent}  | {chain}")

# The projection and its inverse are mutually inverse.
t = tree_from_perm((4, 1, 3, 2))
print("\ntree of 4 1 3 2:", t.to_json_dict())
assert tree_from_perm(t.projection()) == t

# Counts by size: secant numbers at even sizes, tangent numbers at odd.
counts = [sum(1 for _ in enumerate_trees(n)) for n in range(1, 9)]
print("\ncounts for n = 1..8:", counts)
assert counts == [1, 1, 2, 5, 16, 61, 272, 1385]
