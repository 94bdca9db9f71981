"""
The size-reducing maps behind the boundary identities
=====================================================

Each boundary identity of the joint matrices has a constructive explanation:
a map that deletes two labelled nodes (or transposes two labels) and lands
bijectively in the trees two sizes smaller, moving the statistics in a
predictable way.  The harness runs each map over its whole domain and
certifies injectivity, codomain coverage and the statistic transport.
"""

import json

from secant_trees import MAP_VERIFIERS, tree_from_perm, tripling_map

# One concrete orbit: the size-4 tree 2 1 4 3 has pom = 3 (the maximum leaf
# hangs off the one-child node), so the tripling produces the three trees
# with pom = 2.
t = tree_from_perm((2, 1, 4, 3))
for image in tripling_map(t):
    print("tripling image:", " ".join(map(str, image.projection())),
          "pom =", image.pom())

print()
for two_n in (6, 8):
    for name, verify in sorted(MAP_VERIFIERS.items()):
        report = verify(two_n)
        assert report.ok
        print(f"2n={two_n}  {json.dumps(report.to_json_dict())}")
