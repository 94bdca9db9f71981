"""Shared fixtures.

Brute-force joint matrices are the expensive oracle (size 12 enumerates
2,702,765 trees), so they are memoized once per session and shared by every
test module; treat the returned matrices as read-only.
"""

import pytest

from secant_trees.distributions import joint_matrix_bruteforce

_MATRICES = {}


@pytest.fixture(scope="session")
def brute():
    """brute(two_n) -> session-cached fully-known JointMatrix."""

    def get(two_n: int):
        if two_n not in _MATRICES:
            _MATRICES[two_n] = joint_matrix_bruteforce(two_n)
        return _MATRICES[two_n]

    return get
