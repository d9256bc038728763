from fractions import Fraction
from itertools import combinations

import pytest

from bsdecomp import Diagram


def koszul_by_enumeration(degrees):
    """Test oracle: Betti diagram via explicit 2^n subset enumeration."""
    degrees = tuple(degrees)
    n = len(degrees)
    entries = {}
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            j = sum(degrees[k] for k in subset)
            key = (size, j)
            entries[key] = entries.get(key, 0) + 1
    return Diagram(entries)


@pytest.fixture
def sample_diagram():
    return Diagram({(0, 0): 1, (1, 2): Fraction(3, 2), (2, 5): Fraction(-1, 3)})
