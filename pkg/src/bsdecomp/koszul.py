"""Betti diagrams of complete intersections.

The minimal resolution of a complete intersection cut out by forms of
degrees (e_1, ..., e_n) is the Koszul complex, so its Betti diagram is
determined by subset sums: entry (i, j) counts the i-element subsets of
the degrees summing to j.
"""

from dataclasses import dataclass
from math import prod

from .diagram import Diagram
from .errors import NonPositiveDegree

__all__ = ["CIType", "normalize", "koszul_betti"]


@dataclass(frozen=True)
class CIType:
    """Type of a complete intersection: weakly increasing generator degrees."""

    degrees: tuple

    def __post_init__(self):
        degrees = tuple(int(e) for e in self.degrees)
        if any(e < 1 for e in degrees):
            raise NonPositiveDegree(f"degrees must be >= 1, got {degrees}")
        if any(a > b for a, b in zip(degrees, degrees[1:])):
            raise NonPositiveDegree(
                f"degrees must be weakly increasing, got {degrees}; use normalize()"
            )
        object.__setattr__(self, "degrees", degrees)

    @property
    def codim(self):
        return len(self.degrees)

    @property
    def multiplicity(self):
        return prod(self.degrees)

    @property
    def regularity(self):
        return sum(e - 1 for e in self.degrees)

    @property
    def socle_degree(self):
        return sum(self.degrees)


def normalize(degrees):
    """Sort degrees weakly increasing and wrap in a CIType."""
    degrees = tuple(int(e) for e in degrees)
    if any(e < 1 for e in degrees):
        raise NonPositiveDegree(f"degrees must be >= 1, got {degrees}")
    return CIType(tuple(sorted(degrees)))


def koszul_betti(t):
    """Betti diagram of the complete intersection of type t.

    Subset-sum multiplicities are accumulated one generator at a time,
    which is polynomial in n * sum(e_i) rather than 2^n.
    """
    if not isinstance(t, CIType):
        t = normalize(t)
    counts = {(0, 0): 1}
    for e in t.degrees:
        new = dict(counts)
        for (i, j), c in counts.items():
            key = (i + 1, j + e)
            new[key] = new.get(key, 0) + c
        counts = new
    return Diagram(counts)
