"""Degree sequences and normalized pure diagrams.

A degree sequence is a strictly increasing integer tuple (d_0, ..., d_n).
The pure diagram on d has one entry per column, at (i, d_i), with value
prod_{k != i} 1/|d_i - d_k|.  First differences and partial sums convert
between degree sequences and tuples of positive gaps.
"""

from fractions import Fraction
from math import prod

from .diagram import Diagram
from .errors import EmptyColumn, LengthMismatch, NotADegreeSequence

__all__ = [
    "check_degree_sequence",
    "pure",
    "leq",
    "delta",
    "sigma",
    "min_degree_sequence",
    "format_sequence",
    "parse_sequence",
]


def check_degree_sequence(d):
    """Validate and normalize to a tuple of ints; must be strictly increasing."""
    d = tuple(int(x) for x in d)
    if not d:
        raise NotADegreeSequence("a degree sequence must be nonempty")
    for a, b in zip(d, d[1:]):
        if a >= b:
            raise NotADegreeSequence(f"{d} is not strictly increasing")
    return d


def pure(d):
    """The normalized pure diagram on degree sequence d."""
    d = check_degree_sequence(d)
    entries = {}
    for i, di in enumerate(d):
        denom = prod(abs(di - dk) for k, dk in enumerate(d) if k != i)
        entries[(i, di)] = Fraction(1, denom)
    return Diagram(entries)


def leq(c, d):
    """Componentwise comparison of two equal-length degree sequences."""
    c = check_degree_sequence(c)
    d = check_degree_sequence(d)
    if len(c) != len(d):
        raise LengthMismatch(f"lengths {len(c)} and {len(d)} differ")
    return all(a <= b for a, b in zip(c, d))


def delta(d):
    """First differences (d_1 - d_0, ..., d_n - d_{n-1})."""
    d = check_degree_sequence(d)
    return tuple(b - a for a, b in zip(d, d[1:]))


def sigma(s, e):
    """Partial-sum sequence of length |s| + 1 starting at e; inverse of delta."""
    out = [int(e)]
    for gap in s:
        out.append(out[-1] + int(gap))
    return check_degree_sequence(out)


def min_degree_sequence(a):
    """Per-column minimum degrees of a diagram, as a degree sequence."""
    if a.is_zero():
        raise EmptyColumn("empty diagram")
    minima = []
    for i in range(a.width + 1):
        m = a.min_shift(i)
        if m is None:
            raise EmptyColumn(f"column {i} has no entries")
        minima.append(m)
    return check_degree_sequence(minima)


def format_sequence(d):
    return "(" + ",".join(str(x) for x in d) + ")"


def parse_sequence(text):
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    return check_degree_sequence(int(p) for p in text.split(","))
