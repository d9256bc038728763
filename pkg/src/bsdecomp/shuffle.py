"""Tensor products of diagrams and shuffle expansions of products of
pure diagrams.

The tensor product of two diagrams is bidegree convolution.  A product
of pure diagrams expands into a sum of pure diagrams indexed by the
shuffles of the factors' first-difference sequences; no coefficients
other than shuffle multiplicities appear with this normalization.
"""

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial, prod

from .diagram import Diagram, ZERO
from .errors import LengthMismatch, SizeExceeded
from .koszul import CIType, normalize
from .pure import check_degree_sequence, delta, pure, sigma

__all__ = [
    "PureSum",
    "DEFAULT_SHUFFLE_CAP",
    "shuffle_cap",
    "tensor",
    "shuffles",
    "shuffle_count",
    "prod_of",
    "shuffle_product",
    "quotient_by_regular_element",
    "ci_shuffle_decomposition",
    "expand_pure_sum",
    "shuffle_identity_check",
]

DEFAULT_SHUFFLE_CAP = 10**6
CAP_ENV_VAR = "BSDECOMP_SHUFFLE_CAP"


def shuffle_cap(cap=None):
    """Effective enumeration cap: explicit argument, else env var, else default."""
    if cap is not None:
        return int(cap)
    env = os.environ.get(CAP_ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_SHUFFLE_CAP


@dataclass(frozen=True)
class PureSum:
    """Merged terms (coefficient, degree sequence) with no chain requirement.

    Distinct from PureDecomposition on purpose: the degree sequences of a
    pure sum need not be totally ordered.  Terms keep first-seen order.
    """

    terms: tuple

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)


def _merge_terms(pairs):
    acc = {}
    for coeff, d in pairs:
        coeff = Fraction(coeff)
        acc[d] = acc.get(d, 0) + coeff
    return PureSum(tuple((c, d) for d, c in acc.items() if c != 0))


def tensor(a, b):
    """Bidegree convolution of two diagrams."""
    entries = {}
    for (i1, j1), v1 in a.items():
        for (i2, j2), v2 in b.items():
            key = (i1 + i2, j1 + j2)
            entries[key] = entries.get(key, 0) + v1 * v2
    return Diagram(entries)


def shuffle_count(sizes):
    """Number of interleavings: multinomial of the block sizes."""
    return factorial(sum(sizes)) // prod(factorial(s) for s in sizes)


def _check_cap(count, cap):
    cap = shuffle_cap(cap)
    if count > cap:
        raise SizeExceeded(f"{count} shuffles exceed the cap of {cap}")


def shuffles(sets, cap=None):
    """All interleavings preserving each input sequence's internal order.

    Positions are distinguishable even when values repeat, so the result
    may contain value-equal duplicates.  Enumeration is lexicographic in
    the choice of which source supplies the next element.
    """
    sets = [tuple(s) for s in sets]
    _check_cap(shuffle_count([len(s) for s in sets]), cap)
    out = []

    def rec(positions, acc):
        if all(p == len(s) for p, s in zip(positions, sets)):
            out.append(tuple(acc))
            return
        for k, s in enumerate(sets):
            if positions[k] < len(s):
                acc.append(s[positions[k]])
                positions[k] += 1
                rec(positions, acc)
                positions[k] -= 1
                acc.pop()

    rec([0] * len(sets), [])
    return out


def prod_of(s):
    """Product of the running partial sums s_1 (s_1+s_2) ... (s_1+...+s_r)."""
    total = 0
    result = 1
    for x in s:
        total += x
        result *= total
    return Fraction(result)


def shuffle_product(ds, cap=None):
    """Expand a product of pure diagrams as a merged sum of pure diagrams.

    Each shuffle of the factors' first differences contributes one term
    pi<partial sums from the summed starting degrees> with coefficient 1;
    merging counts coincidences.
    """
    ds = [check_degree_sequence(d) for d in ds]
    if not ds:
        raise ValueError("need at least one degree sequence")
    start = sum(d[0] for d in ds)
    diffs = [delta(d) for d in ds]
    return _merge_terms(
        (1, sigma(s, start)) for s in shuffles(diffs, cap=cap)
    )


def quotient_by_regular_element(dec, e, cap=None):
    """Decomposition after quotienting by a regular element of degree e.

    Each term (a, d) spreads into the shuffles of delta(d) with the
    singleton (e), every resulting term scaled by e * a.
    """
    e = int(e)
    if e < 1:
        raise ValueError(f"element degree must be >= 1, got {e}")
    pairs = []
    for coeff, d in dec:
        d = check_degree_sequence(d)
        for s in shuffles([delta(d), (e,)], cap=cap):
            pairs.append((e * Fraction(coeff), sigma(s, d[0])))
    return _merge_terms(pairs)


def ci_shuffle_decomposition(t, cap=None):
    """Order-free decomposition of a complete intersection's diagram.

    The multiplicity prod(e_i) times the sum over all orderings of the
    generator degrees of the pure diagram on their partial sums.
    Value-equal orderings merge with integer multiplicities.
    """
    if not isinstance(t, CIType):
        t = normalize(t)
    _check_cap(factorial(t.codim), cap)
    mult = t.multiplicity
    return _merge_terms(
        (mult, sigma(p, 0)) for p in permutations(t.degrees)
    )


def expand_pure_sum(s):
    """Evaluate a formal sum of pure diagrams to a diagram."""
    lengths = {len(d) for _, d in s}
    if len(lengths) > 1:
        raise LengthMismatch(f"mixed sequence lengths {sorted(lengths)}")
    total = ZERO
    for coeff, d in s:
        total = total + pure(d).scale(coeff)
    return total


def shuffle_identity_check(sets, cap=None):
    """Sum over shuffles of prod(Prod(A_i)) / Prod(sigma); always 1."""
    sets = [tuple(s) for s in sets]
    numerator = prod(prod_of(s) for s in sets)
    return sum(
        (numerator / prod_of(s) for s in shuffles(sets, cap=cap)),
        Fraction(0),
    )
