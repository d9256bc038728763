"""Greedy totally-ordered decomposition into pure diagrams.

Repeatedly subtract the largest multiple of the pure diagram on the
residual's minimal degree sequence that keeps all entries nonnegative.
The degree sequences produced form a strictly increasing chain and the
decomposition is unique.  The elimination table records, per entry of
the input, the iteration at which it first became zero.
"""

from dataclasses import dataclass

from .diagram import render_grid
from .errors import EmptyColumn, NotADegreeSequence, NotInCone
from .pure import check_degree_sequence, min_degree_sequence, pure

__all__ = [
    "PureDecomposition",
    "EliminationTable",
    "GreedyTrace",
    "greedy_decompose",
    "elimination_table",
    "verify_symmetric",
]


@dataclass(frozen=True)
class PureDecomposition:
    """Ordered terms (coefficient, degree sequence) of a chain decomposition."""

    terms: tuple

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def expand(self):
        """Sum of coeff * pure(d) over the terms."""
        total = None
        for coeff, d in self.terms:
            term = pure(d).scale(coeff)
            total = term if total is None else total + term
        if total is None:
            from .diagram import ZERO

            return ZERO
        return total


@dataclass(frozen=True)
class EliminationTable:
    """Map (i, j) -> first iteration at which the entry became zero."""

    cells: dict
    iterations: int

    def grid(self, blank="."):
        return render_grid(
            {key: str(it) for key, it in self.cells.items()}, blank=blank
        )

    def columns_by_iteration(self):
        """Map iteration -> sorted tuple of distinct columns zeroed then."""
        grouped = {}
        for (i, _), it in self.cells.items():
            grouped.setdefault(it, set()).add(i)
        return {it: tuple(sorted(cols)) for it, cols in grouped.items()}

    def multiple_iterations(self):
        """Iterations that zero two or more cells (including the final one)."""
        counts = {}
        for it in self.cells.values():
            counts[it] = counts.get(it, 0) + 1
        return {it for it, c in counts.items() if c > 1}


@dataclass(frozen=True)
class GreedyTrace:
    decomposition: PureDecomposition
    table: EliminationTable


def greedy_decompose(a):
    """Run the greedy chain decomposition, returning terms and the table."""
    if a.is_zero():
        raise NotInCone("cannot decompose the zero diagram")
    if any(v < 0 for _, v in a.items()):
        raise NotInCone("diagram has negative entries")
    width = a.width
    cap = len(a) + 1
    residual = a
    terms = []
    cells = {}
    iteration = 0
    while not residual.is_zero():
        iteration += 1
        if iteration > cap:
            raise RuntimeError("greedy decomposition failed to make progress")
        partial = PureDecomposition(tuple(terms))
        if residual.width != width:
            raise NotInCone(
                f"column {width} emptied while lower columns remain",
                partial=partial,
                residual=residual,
            )
        try:
            d = min_degree_sequence(residual)
        except EmptyColumn as exc:
            raise NotInCone(str(exc), partial=partial, residual=residual) from exc
        except NotADegreeSequence as exc:
            raise NotInCone(
                f"column minima are not strictly increasing: {exc}",
                partial=partial,
                residual=residual,
            ) from exc
        p = pure(d)
        q = min(residual[(i, di)] / p[(i, di)] for i, di in enumerate(d))
        terms.append((q, d))
        new_residual = residual - p.scale(q)
        for key in residual.support - new_residual.support:
            cells[key] = iteration
        residual = new_residual
    return GreedyTrace(
        decomposition=PureDecomposition(tuple(terms)),
        table=EliminationTable(cells=cells, iterations=iteration),
    )


def elimination_table(a):
    """The elimination table of the greedy decomposition of a."""
    return greedy_decompose(a).table


def verify_symmetric(trace, r, n):
    """Check the palindromic symmetry of a chain decomposition.

    For a self-dual (Gorenstein) diagram of width n and regularity r the
    mirror of term k is term s - k: equal coefficient, and its pure
    diagram equals the dual of term k's, shifted back by the top degree
    r + n.  Returns False on any asymmetry.
    """
    terms = trace.decomposition.terms
    shift = r + n
    m = len(terms)
    for k in range((m + 1) // 2):
        a_k, d_k = terms[k]
        a_mirror, d_mirror = terms[m - 1 - k]
        if a_k != a_mirror:
            return False
        d_k = check_degree_sequence(d_k)
        if pure(d_mirror) != pure(d_k).dual(n).twist(-shift):
            return False
    return True
