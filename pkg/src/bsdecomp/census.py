"""Batch exploration of greedy elimination order across complete
intersections of a fixed codimension.

The elimination signature of a degree tuple records which columns are
cleared at each iteration (dropping the trivial outer columns 0 and n on
the final, all-clearing iteration).  The census sweeps all bounded
degree tuples, groups them by signature, and tallies agreement with the
codimension-4 first-elimination predicate.
"""

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement

from .closed_forms import FirstElimination, codim4_first_elimination
from .greedy import greedy_decompose
from .koszul import CIType, koszul_betti, normalize

__all__ = [
    "EliminationSignature",
    "CensusReport",
    "signature_of",
    "iter_types",
    "run_census",
    "tsv_lines",
    "format_report",
]


@dataclass(frozen=True)
class EliminationSignature:
    """Per-iteration column sets, in iteration order."""

    steps: tuple  # ((iteration, (columns, ...)), ...)

    @property
    def iterations(self):
        return self.steps[-1][0] if self.steps else 0

    def has_multiple_elimination(self):
        """True if some non-final iteration clears more than one column."""
        return any(len(cols) > 1 for it, cols in self.steps[:-1])

    def first_columns(self):
        return self.steps[0][1] if self.steps else ()

    def format(self):
        return ";".join(
            f"{it}:{','.join(str(c) for c in cols)}" for it, cols in self.steps
        )


def signature_of(t):
    """Elimination signature of the Koszul diagram of type t."""
    if not isinstance(t, CIType):
        t = normalize(t)
    n = t.codim
    table = greedy_decompose(koszul_betti(t)).table
    grouped = table.columns_by_iteration()
    steps = []
    for it in sorted(grouped):
        cols = grouped[it]
        if it == table.iterations:
            cols = tuple(c for c in cols if c not in (0, n))
        steps.append((it, cols))
    return EliminationSignature(steps=tuple(steps))


def iter_types(codim, max_degree, strict):
    """All increasing degree tuples of the given codimension, bounded."""
    source = combinations if strict else combinations_with_replacement
    for degrees in source(range(1, max_degree + 1), codim):
        yield CIType(degrees)


@dataclass
class CensusReport:
    codim: int
    max_degree: int
    strict: bool
    swept: int = 0
    signatures: dict = field(default_factory=dict)  # signature -> witness tuples
    signature_totals: dict = field(default_factory=dict)  # signature -> count
    no_multiple_signatures: int = 0
    multiple_tuples: int = 0
    predicate_checked: int = 0
    predicate_agreed: int = 0


WITNESS_CAP = 5


def _predicate_agrees(t, signature):
    predicted = codim4_first_elimination(t)
    first = signature.first_columns()
    if predicted is FirstElimination.MULTIPLE:
        return len(first) >= 2
    if predicted is FirstElimination.COLUMN1:
        return first == (1,)
    return first == (2,)


def run_census(codim, max_degree, strict, witness_cap=WITNESS_CAP):
    """Sweep all bounded degree tuples and aggregate their signatures."""
    if codim not in (4, 5):
        raise ValueError(f"census supports codimension 4 or 5, got {codim}")
    if strict and max_degree < codim:
        raise ValueError("strict tuples need max_degree >= codim")
    report = CensusReport(codim=codim, max_degree=max_degree, strict=strict)
    for t in iter_types(codim, max_degree, strict):
        sig = signature_of(t)
        report.swept += 1
        witnesses = report.signatures.setdefault(sig, [])
        if len(witnesses) < witness_cap:
            witnesses.append(t.degrees)
        report.signature_totals[sig] = report.signature_totals.get(sig, 0) + 1
        if sig.has_multiple_elimination():
            report.multiple_tuples += 1
        if codim == 4 and strict:
            report.predicate_checked += 1
            if _predicate_agrees(t, sig):
                report.predicate_agreed += 1
    report.no_multiple_signatures = sum(
        1 for sig in report.signatures if not sig.has_multiple_elimination()
    )
    return report


def tsv_lines(codim, max_degree, strict):
    """One machine-readable line per swept tuple."""
    for t in iter_types(codim, max_degree, strict):
        sig = signature_of(t)
        yield "\t".join(
            [
                ",".join(str(e) for e in t.degrees),
                str(sig.iterations),
                sig.format(),
                "yes" if sig.has_multiple_elimination() else "no",
            ]
        )


def format_report(report):
    lines = [
        f"census: codim {report.codim}, degrees <= {report.max_degree}, "
        f"{'strictly' if report.strict else 'weakly'} increasing",
        f"tuples swept: {report.swept}",
        f"distinct signatures: {len(report.signatures)}",
        f"signatures without multiple elimination: {report.no_multiple_signatures}",
        f"tuples with multiple elimination: {report.multiple_tuples}",
    ]
    if report.predicate_checked:
        lines.append(
            "first-elimination predicate agreement: "
            f"{report.predicate_agreed}/{report.predicate_checked}"
        )
    lines.append("")
    ordered = sorted(
        report.signatures.items(), key=lambda kv: min(kv[1])
    )
    for sig, witnesses in ordered:
        shown = " ".join("(" + ",".join(map(str, w)) + ")" for w in witnesses)
        total = report.signature_totals[sig]
        flag = " [multiple]" if sig.has_multiple_elimination() else ""
        lines.append(f"{sig.format()}{flag}")
        lines.append(f"  tuples: {total}, e.g. {shown}")
    return "\n".join(lines)
