"""Command-line interface.

One subcommand per library operation; diagrams travel between commands
in the BETTI/1 text format, decompositions as `coeff<TAB>(d_0,...,d_n)`
lines.  Domain errors exit 1 with the error name on stderr; usage errors
exit 2.
"""

import argparse
import sys
from fractions import Fraction

from . import census as census_mod
from . import reference
from .closed_forms import closed_form_decomposition, codim4_first_elimination
from .diagram import format_betti, parse_betti
from .errors import BsdecompError
from .greedy import greedy_decompose
from .koszul import normalize, koszul_betti
from .pure import format_sequence, parse_sequence
from .shuffle import (
    ci_shuffle_decomposition,
    quotient_by_regular_element,
    shuffle_product,
    tensor,
)


def _parse_degrees(text):
    return normalize(int(p) for p in text.split(","))


def _coeff_str(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _print_terms(terms, out):
    for coeff, d in terms:
        out.write(f"{_coeff_str(coeff)}\t{format_sequence(d)}\n")


def _read_terms(path):
    terms = []
    with open(path) as handle:
        for line in handle:
            line = line.strip()
            if not line:
                continue
            coeff_text, _, seq_text = line.partition("\t")
            terms.append((Fraction(coeff_text), parse_sequence(seq_text)))
    return terms


def _load_diagram(path):
    with open(path) as handle:
        return parse_betti(handle.read())


def _input_diagram(args):
    if args.degrees is not None:
        return koszul_betti(_parse_degrees(args.degrees))
    return _load_diagram(args.infile)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bsdecomp",
        description="Exact decompositions of Betti diagrams into pure diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_diagram_source(p, require=True):
        group = p.add_mutually_exclusive_group(required=require)
        group.add_argument("--degrees", help="complete-intersection degrees, e.g. 1,2,4,8")
        group.add_argument("--in", dest="infile", help="BETTI/1 file")

    p = sub.add_parser("ci-betti", help="Betti diagram of a complete intersection")
    p.add_argument("--degrees", required=True)

    p = sub.add_parser("decompose", help="greedy chain decomposition")
    add_diagram_source(p)
    p.add_argument("--elim-table", action="store_true", help="print the elimination grid instead of terms")

    p = sub.add_parser("elim-table", help="elimination table of the greedy decomposition")
    add_diagram_source(p)

    p = sub.add_parser("closed-form", help="closed-form decomposition, codim 1..3")
    p.add_argument("--degrees", required=True)

    p = sub.add_parser("predict-first-elim", help="first-elimination column, codim 4")
    p.add_argument("--degrees", required=True)

    p = sub.add_parser("shuffle", help="expand a product of pure diagrams")
    p.add_argument("--seq", action="append", required=True, help="degree sequence, e.g. 0,3,5 (repeatable)")
    p.add_argument("--shuffle-cap", type=int, default=None)

    p = sub.add_parser("ci-shuffle", help="order-free decomposition of a complete intersection")
    p.add_argument("--degrees", required=True)
    p.add_argument("--shuffle-cap", type=int, default=None)

    p = sub.add_parser("tensor", help="tensor product of diagrams")
    p.add_argument("--in", dest="infiles", action="append", required=True, help="BETTI/1 file (repeatable)")

    p = sub.add_parser("quotient", help="decomposition after quotienting by a regular element")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--degrees", help="decompose this complete intersection first")
    group.add_argument("--in", dest="infile", help="file of coeff<TAB>(sequence) lines")
    p.add_argument("--element", type=int, required=True, help="degree of the regular element")
    p.add_argument("--shuffle-cap", type=int, default=None)

    p = sub.add_parser("census", help="sweep elimination signatures")
    p.add_argument("--codim", type=int, required=True, choices=(4, 5))
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--format", choices=("text", "tsv"), default="text")

    sub.add_parser("verify-paper", help="run every golden verification check")

    return parser


def run(args, out):
    cmd = args.command
    if cmd == "ci-betti":
        out.write(format_betti(koszul_betti(_parse_degrees(args.degrees))))
    elif cmd == "decompose":
        trace = greedy_decompose(_input_diagram(args))
        if args.elim_table:
            out.write(trace.table.grid() + "\n")
        else:
            _print_terms(trace.decomposition, out)
    elif cmd == "elim-table":
        trace = greedy_decompose(_input_diagram(args))
        out.write(trace.table.grid() + "\n")
    elif cmd == "closed-form":
        _print_terms(closed_form_decomposition(_parse_degrees(args.degrees)), out)
    elif cmd == "predict-first-elim":
        out.write(str(codim4_first_elimination(_parse_degrees(args.degrees))) + "\n")
    elif cmd == "shuffle":
        seqs = [parse_sequence(s) for s in args.seq]
        _print_terms(shuffle_product(seqs, cap=args.shuffle_cap), out)
    elif cmd == "ci-shuffle":
        dec = ci_shuffle_decomposition(_parse_degrees(args.degrees), cap=args.shuffle_cap)
        _print_terms(dec, out)
    elif cmd == "tensor":
        diagrams = [_load_diagram(path) for path in args.infiles]
        if not diagrams:
            raise BsdecompError("tensor needs at least one input")
        result = diagrams[0]
        for d in diagrams[1:]:
            result = tensor(result, d)
        out.write(format_betti(result))
    elif cmd == "quotient":
        if args.degrees is not None:
            dec = greedy_decompose(koszul_betti(_parse_degrees(args.degrees))).decomposition
            terms = dec.terms
        else:
            terms = _read_terms(args.infile)
        result = quotient_by_regular_element(terms, args.element, cap=args.shuffle_cap)
        _print_terms(result, out)
    elif cmd == "census":
        if args.format == "tsv":
            for line in census_mod.tsv_lines(args.codim, args.max_degree, args.strict):
                out.write(line + "\n")
        else:
            report = census_mod.run_census(args.codim, args.max_degree, args.strict)
            out.write(census_mod.format_report(report) + "\n")
    elif cmd == "verify-paper":
        results = reference.run_checks()
        failed = 0
        for name, ok in results:
            out.write(f"{'PASS' if ok else 'FAIL'}  {name}\n")
            failed += not ok
        return 1 if failed else 0
    else:  # pragma: no cover - argparse enforces the choices
        raise AssertionError(cmd)
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args, sys.stdout)
    except BsdecompError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
