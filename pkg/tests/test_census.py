import random

import pytest

from bsdecomp import CIType, greedy_decompose, koszul_betti, pure
from bsdecomp.census import (
    format_report,
    iter_types,
    run_census,
    signature_of,
    tsv_lines,
)


class TestSignature:
    def test_3_4_5_7(self):
        sig = signature_of(CIType((3, 4, 5, 7)))
        assert sig.steps[0] == (1, (2,))
        assert sig.steps[1] == (2, (1,))
        assert sig.iterations == 12
        assert not sig.has_multiple_elimination()

    def test_1_2_4_8(self):
        sig = signature_of(CIType((1, 2, 4, 8)))
        assert sig.steps[0] == (1, (1,))
        assert sig.steps[1] == (2, (2,))
        assert sig.iterations == 12
        assert not sig.has_multiple_elimination()

    def test_4_5_7_9_multiple(self):
        sig = signature_of(CIType((4, 5, 7, 9)))
        assert sig.iterations == 8
        assert sig.has_multiple_elimination()
        multi = {it for it, cols in sig.steps if len(cols) > 1}
        # The final step drops the trivial outer columns but stays multiple.
        assert multi == {1, 2, 6, 7, 8}

    def test_final_step_drops_outer_columns(self):
        sig = signature_of(CIType((1, 2, 4, 8)))
        last_it, last_cols = sig.steps[-1]
        assert last_it == 12
        assert 0 not in last_cols
        assert 4 not in last_cols


class TestIterTypes:
    def test_strict_counting(self):
        assert [t.degrees for t in iter_types(4, 4, True)] == [(1, 2, 3, 4)]

    def test_weak_includes_repeats(self):
        degrees = [t.degrees for t in iter_types(4, 4, False)]
        assert (1, 1, 1, 1) in degrees
        assert len(degrees) == 35  # C(4+4-1, 4)


class TestRunCensus:
    def test_codim4_strict_10(self):
        report = run_census(4, 10, True)
        assert report.swept == 210
        assert report.no_multiple_signatures >= 8
        assert report.predicate_checked == 210
        assert report.predicate_agreed == 210

    def test_witness_lists_nonempty(self):
        report = run_census(4, 7, True)
        assert report.signatures
        for witnesses in report.signatures.values():
            assert witnesses

    def test_multiple_flag_matches_predicate(self):
        report = run_census(4, 8, True)
        for sig, witnesses in report.signatures.items():
            for degrees in witnesses:
                from bsdecomp import codim4_first_elimination, FirstElimination

                predicted = codim4_first_elimination(CIType(degrees))
                first = sig.first_columns()
                assert (predicted is FirstElimination.MULTIPLE) == (len(first) >= 2)

    def test_reconstruction_spot_check(self):
        rng = random.Random(7)
        types = list(iter_types(4, 9, True))
        for t in rng.sample(types, max(1, len(types) // 100)):
            diagram = koszul_betti(t)
            trace = greedy_decompose(diagram)
            total = None
            for coeff, d in trace.decomposition:
                term = pure(d).scale(coeff)
                total = term if total is None else total + term
            assert total == diagram

    def test_codim5_small(self):
        report = run_census(5, 6, True)
        assert report.swept == 6
        assert report.signatures

    def test_rejects_bad_codim(self):
        with pytest.raises(ValueError):
            run_census(3, 8, True)

    def test_rejects_too_small_strict_bound(self):
        with pytest.raises(ValueError):
            run_census(4, 3, True)

    def test_determinism(self):
        a = run_census(4, 8, True)
        b = run_census(4, 8, True)
        assert a.signature_totals == b.signature_totals


class TestOutput:
    def test_tsv_shape(self):
        lines = list(tsv_lines(4, 5, True))
        assert len(lines) == 5
        fields = lines[0].split("\t")
        assert len(fields) == 4
        assert fields[0] == "1,2,3,4"
        assert fields[3] in ("yes", "no")

    def test_report_text(self):
        report = run_census(4, 6, True)
        text = format_report(report)
        assert "tuples swept: 15" in text
        assert "predicate agreement" in text
