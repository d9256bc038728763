import random
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from bsdecomp import (
    CIType,
    Diagram,
    NotInCone,
    elimination_table,
    greedy_decompose,
    koszul_betti,
    leq,
    normalize,
    pure,
    verify_symmetric,
)
from bsdecomp.reference import (
    DECOMP_1_2_4_8,
    ELIM_TABLE_1_2_4_8,
    ELIM_TABLE_3_4_5_7,
    ELIM_TABLE_4_5_7_9,
)


def grid_cells(text):
    return [line.split() for line in text.splitlines()]


class TestGreedyDecompose:
    def test_koszul_1_2(self):
        trace = greedy_decompose(koszul_betti(normalize((1, 2))))
        assert trace.decomposition.terms == ((2, (0, 1, 3)), (2, (0, 2, 3)))

    def test_koszul_1_2_4_8(self):
        trace = greedy_decompose(koszul_betti(normalize((1, 2, 4, 8))))
        assert trace.decomposition.terms == DECOMP_1_2_4_8

    def test_pure_input_single_term(self):
        trace = greedy_decompose(pure((0, 2, 3, 4)).scale(5))
        assert trace.decomposition.terms == ((5, (0, 2, 3, 4)),)
        assert trace.table.iterations == 1

    def test_koszul_2_3_7(self):
        trace = greedy_decompose(koszul_betti(normalize((2, 3, 7))))
        assert trace.decomposition.terms == (
            (60, (0, 2, 5, 12)),
            (30, (0, 3, 5, 12)),
            (72, (0, 3, 9, 12)),
            (30, (0, 7, 9, 12)),
            (60, (0, 7, 10, 12)),
        )

    def test_reconstruction_random_koszul(self):
        rng = random.Random(20260823)
        for _ in range(200):
            n = rng.randint(1, 5)
            degrees = sorted(rng.randint(1, 7) for _ in range(n))
            diagram = koszul_betti(CIType(tuple(degrees)))
            trace = greedy_decompose(diagram)
            assert trace.decomposition.expand() == diagram
            assert all(c > 0 for c, _ in trace.decomposition)

    def test_chain_property(self):
        trace = greedy_decompose(koszul_betti(normalize((3, 4, 5, 7))))
        seqs = [d for _, d in trace.decomposition]
        for a, b in zip(seqs, seqs[1:]):
            assert leq(a, b) and a != b

    def test_progress_bound(self):
        diagram = koszul_betti(normalize((2, 3, 4, 5)))
        trace = greedy_decompose(diagram)
        assert trace.table.iterations <= len(diagram)

    def test_determinism(self):
        diagram = koszul_betti(normalize((4, 5, 7, 9)))
        assert greedy_decompose(diagram) == greedy_decompose(diagram)

    def test_coefficients_are_fractions(self):
        trace = greedy_decompose(pure((0, 1, 3)))
        (coeff, _), = trace.decomposition.terms
        assert isinstance(coeff, Fraction)


class TestNotInCone:
    def test_empty_diagram(self):
        with pytest.raises(NotInCone):
            greedy_decompose(Diagram())

    def test_negative_entries(self):
        with pytest.raises(NotInCone):
            greedy_decompose(Diagram({(0, 0): 1, (1, 1): -1}))

    def test_non_increasing_minima(self):
        with pytest.raises(NotInCone):
            greedy_decompose(Diagram({(0, 1): 1, (1, 1): 1}))

    def test_partial_trace_in_payload(self):
        # pi<0,1,3> plus a stray entry: the first subtraction clears the
        # pure part, leaving a residual whose column 0 is empty.
        bad = pure((0, 1, 3)) + Diagram({(1, 2): Fraction(1, 7)})
        with pytest.raises(NotInCone) as exc:
            greedy_decompose(bad)
        assert exc.value.partial is not None
        assert exc.value.residual is not None
        assert not exc.value.residual.is_zero()

    def test_empty_middle_column(self):
        with pytest.raises(NotInCone):
            greedy_decompose(Diagram({(0, 0): 1, (2, 3): 1}))


class TestEliminationTable:
    def test_table_1_2_4_8(self):
        table = elimination_table(koszul_betti(normalize((1, 2, 4, 8))))
        assert grid_cells(table.grid()) == grid_cells(ELIM_TABLE_1_2_4_8)

    def test_table_3_4_5_7(self):
        table = elimination_table(koszul_betti(normalize((3, 4, 5, 7))))
        assert grid_cells(table.grid()) == grid_cells(ELIM_TABLE_3_4_5_7)
        first = [key for key, it in table.cells.items() if it == 1]
        assert first == [(2, 7)]

    def test_table_4_5_7_9(self):
        table = elimination_table(koszul_betti(normalize((4, 5, 7, 9))))
        assert grid_cells(table.grid()) == grid_cells(ELIM_TABLE_4_5_7_9)
        assert table.iterations == 8
        assert table.multiple_iterations() == {1, 2, 6, 7, 8}

    def test_pure_diagram_all_ones(self):
        table = elimination_table(pure((0, 3, 5, 9)))
        assert set(table.cells.values()) == {1}
        assert table.iterations == 1

    def test_support_and_range(self):
        diagram = koszul_betti(normalize((2, 3, 5)))
        table = elimination_table(diagram)
        assert set(table.cells) == set(diagram.support)
        values = set(table.cells.values())
        assert min(values) >= 1
        assert table.iterations in values
        assert max(values) == table.iterations


class TestSymmetry:
    def test_koszul_1_2_4_8(self):
        t = normalize((1, 2, 4, 8))
        trace = greedy_decompose(koszul_betti(t))
        assert verify_symmetric(trace, t.regularity, t.codim)

    def test_koszul_2_3_7(self):
        t = normalize((2, 3, 7))
        trace = greedy_decompose(koszul_betti(t))
        assert verify_symmetric(trace, t.regularity, t.codim)

    def test_single_pure_term(self):
        trace = greedy_decompose(pure((0, 1, 2)))
        assert verify_symmetric(trace, 0, 2)

    def test_asymmetric_input_returns_false(self):
        # A non-Gorenstein cone element: unequal mirror coefficients.
        diagram = pure((0, 1, 3)).scale(2) + pure((0, 2, 3)).scale(5)
        trace = greedy_decompose(diagram)
        assert not verify_symmetric(trace, 1, 2)

    def test_all_small_koszul(self):
        for n in range(1, 5):
            for degrees in combinations_with_replacement(range(1, 7), n):
                t = CIType(degrees)
                trace = greedy_decompose(koszul_betti(t))
                assert verify_symmetric(trace, t.regularity, t.codim)
