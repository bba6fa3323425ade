import pytest

from pipedream import (BetaPolynomial, NegativeExponent, Permutation,
                       beta_weight, enumerate_asm, from_asm,
                       nonreduced_witness, resolve, trace)
from pipedream.ktheory import COL_MAJOR, ROW_MAJOR
from conftest import load_grid


def P(text):
    return Permutation.from_text(text)


class TestResolve:
    def test_first_figure_resolves_to_bpd_k(self, fig_bpd_1, fig_bpd_k):
        resolved, typ = resolve(fig_bpd_1)
        assert typ == P("4261753")
        assert resolved.to_ascii() == fig_bpd_k.to_ascii()
        assert resolved.underlying() == fig_bpd_1

    def test_reduced_grid_unchanged(self, fig_bpd_2):
        resolved, typ = resolve(fig_bpd_2)
        assert resolved.rows == fig_bpd_2.rows
        assert typ == trace(fig_bpd_2).perm == P("2346175")

    def test_resolution_changes_diagram_iff_nonreduced(self):
        # the diagram acquires bumps exactly when some pair crosses twice;
        # the type can still coincide with the permutation for nonreduced
        # grids when every repeated pair crosses an odd number of times
        for n in range(1, 6):
            for asm in enumerate_asm(n):
                grid = from_asm(asm)
                tr = trace(grid)
                resolved, typ = resolve(grid)
                assert (resolved.rows == grid.rows) == tr.is_reduced
                if tr.is_reduced:
                    assert typ == tr.perm

    def test_type_can_match_perm_on_nonreduced_grid(self):
        # triple crossing of pipes 1 and 2: two bumps appear but the exit
        # pattern is unchanged
        grid = load_grid("fig_phi_image")
        tr = trace(grid)
        assert not tr.is_reduced
        assert tr.crossings[(1, 2)] == 3
        resolved, typ = resolve(grid)
        assert typ == tr.perm == P("21543")
        assert resolved.rows != grid.rows

    def test_idempotent(self):
        # no strand pair crosses twice after resolution, so a second pass
        # over the remaining crosses has nothing left to convert
        for n in range(1, 6):
            for asm in enumerate_asm(n):
                grid = from_asm(asm)
                resolved, typ = resolve(grid)
                assert trace(resolved).is_reduced
                again, typ2 = resolve(resolved.underlying())
                assert again.rows == resolved.rows
                assert typ2 == typ

    def test_blank_count_bounds_type_length(self):
        # blanks never dip below the length of the type, with equality
        # exactly on reduced grids
        for n in range(1, 6):
            for asm in enumerate_asm(n):
                grid = from_asm(asm)
                tr = trace(grid)
                _, typ = resolve(grid)
                assert tr.blank_count >= typ.length()
                assert (tr.blank_count == typ.length()) == tr.is_reduced

    def test_order_robustness_small(self):
        for n in range(1, 5):
            for asm in enumerate_asm(n):
                grid = from_asm(asm)
                res_a, typ_a = resolve(grid, COL_MAJOR)
                res_b, typ_b = resolve(grid, ROW_MAJOR)
                assert res_a == res_b
                assert typ_a == typ_b

    def test_nonreduced_red_bpd(self, red_bpds):
        _, typ = resolve(red_bpds[3])
        assert typ == P("2143")


class TestBetaWeight:
    def test_reduced_no_jelbows(self):
        grid = load_grid("fig_red_bpd_1")
        assert beta_weight(grid, P("1243").length()) == BetaPolynomial.one()

    def test_red_bpd_weights_sum(self, red_bpds):
        ell = P("1243").length()
        weights = [beta_weight(g, ell) for g in red_bpds[:3]]
        assert weights[0] == BetaPolynomial.one()
        assert weights[1] == BetaPolynomial.from_coeffs([1, 1])
        assert weights[2] == BetaPolynomial.from_coeffs([1, 2, 1])
        total = weights[0] + weights[1] + weights[2]
        assert total == BetaPolynomial.from_coeffs([3, 3, 1])
        assert total(0) == 3

    def test_beta_one_counts_jelbows(self, fig_bpd_1, fig_bpd_2):
        from pipedream import Tile

        for g in (fig_bpd_1, fig_bpd_2):
            _, typ = resolve(g)
            wt = beta_weight(g, typ.length())
            assert wt(1) == 2 ** g.count(Tile.J_ELBOW)

    def test_negative_exponent(self, red_bpds):
        with pytest.raises(NegativeExponent):
            beta_weight(red_bpds[0], 5)

    def test_weight_at_zero_detects_reduced(self):
        for n in range(1, 5):
            for asm in enumerate_asm(n):
                grid = from_asm(asm)
                tr = trace(grid)
                wt = beta_weight(grid, tr.perm.length())
                assert (wt(0) == 1) == tr.is_reduced


class TestNonreducedWitness:
    def test_reduced_has_no_witness(self, fig_bpd_2, red_bpds):
        assert nonreduced_witness(fig_bpd_2) is None
        for g in red_bpds[:3]:
            assert nonreduced_witness(g) is None

    def test_blue_grid_witness(self, red_bpds):
        witness = nonreduced_witness(red_bpds[3])
        assert witness is not None
        assert witness.parity == "even"
        assert witness.pattern == P("1243")
        assert witness.occurrence.pattern() == P("1243")
        # 1243 contains itself as the only occurrence
        assert witness.occurrence.indices == (1, 2, 3, 4)

    def test_first_figure_witness(self, fig_bpd_1):
        witness = nonreduced_witness(fig_bpd_1)
        # pipes 1 and 2 cross three times: odd parity forces 2143
        assert witness.parity == "odd"
        assert witness.pattern == P("2143")
        assert witness.occurrence.pattern() == P("2143")

    def test_exhaustive_n4(self):
        nonreduced = 0
        for asm in enumerate_asm(4):
            grid = from_asm(asm)
            if trace(grid).is_reduced:
                assert nonreduced_witness(grid) is None
            else:
                nonreduced += 1
                assert nonreduced_witness(grid) is not None
        assert nonreduced > 0
