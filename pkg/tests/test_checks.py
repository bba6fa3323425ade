import json

import pytest

from pipedream import (CHECK_IDS, GuardExceeded, Permutation, UnknownCheck,
                       layered, maxima_table, nu, pattern_count, run_check)
from pipedream.perms import PATTERN_132, PATTERN_1432, all_perms


def P(text):
    return Permutation.from_text(text)


class TestRunCheck:
    @pytest.mark.parametrize("check_id", CHECK_IDS)
    def test_every_check_passes_at_n4(self, check_id):
        report = run_check(check_id, 4)
        assert report.passed, report.failures
        assert report.instances_checked > 0

    def test_unknown_check(self):
        with pytest.raises(UnknownCheck):
            run_check("not-a-check", 3)

    def test_guard(self):
        with pytest.raises(GuardExceeded):
            run_check("thm-1243", 5, guard=4)

    def test_report_text_and_json(self):
        report = run_check("stanley", 3)
        assert "stanley n=3: PASS" in report.text()
        payload = json.loads(report.to_json())
        assert payload["passed"] is True
        assert payload["instances_checked"] == 6

    def test_thm_1243_exhaustive_n5(self):
        report = run_check("thm-1243", 5)
        assert report.passed
        # every permutation of size 5 avoiding 1243 is covered
        expected = sum(1 for w in all_perms(5) if w.avoids(P("1243")))
        assert report.instances_checked == expected

    def test_upper_bound_strict_at_1243(self):
        # nu = 3 but the pattern-weighted count of minimal reduced grids is
        # 1*1 + 1*2 + 1*1 = 4: the bound is strict exactly because the
        # stratum of subword 143 is empty
        from pipedream.specialization import EMPTY_SUMMARY, minimal_summary
        from pipedream.perms import pattern_census

        w = P("1243")
        bound = 0
        for key, count in pattern_census(w).items():
            u = Permutation(key)
            bound += minimal_summary(len(key)).get(u, EMPTY_SUMMARY).count_reduced * count
        assert nu(w).constant_term == 3
        assert bound == 4


class TestIntroBounds:
    def test_stanley_equivalence(self):
        for n in range(7):
            assert run_check("stanley", n).passed

    def test_132_1432_lower_bound(self):
        for n in range(7):
            for w in all_perms(n):
                bound = 1 + pattern_count(PATTERN_132, w) + pattern_count(PATTERN_1432, w)
                assert nu(w).constant_term >= bound

    def test_pattern_sum_through_size_six(self):
        for n in range(7):
            assert run_check("pattern-sum", n).passed


EXPECTED_MAXIMA = {
    0: (1, 1, ("",)),
    1: (1, 0, ("1",)),
    2: (1, 0, ("12", "21")),
    3: (3, 2, ("132",)),
    4: (11, 4, ("1432",)),
    5: (71, 44, ("12543", "21543")),
    6: (1101, 828, ("132654",)),
}


class TestMaxima:
    @pytest.mark.parametrize("n", sorted(EXPECTED_MAXIMA))
    def test_small_rows(self, n):
        max_nu, max_c, argmax = EXPECTED_MAXIMA[n]
        row = maxima_table(n, 1)
        assert row.max_nu == max_nu
        assert row.max_c == max_c
        assert tuple(w.text() for w in row.argmax_nu) == argmax
        assert row.argmax_nu == row.argmax_c

    def test_argmaxes_layered(self):
        for n in range(6):
            row = maxima_table(n, 1)
            layer = set(layered(n))
            assert set(row.argmax_nu) <= layer
            assert set(row.argmax_c) <= layer

    def test_beta_zero_row(self):
        row = maxima_table(4, 0)
        assert row.max_nu == 5  # attained by 1432
        assert row.max_c == 1
        assert P("1432") in row.argmax_nu

    def test_guard(self):
        with pytest.raises(GuardExceeded):
            maxima_table(12, 1)
        with pytest.raises(GuardExceeded):
            maxima_table(-1, 1)
