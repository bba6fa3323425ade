import json
import os
import subprocess
import sys

import pytest

from pipedream import BetaPolynomial, Permutation, nu
from pipedream.cache import SCHEMA_VERSION, default_cache_path, load_cache, store_cache
from pipedream.cli import main


def P(text):
    return Permutation.from_text(text)


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    path = tmp_path / "nu.jsonl"
    monkeypatch.setenv("PIPEDREAM_CACHE", str(path))
    return path


class TestCache:
    def test_round_trip(self, isolated_cache):
        values = {P("1243"): BetaPolynomial.from_coeffs([3, 3, 1]),
                  P("132"): BetaPolynomial.from_coeffs([2, 1]),
                  Permutation(): BetaPolynomial.one()}
        store_cache(values)
        loaded, skipped = load_cache()
        assert skipped == 0
        assert loaded == values

    def test_missing_file_is_empty(self, isolated_cache):
        loaded, skipped = load_cache()
        assert loaded == {}
        assert skipped == 0

    def test_corrupt_lines_skipped(self, isolated_cache):
        isolated_cache.write_text("\n".join([
            json.dumps({"word": "1243", "nu_coeffs": [3, 3, 1],
                        "schema_version": SCHEMA_VERSION}),
            "this is not json",
            json.dumps({"word": "99", "nu_coeffs": [1],
                        "schema_version": SCHEMA_VERSION}),
            json.dumps({"nu_coeffs": [1], "schema_version": SCHEMA_VERSION}),
        ]) + "\n")
        loaded, skipped = load_cache()
        assert list(loaded) == [P("1243")]
        assert skipped == 3

    def test_schema_version_mismatch_skipped(self, isolated_cache):
        isolated_cache.write_text(json.dumps(
            {"word": "12", "nu_coeffs": [1], "schema_version": SCHEMA_VERSION + 1}) + "\n")
        loaded, skipped = load_cache()
        assert loaded == {}
        assert skipped == 1

    def test_env_var_controls_path(self, isolated_cache):
        assert default_cache_path() == isolated_cache

    def test_cached_values_agree_with_fresh(self, isolated_cache):
        import random

        rng = random.Random(7)
        words = []
        for _ in range(100):
            n = rng.randint(0, 6)
            words.append(Permutation(rng.sample(range(1, n + 1), n)))
        fresh = {w: nu(w) for w in words}
        store_cache(fresh)
        loaded, _ = load_cache()
        for w in words:
            assert loaded[w] == fresh[w]


class TestCliCommands:
    def test_nu_output(self, capsys):
        assert main(["nu", "--perm", "1243"]) == 0
        assert capsys.readouterr().out.strip() == "b^2+3b+3"

    def test_nu_evaluated(self, capsys):
        assert main(["nu", "--perm", "1243", "--at", "1"]) == 0
        assert capsys.readouterr().out.strip() == "7"

    def test_coeff_output(self, capsys):
        assert main(["coeff", "--perm", "1243"]) == 0
        assert capsys.readouterr().out.strip() == "b^2+b"

    def test_coeff_ie_mode(self, capsys):
        assert main(["coeff", "--perm", "1243", "--mode", "ie"]) == 0
        assert capsys.readouterr().out.strip() == "b^2+b"

    def test_poly_output(self, capsys):
        assert main(["poly", "--perm", "132"]) == 0
        assert capsys.readouterr().out.strip() == "x1+x2+b*x1*x2"

    def test_enumerate_counts(self, capsys):
        assert main(["enumerate", "--perm", "1243", "--kind", "bpd"]) == 0
        out = capsys.readouterr().out
        assert "# 3 grid(s)" in out

    def test_enumerate_json(self, capsys):
        assert main(["enumerate", "--perm", "1243", "--format", "json"]) == 0
        lines = [l for l in capsys.readouterr().out.splitlines() if l]
        assert len(lines) == 4
        for line in lines:
            assert json.loads(line)["perm"] == [1, 2, 4, 3]

    def test_enumerate_subword_stratum(self, capsys):
        assert main(["enumerate", "--perm", "1243", "--kind", "bpd",
                     "--subword", "2,3,4"]) == 0
        assert "# 1 grid(s)" in capsys.readouterr().out

    def test_render(self, capsys):
        assert main(["render", "--perm", "21", "--index", "0",
                     "--format", "ascii"]) == 0
        assert capsys.readouterr().out == ".r\nr+\n"

    def test_render_svg(self, capsys):
        assert main(["render", "--perm", "21", "--index", "0",
                     "--format", "svg"]) == 0
        assert capsys.readouterr().out.startswith("<svg")

    def test_render_index_out_of_range(self, capsys):
        assert main(["render", "--perm", "21", "--index", "5"]) == 2

    def test_verify_pass(self, capsys):
        assert main(["verify", "thm-1243", "--n", "3"]) == 0
        assert "PASS" in capsys.readouterr().out

    def test_verify_json(self, capsys):
        assert main(["verify", "stanley", "--n", "3", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["passed"] is True

    def test_verify_guard_exceeded(self, capsys):
        assert main(["verify", "stanley", "--n", "6", "--guard", "5"]) == 2

    def test_maxima(self, capsys):
        assert main(["maxima", "--n", "4", "--beta", "1"]) == 0
        out = capsys.readouterr().out.strip()
        assert out == "n=4 beta=1 max_nu=11 max_c=4 argmax_nu=1432 argmax_c=1432"

    def test_cache_path_and_clear(self, capsys, isolated_cache):
        main(["nu", "--perm", "132"])
        capsys.readouterr()
        assert main(["cache", "path"]) == 0
        assert capsys.readouterr().out.strip() == str(isolated_cache)
        assert main(["cache", "clear"]) == 0
        assert not isolated_cache.exists()
        assert main(["cache", "clear"]) == 0  # idempotent

    def test_usage_error(self):
        assert main([]) == 2
        assert main(["verify", "no-such-check", "--n", "2"]) == 2

    def test_bad_permutation(self, capsys):
        assert main(["nu", "--perm", "1123"]) == 2

    def test_subword_with_wrong_kind(self, capsys):
        assert main(["enumerate", "--perm", "1243", "--kind", "mBPD",
                     "--subword", "1,2"]) == 2

    def test_nu_persists_to_cache(self, isolated_cache):
        main(["nu", "--perm", "1243"])
        loaded, _ = load_cache()
        assert loaded[P("1243")] == BetaPolynomial.from_coeffs([3, 3, 1])


class TestDeterminism:
    def test_byte_identical_across_processes(self, tmp_path):
        env = dict(os.environ, PIPEDREAM_CACHE=str(tmp_path / "c.jsonl"))
        cmd = [sys.executable, "-m", "pipedream.cli", "nu", "--perm", "1243"]
        first = subprocess.run(cmd, capture_output=True, env=env, check=True)
        second = subprocess.run(cmd, capture_output=True, env=env, check=True)
        assert first.stdout == second.stdout

        cmd = [sys.executable, "-m", "pipedream.cli", "enumerate",
               "--perm", "1243", "--format", "json"]
        first = subprocess.run(cmd, capture_output=True, env=env, check=True)
        second = subprocess.run(cmd, capture_output=True, env=env, check=True)
        assert first.stdout == second.stdout

        cmd = [sys.executable, "-m", "pipedream.cli", "verify", "skew", "--n", "3"]
        first = subprocess.run(cmd, capture_output=True, env=env, check=True)
        second = subprocess.run(cmd, capture_output=True, env=env, check=True)
        assert first.stdout == second.stdout
