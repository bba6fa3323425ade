"""Persistent json-lines store for computed specialization polynomials.

One entry per line: {"word": "1243", "nu_coeffs": [3, 3, 1],
"schema_version": 1} with coefficients in ascending powers.  Keys are the
one-line words themselves so the file stays human-auditable.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .errors import NotAPermutation
from .perms import Permutation
from .polynomials import BetaPolynomial

SCHEMA_VERSION = 1
ENV_VAR = "PIPEDREAM_CACHE"


def default_cache_path() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path.home() / ".cache" / "pipedream" / "nu.jsonl"


def load_cache(path=None) -> tuple[dict[Permutation, BetaPolynomial], int]:
    """Read the cache; a missing file is an empty map.

    Returns (values, skipped) where ``skipped`` counts corrupt or
    foreign-schema lines that were ignored.
    """
    path = default_cache_path() if path is None else Path(path)
    values: dict[Permutation, BetaPolynomial] = {}
    skipped = 0
    try:
        lines = path.read_text().splitlines()
    except FileNotFoundError:
        return values, 0
    for line in lines:
        line = line.strip()
        if not line:
            continue
        try:
            entry = json.loads(line)
            if entry.get("schema_version") != SCHEMA_VERSION:
                skipped += 1
                continue
            word = Permutation.from_text(entry["word"])
            coeffs = [int(c) for c in entry["nu_coeffs"]]
        except (ValueError, KeyError, TypeError, NotAPermutation):
            skipped += 1
            continue
        values[word] = BetaPolynomial.from_coeffs(coeffs)
    return values, skipped


def store_cache(values: dict[Permutation, BetaPolynomial], path=None) -> Path:
    """Write the whole map atomically (temp file, then rename)."""
    path = default_cache_path() if path is None else Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = []
    for word in sorted(values):
        entry = {"word": word.text(),
                 "nu_coeffs": list(values[word].coeffs),
                 "schema_version": SCHEMA_VERSION}
        lines.append(json.dumps(entry, separators=(",", ":")))
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".nu-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write("\n".join(lines) + ("\n" if lines else ""))
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
    return path
