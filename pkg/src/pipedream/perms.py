"""Permutations in one-line notation and pattern machinery.

Permutations are words on 1..n; the empty permutation (n = 0) is a valid
value and seeds every recursion in this package.  Pattern counting is a
brute-force scan over index subsets: sizes never exceed 9 here, and an
auditable census beats a clever one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .errors import NotAPermutation


class Permutation(tuple):
    """A permutation of 1..n as an immutable one-line word.

    Ordering and hashing are inherited from ``tuple``, so lexicographic
    comparison and use as a cache key come for free.

    >>> Permutation([2, 1, 6, 4, 7, 5, 3]).length()
    8
    >>> Permutation.from_text("12453").avoids(Permutation((2, 1, 4, 3)))
    True
    """

    __slots__ = ()

    def __new__(cls, word=()):
        word = tuple(int(v) for v in word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise NotAPermutation(f"not a bijection of 1..{len(word)}: {word}")
        return super().__new__(cls, word)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        """Parse '2164753' (digits, n <= 9) or '10,1,2,...' (comma form)."""
        text = text.strip()
        if text in ("", "∅"):
            return cls()
        if "," in text:
            return cls(int(part) for part in text.split(","))
        if not text.isdigit():
            raise NotAPermutation(f"cannot parse permutation text {text!r}")
        return cls(int(ch) for ch in text)

    @property
    def size(self) -> int:
        return len(self)

    def text(self) -> str:
        if len(self) > 9:
            return ",".join(str(v) for v in self)
        return "".join(str(v) for v in self)

    def __repr__(self):
        return f"Permutation({self.text()!r})" if self else "Permutation(())"

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, v in enumerate(self, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def length(self) -> int:
        """Coxeter length: the number of inversions."""
        return sum(1 for i, j in combinations(range(len(self)), 2)
                   if self[i] > self[j])

    def contains(self, pattern: "Permutation") -> bool:
        return pattern_count(pattern, self) > 0

    def avoids(self, pattern: "Permutation") -> bool:
        return pattern_count(pattern, self) == 0


@dataclass(frozen=True)
class SubwordSelection:
    """A subword of ``host`` given by strictly increasing 1-based indices."""

    host: Permutation
    indices: tuple[int, ...]

    def __post_init__(self):
        idx = self.indices
        if any(idx[i] >= idx[i + 1] for i in range(len(idx) - 1)):
            raise ValueError(f"indices not strictly increasing: {idx}")
        if idx and (idx[0] < 1 or idx[-1] > len(self.host)):
            raise ValueError(f"indices out of range for host of size {len(self.host)}")

    def __len__(self):
        return len(self.indices)

    def values(self) -> tuple[int, ...]:
        return tuple(self.host[i - 1] for i in self.indices)

    def pattern(self) -> Permutation:
        return flatten_word(self.values())

    @classmethod
    def full(cls, host: Permutation) -> "SubwordSelection":
        return cls(host, tuple(range(1, len(host) + 1)))

    @classmethod
    def of_values(cls, host: Permutation, values) -> "SubwordSelection":
        """Select the positions of the given entry values, in word order."""
        wanted = set(values)
        return cls(host, tuple(i for i, v in enumerate(host, start=1) if v in wanted))


def flatten_word(values) -> Permutation:
    """The permutation with the same relative order as ``values``.

    >>> flatten_word((2, 5, 3)).text()
    '132'
    """
    order = sorted(values)
    rank = {v: r for r, v in enumerate(order, start=1)}
    return Permutation(rank[v] for v in values)


def flatten(selection: SubwordSelection) -> Permutation:
    return selection.pattern()


def subwords(w: Permutation, m: int):
    """All size-m index selections of w, in lexicographic index order."""
    if not 0 <= m <= len(w):
        raise ValueError(f"subword size {m} out of range for size {len(w)}")
    for idx in combinations(range(1, len(w) + 1), m):
        yield SubwordSelection(w, idx)


def all_subwords(w: Permutation):
    for m in range(len(w) + 1):
        yield from subwords(w, m)


def pattern_count(u: Permutation, w: Permutation) -> int:
    """Number of subwords of w order-isomorphic to u; 0 means w avoids u."""
    m, n = len(u), len(w)
    if m > n:
        return 0
    if m == 0:
        return 1
    target = tuple(u)
    count = 0
    for idx in combinations(range(n), m):
        values = [w[i] for i in idx]
        order = sorted(values)
        rank = {v: r for r, v in enumerate(order, start=1)}
        if tuple(rank[v] for v in values) == target:
            count += 1
    return count


def pattern_census(w: Permutation) -> dict[tuple[int, ...], int]:
    """Occurrence counts of every pattern of w (the full word included)."""
    n = len(w)
    census: dict[tuple[int, ...], int] = {}
    for m in range(n + 1):
        for idx in combinations(range(n), m):
            values = [w[i] for i in idx]
            order = sorted(values)
            rank = {v: r for r, v in enumerate(order, start=1)}
            key = tuple(rank[v] for v in values)
            census[key] = census.get(key, 0) + 1
    return census


PATTERN_1243 = Permutation((1, 2, 4, 3))
PATTERN_2143 = Permutation((2, 1, 4, 3))
PATTERN_132 = Permutation((1, 3, 2))
PATTERN_1432 = Permutation((1, 4, 3, 2))


def is_vexillary(w: Permutation) -> bool:
    """Vexillary means 2143-avoiding."""
    return w.avoids(PATTERN_2143)


def skew_sum(u: Permutation, v: Permutation) -> Permutation:
    """u shifted above v: (u1+n)...(um+n) v1...vn."""
    n = len(v)
    return Permutation(tuple(a + n for a in u) + tuple(v))


def layered(n: int) -> list[Permutation]:
    """All layered permutations of size n, one per composition of n.

    Each composition (n_1, ..., n_k) contributes the concatenation of
    decreasing blocks n_1..1, (n_1+n_2)..(n_1+1), and so on.
    """
    if n < 0:
        raise ValueError("size must be nonnegative")
    if n == 0:
        return [Permutation()]
    result = set()
    # compositions of n via subsets of the n-1 gaps
    for gaps in range(1 << (n - 1)):
        word = []
        start = 0
        size = 1
        for pos in range(n - 1):
            if gaps >> pos & 1:
                word.extend(range(start + size, start, -1))
                start += size
                size = 1
            else:
                size += 1
        word.extend(range(start + size, start, -1))
        result.add(Permutation(word))
    return sorted(result)


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Permutation, ...]:
    """All of S_n in lexicographic order."""
    return tuple(Permutation(p) for p in permutations(range(1, n + 1)))
