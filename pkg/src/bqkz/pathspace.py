"""Closed A_{k-1} lattice paths of length kn and their tableau description.

A path is a word over the steps 1..k in which every step occurs n times and
every prefix contains at least as many j's as (j+1)'s.  Such words are in
bijection with standard Young tableaux of rectangular k x n shape (step m
equal to j puts m in the first free box of row j).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Iterator

DEFAULT_SIZE_CAP = 14


class PathError(ValueError):
    pass


class InvalidWord(PathError):
    pass


class SizeCapExceeded(PathError):
    pass


class ShapeMismatch(PathError):
    pass


class BallotViolation(PathError):
    pass


class PathIndexOutOfRange(PathError, IndexError):
    pass


Word = tuple[int, ...]


@dataclass(frozen=True)
class PathWord:
    k: int
    n: int
    steps: Word

    def __post_init__(self):
        check_word(self.k, self.n, self.steps)

    def __str__(self):
        return word_str(self.steps)


def word_str(w: Word) -> str:
    return "".join(str(s) if s < 10 else f"[{s}]" for s in w)


def parse_word(text: str) -> Word:
    """Parse "112233" (single-digit steps only; use lists beyond k = 9)."""
    if not text.isdigit():
        raise InvalidWord(f"bad path string {text!r}")
    return tuple(int(c) for c in text)


def is_ballot(k: int, w: Word) -> bool:
    counts = [0] * (k + 2)
    for s in w:
        if not 1 <= s <= k:
            return False
        counts[s] += 1
        if s > 1 and counts[s] > counts[s - 1]:
            return False
    return True


def check_word(k: int, n: int, w: Word) -> None:
    if len(w) != k * n:
        raise InvalidWord(f"length {len(w)} != {k}*{n}")
    if not is_ballot(k, w):
        raise InvalidWord(f"{word_str(w)} violates the lattice-word condition")
    for j in range(1, k + 1):
        if w.count(j) != n:
            raise InvalidWord(f"step {j} does not occur exactly {n} times")


def count(k: int, n: int) -> int:
    """Number of closed paths: (kn)! prod_{j<k} j!/(n+j)!."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    num = factorial(k * n)
    den = 1
    for j in range(k):
        num *= factorial(j)
        den *= factorial(n + j)
    assert num % den == 0
    return num // den


def inversions(w: Word) -> int:
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


def pi_f(k: int, n: int) -> Word:
    return tuple(range(1, k + 1)) * n


def pi_0(k: int, n: int) -> Word:
    return tuple(j for j in range(1, k + 1) for _ in range(n))


def rank(w: Word, k: int | None = None, n: int | None = None) -> int:
    """Number of lozenges separating w from pi_f (inv(pi_f) - inv(w))."""
    if k is None:
        k = max(w)
    if n is None:
        n = len(w) // k
    return inversions(pi_f(k, n)) - inversions(w)


def _ballot_words(k: int, n: int, prefix: Word = ()) -> Iterator[Word]:
    counts = [0] * (k + 1)
    for s in prefix:
        counts[s] += 1
    word = list(prefix)
    N = k * n

    def rec():
        if len(word) == N:
            yield tuple(word)
            return
        for s in range(1, k + 1):
            if counts[s] < n and (s == 1 or counts[s] < counts[s - 1]):
                counts[s] += 1
                word.append(s)
                yield from rec()
                word.pop()
                counts[s] -= 1

    yield from rec()


@dataclass(frozen=True)
class Basis:
    k: int
    n: int
    paths: tuple[Word, ...]
    index: dict = field(compare=False, hash=False, repr=False, default=None)

    def __post_init__(self):
        if self.index is None:
            object.__setattr__(self, "index", {p: i for i, p in enumerate(self.paths)})

    def __len__(self):
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def __getitem__(self, i):
        return self.paths[i]

    @property
    def N(self) -> int:
        return self.k * self.n

    @property
    def pi_f(self) -> Word:
        return pi_f(self.k, self.n)

    @property
    def pi_0(self) -> Word:
        return pi_0(self.k, self.n)

    def position(self, w: Word) -> int:
        return self.index[tuple(w)]

    def ranks(self) -> list[int]:
        return [rank(p, self.k, self.n) for p in self.paths]


def canonical_sort_key(k: int, n: int):
    return lambda w: (rank(w, k, n), w)


def enumerate_paths(k: int, n: int, size_cap: int = DEFAULT_SIZE_CAP) -> Basis:
    """All closed paths in canonical order (rank ascending, then lexicographic)."""
    if k * n > size_cap:
        raise SizeCapExceeded(f"kn = {k * n} exceeds the size cap {size_cap}")
    words = sorted(_ballot_words(k, n), key=canonical_sort_key(k, n))
    return Basis(k, n, tuple(words))


def enumerate_with_prefix(k: int, n: int, j: int, size_cap: int = DEFAULT_SIZE_CAP) -> Basis:
    """Sub-basis of the paths starting with the convex run 1, 2, ..., j."""
    if not 0 <= j <= k - 1:
        raise ValueError(f"prefix length {j} outside 0..{k - 1}")
    full = enumerate_paths(k, n, size_cap)
    prefix = tuple(range(1, j + 1))
    return Basis(k, n, tuple(p for p in full.paths if p[:j] == prefix))


def to_tableau(w: Word, k: int | None = None) -> list[list[int]]:
    """Rows of the rectangular standard tableau of a path."""
    k = max(w) if k is None else k
    n = len(w) // k
    check_word(k, n, tuple(w))
    rows: list[list[int]] = [[] for _ in range(k)]
    for m, s in enumerate(w, start=1):
        rows[s - 1].append(m)
    return rows


def from_tableau(rows: list[list[int]]) -> Word:
    k = len(rows)
    n = len(rows[0]) if rows else 0
    if any(len(r) != n for r in rows):
        raise InvalidWord("tableau is not rectangular")
    entries = sorted(x for r in rows for x in r)
    if entries != list(range(1, k * n + 1)):
        raise InvalidWord("tableau entries must be 1..kn")
    for r in rows:
        if any(a >= b for a, b in zip(r, r[1:])):
            raise InvalidWord("rows must increase")
    for a, b in zip(rows, rows[1:]):
        if any(x >= y for x, y in zip(a, b)):
            raise InvalidWord("columns must increase")
    step = {}
    for j, r in enumerate(rows, start=1):
        for m in r:
            step[m] = j
    return tuple(step[m] for m in range(1, k * n + 1))


def dual(w: Word, k: int | None = None) -> Word:
    """Transpose the tableau: an A_{k-1} path of length kn becomes an A_{n-1} path."""
    rows = to_tableau(w, k)
    cols = [list(c) for c in zip(*rows)]
    return from_tableau(cols)


def classify(w: Word, i: int) -> str:
    """Local shape at steps i, i+1 (1-based): convex, flat or concave."""
    if not 1 <= i <= len(w) - 1:
        raise PathIndexOutOfRange(f"position {i} outside 1..{len(w) - 1}")
    a, b = w[i - 1], w[i]
    if a < b:
        return "convex"
    if a == b:
        return "flat"
    return "concave"


def _swap(w: Word, i: int) -> Word:
    lst = list(w)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def add_lozenge(w: Word, i: int, k: int | None = None) -> Word:
    if classify(w, i) != "concave":
        raise ShapeMismatch(f"{word_str(w)} is {classify(w, i)} at {i}, need concave")
    out = _swap(w, i)
    if not is_ballot(k or max(w), out):
        raise BallotViolation(word_str(out))
    return out


def remove_lozenge(w: Word, i: int, k: int | None = None) -> Word:
    if classify(w, i) != "convex":
        raise ShapeMismatch(f"{word_str(w)} is {classify(w, i)} at {i}, need convex")
    out = _swap(w, i)
    if not is_ballot(k or max(w), out):
        raise BallotViolation(word_str(out))
    return out


def lower_covers(w: Word, k: int) -> list[tuple[int, Word]]:
    """(i, w') for every lozenge that can be removed from w."""
    out = []
    for i in range(1, len(w)):
        if w[i - 1] < w[i]:
            cand = _swap(w, i)
            if is_ballot(k, cand):
                out.append((i, cand))
    return out


def upper_covers(w: Word, k: int) -> list[tuple[int, Word]]:
    return [(i, _swap(w, i)) for i in range(1, len(w)) if w[i - 1] > w[i]]


def contained_in(small: Word, big: Word, k: int) -> bool:
    """Inclusion order: big is reached from small by adding lozenges."""
    if small == big:
        return True
    n = len(small) // k
    target = rank(big, k, n)
    frontier = {small}
    while frontier:
        nxt = set()
        for w in frontier:
            for _, u in upper_covers(w, k):
                if u == big:
                    return True
                if rank(u, k, n) < target:
                    nxt.add(u)
        frontier = nxt
    return False


def convex_count(w: Word) -> int:
    return sum(1 for a, b in zip(w, w[1:]) if a < b)
