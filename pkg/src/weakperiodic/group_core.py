"""Words in G_k, the free product of k+1 copies of Z/2, and the tree they label.

Vertex ``x`` of the Cayley tree of order ``k`` is a reduced word over the
generators ``a_1 .. a_{k+1}`` (1-based, every generator an involution).  The
root is the empty word.  Neighbours of ``x`` are ``x * a_j``; the one that
shortens the word is its parent.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NewType

import numpy as np

CosetClass = NewType("CosetClass", int)

INDEX_TWO = "index2"
INDEX_FOUR = "index4"


@dataclass(frozen=True, order=True)
class GroupWord:
    """Reduced word; construction rejects adjacent repeated letters."""

    k: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"tree order must be >= 1, got {self.k}")
        letters = tuple(int(a) for a in self.letters)
        for a in letters:
            if not 1 <= a <= self.k + 1:
                raise ValueError(f"generator index {a} outside 1..{self.k + 1}")
        for a, b in zip(letters, letters[1:]):
            if a == b:
                raise ValueError(f"word {letters} is not reduced")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def identity(cls, k: int) -> GroupWord:
        return cls(k, ())

    @classmethod
    def from_letters(cls, k: int, letters: Iterable[int]) -> GroupWord:
        """Build a word from an arbitrary (possibly unreduced) letter sequence."""
        return cls(k, _reduce(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: GroupWord) -> GroupWord:
        return multiply(self, other)

    def inverse(self) -> GroupWord:
        return GroupWord(self.k, self.letters[::-1])

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return "".join(f"a{a}" for a in self.letters)


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for a in letters:
        if stack and stack[-1] == a:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


def multiply(x: GroupWord, y: GroupWord) -> GroupWord:
    if x.k != y.k:
        raise ValueError(f"cannot multiply words of tree orders {x.k} and {y.k}")
    left = list(x.letters)
    right = y.letters
    i = 0
    while left and i < len(right) and left[-1] == right[i]:
        left.pop()
        i += 1
    return GroupWord(x.k, tuple(left) + right[i:])


def generator(k: int, j: int) -> GroupWord:
    return GroupWord(k, (j,))


def distance(x: GroupWord, y: GroupWord) -> int:
    return len(multiply(x.inverse(), y))


def parent(x: GroupWord) -> GroupWord:
    """The neighbour of ``x`` one step closer to the root."""
    if x.is_identity:
        raise ValueError("the root has no parent")
    return GroupWord(x.k, x.letters[:-1])


def neighbors(x: GroupWord) -> list[GroupWord]:
    return [multiply(x, generator(x.k, j)) for j in range(1, x.k + 2)]


def successors(x: GroupWord) -> list[GroupWord]:
    last = x.letters[-1] if x.letters else None
    return [GroupWord(x.k, x.letters + (j,)) for j in range(1, x.k + 2) if j != last]


def letter_count(x: GroupWord, j: int) -> int:
    if not 1 <= j <= x.k + 1:
        raise ValueError(f"generator index {j} outside 1..{x.k + 1}")
    return x.letters.count(j)


@dataclass(frozen=True)
class SubgroupSpec:
    """A normal subgroup of index 2 (``H_A``) or 4 (``H_A`` meet even-length words).

    ``A`` lists generator indices.  The index-4 subgroup degenerates to index 2
    when ``A`` is every generator, so that case is rejected.
    """

    kind: str
    A: frozenset[int]
    k: int

    def __post_init__(self):
        A = frozenset(int(a) for a in self.A)
        object.__setattr__(self, "A", A)
        if self.kind not in (INDEX_TWO, INDEX_FOUR):
            raise ValueError(f"unknown subgroup kind {self.kind!r}")
        if self.k < 1:
            raise ValueError(f"tree order must be >= 1, got {self.k}")
        if not A:
            raise ValueError("generator set A must be nonempty")
        if not A <= set(range(1, self.k + 2)):
            raise ValueError(f"A={sorted(A)} is not a subset of 1..{self.k + 1}")
        if self.kind == INDEX_FOUR and len(A) == self.k + 1:
            raise ValueError("index-4 subgroup needs A to be a proper subset of the generators")

    @classmethod
    def index_two(cls, A: Iterable[int], k: int) -> SubgroupSpec:
        return cls(INDEX_TWO, frozenset(A), k)

    @classmethod
    def index_four(cls, A: Iterable[int], k: int) -> SubgroupSpec:
        return cls(INDEX_FOUR, frozenset(A), k)

    @property
    def index(self) -> int:
        return 2 if self.kind == INDEX_TWO else 4

    @property
    def n_classes(self) -> int:
        return self.index

    def step(self, cls_: int, in_A: bool) -> int:
        """Class reached by multiplying on the right by a generator in / not in A."""
        if self.kind == INDEX_TWO:
            return cls_ ^ int(in_A)
        return cls_ ^ (int(in_A) | 2)

    def letter_type_counts(self) -> dict[bool, int]:
        """How many generators lie in A (True) and outside it (False)."""
        return {True: len(self.A), False: self.k + 1 - len(self.A)}


def coset_class(x: GroupWord, s: SubgroupSpec) -> CosetClass:
    """Coset label: index 2 gives A-parity; index 4 gives A-parity + 2 * length parity."""
    if x.k != s.k:
        raise ValueError(f"word of order {x.k} against subgroup of order {s.k}")
    a_parity = sum(1 for a in x.letters if a in s.A) % 2
    if s.kind == INDEX_TWO:
        return CosetClass(a_parity)
    return CosetClass(a_parity + 2 * (len(x.letters) % 2))


def ball_size(k: int, n: int) -> int:
    if k == 1:
        return 1 + 2 * n
    return 1 + (k + 1) * (k**n - 1) // (k - 1)


def iter_ball(k: int, n: int) -> Iterator[GroupWord]:
    """Words of length <= n in breadth-first order."""
    level = [GroupWord.identity(k)]
    yield level[0]
    for _ in range(n):
        level = [y for x in level for y in successors(x)]
        yield from level


def enumerate_ball(k: int, n: int) -> list[GroupWord]:
    if n < 0:
        raise ValueError("radius must be >= 0")
    return list(iter_ball(k, n))


@dataclass(frozen=True, eq=False)
class TreeLayout:
    """Array form of ``V_n`` for vectorised sweeps.

    Vertex ``v`` is stored breadth-first, so every parent precedes its
    children.  ``counts[v, j-1]`` is the number of letters ``a_j`` in the word.
    """

    k: int
    n: int
    depth: np.ndarray
    parent: np.ndarray
    last: np.ndarray
    counts: np.ndarray

    @property
    def size(self) -> int:
        return len(self.depth)

    def word(self, v: int) -> GroupWord:
        letters = []
        while v > 0:
            letters.append(int(self.last[v]))
            v = int(self.parent[v])
        return GroupWord(self.k, tuple(reversed(letters)))

    def classes(self, s: SubgroupSpec) -> np.ndarray:
        if s.k != self.k:
            raise ValueError(f"subgroup of order {s.k} on tree of order {self.k}")
        cols = [a - 1 for a in sorted(s.A)]
        parity = self.counts[:, cols].sum(axis=1) % 2
        if s.kind == INDEX_TWO:
            return parity.astype(np.int8)
        return (parity + 2 * (self.depth % 2)).astype(np.int8)


@lru_cache(maxsize=32)
def tree_layout(k: int, n: int) -> TreeLayout:
    # built level by level: each vertex of a level spawns its successors in generator order
    depth = [np.zeros(1, np.int16)]
    parent = [np.full(1, -1, np.int64)]
    last = [np.zeros(1, np.int8)]
    counts = [np.zeros((1, k + 1), np.int16)]
    level_idx = np.zeros(1, np.int64)
    level_last = np.zeros(1, np.int8)
    level_counts = counts[0]
    offset = 1
    for d in range(1, n + 1):
        par = np.repeat(level_idx, k + 1)
        gen = np.tile(np.arange(1, k + 2, dtype=np.int8), len(level_idx))
        keep = gen != np.repeat(level_last, k + 1)
        par, gen = par[keep], gen[keep]
        rows = np.repeat(np.arange(len(level_idx)), k + 1)[keep]
        cnt = level_counts[rows].copy()
        cnt[np.arange(len(gen)), gen - 1] += 1
        m = len(gen)
        depth.append(np.full(m, d, np.int16))
        parent.append(par)
        last.append(gen)
        counts.append(cnt)
        level_idx = np.arange(offset, offset + m, dtype=np.int64)
        level_last, level_counts = gen, cnt
        offset += m
    layout = TreeLayout(
        k=k,
        n=n,
        depth=np.concatenate(depth),
        parent=np.concatenate(parent),
        last=np.concatenate(last),
        counts=np.concatenate(counts),
    )
    for arr in (layout.depth, layout.parent, layout.last, layout.counts):
        arr.setflags(write=False)
    return layout
