"""Value types and exact combinatorial algorithms for permutations.

Permutations are 1-based rank sequences in one-line notation; the empty
permutation is a valid value.  All operations are pure and all types are
immutable, so everything here is safe to use from concurrent callers.

Text format: space-separated values, e.g. ``"2 4 1 3"``; the empty string
denotes the empty permutation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from ._kernels import contains_arrays, is_si_array


class Permutation:
    """An arrangement of the values 1..n, each exactly once (n >= 0).

    >>> Permutation((2, 4, 1, 3))
    Permutation('2 4 1 3')
    >>> len(Permutation(()))
    0
    """

    __slots__ = ("entries", "_array", "_hash")

    def __init__(self, entries: Iterable[int]):
        entries = tuple(int(x) for x in entries)
        n = len(entries)
        if n > 0:
            mask = 0
            for x in entries:
                if x < 1 or x > n:
                    raise ValueError("entries must form a rearrangement of 1..n")
                mask |= 1 << x
            if mask != (2 ** (n + 1) - 2):
                raise ValueError("entries must form a rearrangement of 1..n")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_array", None)
        object.__setattr__(self, "_hash", hash(entries))

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.entries == other.entries

    def __lt__(self, other) -> bool:
        # length-then-lexicographic; used only for deterministic ordering
        return (len(self.entries), self.entries) < (len(other.entries), other.entries)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return "Permutation(%r)" % (str(self),)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.entries)

    def as_array(self) -> np.ndarray:
        arr = self._array
        if arr is None:
            arr = np.array(self.entries, dtype=np.int64)
            object.__setattr__(self, "_array", arr)
        return arr

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.entries)
        for i, v in enumerate(self.entries):
            inv[v - 1] = i + 1
        return Permutation(inv)

    def delete(self, index: int) -> "Permutation":
        """Pattern left after removing the entry at 0-based ``index``."""
        v = self.entries[index]
        return Permutation(
            x - 1 if x > v else x
            for i, x in enumerate(self.entries)
            if i != index
        )

    def insert(self, index: int, value: int) -> "Permutation":
        """Insert a new entry at 0-based ``index`` with rank ``value`` in 1..n+1."""
        bumped = [x + 1 if x >= value else x for x in self.entries]
        bumped.insert(index, value)
        return Permutation(bumped)


EMPTY = Permutation(())


def parse_permutation(text: str) -> Permutation:
    """Parse the space-separated text format; '' is the empty permutation."""
    text = text.strip()
    if not text:
        return EMPTY
    return Permutation(int(tok) for tok in text.split())


def standardize(values: Sequence[int]) -> Permutation:
    """The pattern (order-isomorphism class) of a sequence of distinct ints."""
    ranks = {v: i + 1 for i, v in enumerate(sorted(values))}
    return Permutation(ranks[v] for v in values)


def all_permutations(n: int) -> Iterator[Permutation]:
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation(p)


def contains(pattern: Permutation, text: Permutation) -> bool:
    """True iff some subsequence of ``text`` is order isomorphic to ``pattern``.

    >>> contains(parse_permutation("2 1 3"), parse_permutation("2 3 1 4"))
    True
    >>> contains(parse_permutation("3 2 1"), parse_permutation("2 3 4 1"))
    False
    """
    if len(pattern) == 0:
        return True
    if len(pattern) > len(text):
        return False
    return bool(contains_arrays(pattern.as_array(), text.as_array()))


def is_sum_indecomposable(p: Permutation) -> bool:
    """True iff ``p`` is not a direct sum of two nonempty permutations.

    The empty permutation is not sum indecomposable.
    """
    if len(p) == 0:
        return False
    return bool(is_si_array(p.as_array()))


def direct_sum(p: Permutation, q: Permutation) -> Permutation:
    n = len(p)
    return Permutation(p.entries + tuple(x + n for x in q.entries))


def skew_sum(p: Permutation, q: Permutation) -> Permutation:
    m = len(q)
    return Permutation(tuple(x + m for x in p.entries) + q.entries)


def sum_components(p: Permutation) -> list[Permutation]:
    """The unique maximal decomposition p = a_1 + ... + a_k into sum
    indecomposable parts; empty list for the empty permutation.

    >>> [str(c) for c in sum_components(parse_permutation("1 3 2"))]
    ['1', '2 1']
    """
    parts = []
    start = 0
    running_max = 0
    for i, v in enumerate(p.entries):
        if v > running_max:
            running_max = v
        if running_max == i + 1:
            # value-closed prefix boundary: cut a component
            parts.append(Permutation(x - start for x in p.entries[start : i + 1]))
            start = i + 1
    return parts


def children(p: Permutation, indecomposable_only: bool = False) -> frozenset[Permutation]:
    """Distinct single-entry deletion patterns of ``p``; with
    ``indecomposable_only`` this is the set K(p) of sum indecomposable
    children."""
    if len(p) == 0:
        raise ValueError("the empty permutation has no children")
    kids = {p.delete(i) for i in range(len(p))}
    if indecomposable_only:
        kids = {c for c in kids if is_sum_indecomposable(c)}
    return frozenset(kids)


@dataclass(frozen=True)
class InversionGraph:
    """Graph on values 1..n with an edge (a, b), a > b, whenever a appears
    before b; connected iff the source permutation is sum indecomposable."""

    n: int
    edges: frozenset[tuple[int, int]]  # stored as (min, max) value pairs

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = {1}
        frontier = [1]
        adj = {v: set() for v in range(1, self.n + 1)}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        while frontier:
            v = frontier.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return len(seen) == self.n

    def leaves(self) -> list[int]:
        """Values of degree exactly 1, sorted."""
        return sorted(v for v in range(1, self.n + 1) if self.degree(v) == 1)

    def is_path(self) -> bool:
        """True iff the graph is a simple path on all n vertices (n >= 1)."""
        if self.n == 0:
            return False
        if self.n == 1:
            return len(self.edges) == 0
        if len(self.edges) != self.n - 1 or not self.is_connected():
            return False
        return all(self.degree(v) <= 2 for v in range(1, self.n + 1))


def inversion_graph(p: Permutation) -> InversionGraph:
    edges = set()
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p.entries[i] > p.entries[j]:
                edges.add((p.entries[j], p.entries[i]))
    return InversionGraph(len(p), frozenset(edges))


@dataclass(frozen=True)
class MonotoneDecomposition:
    """Quotient together with signed block lengths (positive = increasing
    block, negative = decreasing block), one per quotient entry."""

    quotient: Permutation
    blocks: tuple[int, ...]


def monotone_quotient(p: Permutation) -> MonotoneDecomposition:
    """Contract all maximal monotone intervals (contiguous positions with
    contiguous, monotone values) to single entries.

    >>> d = monotone_quotient(parse_permutation("3 4 5 2 1 6 7 8 9"))
    >>> str(d.quotient), d.blocks
    ('2 1 3', (3, -2, 4))
    """
    if len(p) == 0:
        raise ValueError("the empty permutation has no monotone quotient")
    reps = []  # smallest value in each block
    blocks = []
    i = 0
    n = len(p)
    while i < n:
        j = i
        if i + 1 < n and abs(p.entries[i + 1] - p.entries[i]) == 1:
            step = p.entries[i + 1] - p.entries[i]
            while j + 1 < n and p.entries[j + 1] - p.entries[j] == step:
                j += 1
            length = j - i + 1
            blocks.append(length if step == 1 else -length)
        else:
            blocks.append(1)
        reps.append(min(p.entries[i], p.entries[j]))
        i = j + 1
    return MonotoneDecomposition(standardize(reps), tuple(blocks))


def inflate(skeleton: Permutation, parts: Sequence[Permutation]) -> Permutation:
    """Replace each skeleton entry by an interval order isomorphic to the
    corresponding part.

    >>> str(inflate(parse_permutation("2 1 3"), [parse_permutation("1 2 3"),
    ...     parse_permutation("2 1"), parse_permutation("1 2 3 4")]))
    '3 4 5 2 1 6 7 8 9'
    """
    if len(parts) != len(skeleton):
        raise ValueError("need exactly one part per skeleton entry")
    if any(len(q) == 0 for q in parts):
        raise ValueError("parts must be nonempty")
    # value offset of each block: total size of blocks with smaller skeleton value
    order = sorted(range(len(skeleton)), key=lambda i: skeleton.entries[i])
    offset = [0] * len(skeleton)
    acc = 0
    for i in order:
        offset[i] = acc
        acc += len(parts[i])
    out = []
    for i in range(len(skeleton)):
        out.extend(x + offset[i] for x in parts[i].entries)
    return Permutation(out)


def inflate_one(p: Permutation, index: int, part: Permutation) -> Permutation:
    """Inflate the single entry at 0-based ``index`` by ``part``."""
    one = Permutation((1,))
    parts = [part if i == index else one for i in range(len(p))]
    return inflate(p, parts)


def increasing_oscillation(n: int, primary: bool = True) -> Permutation:
    """The length-n increasing oscillation; the primary type begins with 2,
    the other type is its inverse.  For n in {1, 2} the two types coincide
    and ``primary`` is ignored.

    >>> str(increasing_oscillation(9))
    '2 4 1 6 3 8 5 9 7'
    """
    if n < 1:
        raise ValueError("length must be at least 1")
    if not primary and n < 3:
        raise ValueError("non-primary oscillations require length >= 3")
    if n == 1:
        return Permutation((1,))
    vals = [0] * n
    vals[0] = 2
    for i in range(2, n + 1):
        if i % 2 == 0:
            vals[i - 1] = i + 2
        else:
            vals[i - 1] = i - 2
    if n % 2 == 0:
        vals[n - 1] = n - 1
    else:
        vals[n - 2] = n
    p = Permutation(vals)
    return p if primary else p.inverse()


SPLIT_END_VARIANTS = ("Uo", "Ue", "Uo_inverse", "Ue_inverse")


def split_end_member(n: int, variant: str) -> Permutation:
    """Member of one of the four split-end-path antichains: the length-(n-2)
    primary oscillation with both leaves of its inversion graph inflated
    by 12 (variant Uo/Ue), or the inverse of that (Uo_inverse/Ue_inverse).

    >>> str(split_end_member(11, "Uo"))
    '2 3 5 1 7 4 9 6 10 11 8'
    """
    if variant not in SPLIT_END_VARIANTS:
        raise ValueError("variant must be one of %s" % (SPLIT_END_VARIANTS,))
    odd = variant.startswith("Uo")
    if odd and (n % 2 == 0 or n < 7):
        raise ValueError("Uo members require odd length >= 7")
    if not odd and (n % 2 == 1 or n < 6):
        raise ValueError("Ue members require even length >= 6")
    core = increasing_oscillation(n - 2, primary=True)
    g = inversion_graph(core)
    leaf_positions = sorted(core.entries.index(v) for v in g.leaves())
    if len(leaf_positions) != 2:
        raise AssertionError("oscillation inversion graph must have two leaves")
    rise = Permutation((1, 2))
    p = inflate_one(core, leaf_positions[1], rise)
    p = inflate_one(p, leaf_positions[0], rise)
    return p if variant in ("Uo", "Ue") else p.inverse()


def head_member(n: int) -> Permutation:
    """Primary oscillation of length n-1 with its first entry inflated by 12."""
    if n < 2:
        raise ValueError("length must be at least 2")
    return inflate_one(increasing_oscillation(n - 1), 0, Permutation((1, 2)))


def tail_member(n: int) -> Permutation:
    """Oscillation of length n-1 with its greatest entry inflated by 12.

    The core type alternates with the parity of n so that consecutive
    lengths nest into a single chain (each is a pattern of all longer
    split-end members).
    """
    if n < 2:
        raise ValueError("length must be at least 2")
    core = increasing_oscillation(n - 1, primary=(n % 2 == 0) or n < 4)
    return inflate_one(core, core.entries.index(n - 1), Permutation((1, 2)))


ALTERNATION_KINDS = ("wedge1", "wedge2", "parallel1", "parallel2")


def vertical_alternation(n: int, kind: str) -> Permutation:
    """Length-n prefix pattern of one of the four infinite vertical
    alternation families (two wedge shapes, two parallel shapes).

    >>> str(vertical_alternation(10, "wedge1"))
    '1 10 2 9 3 8 4 7 5 6'
    >>> str(vertical_alternation(10, "parallel1"))
    '6 1 7 2 8 3 9 4 10 5'
    """
    if kind not in ALTERNATION_KINDS:
        raise ValueError("kind must be one of %s" % (ALTERNATION_KINDS,))
    if n < 1:
        raise ValueError("length must be at least 1")
    half = n // 2
    vals = []
    for i in range(1, n + 1):
        if kind == "wedge1":
            v = (i + 1) // 2 if i % 2 else n + 1 - i // 2
        elif kind == "wedge2":
            v = half + (i + 1) // 2 if i % 2 else half + 1 - i // 2
        elif kind == "parallel1":
            v = half + (i + 1) // 2 if i % 2 else i // 2
        else:  # parallel2
            v = n - (i - 1) // 2 if i % 2 else half + 1 - i // 2
        vals.append(v)
    return Permutation(vals)
