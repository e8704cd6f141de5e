"""Finite-basis permutation classes: membership, census, bounded basis
computation, and the regular-insertion-encodability test.

Basis files use the text format of :mod:`permgrowth.perms`, one permutation
per line, with ``#`` comments.  Census data serializes to CSV with columns
``length, members, sum_indecomposable``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .perms import (
    ALTERNATION_KINDS,
    EMPTY,
    Permutation,
    contains,
    is_sum_indecomposable,
    parse_permutation,
    vertical_alternation,
)

CENSUS_BOUND = 14


class ClassSpec:
    """An avoidance class Av(basis).  The basis is minimized to an antichain
    on construction; the original generating set is retained for reference."""

    __slots__ = ("basis", "original", "label")

    def __init__(self, basis: Iterable[Permutation], label: Optional[str] = None):
        original = tuple(sorted(set(basis)))
        minimal = [
            p
            for p in original
            if not any(q != p and contains(q, p) for q in original)
        ]
        object.__setattr__(self, "basis", frozenset(minimal))
        object.__setattr__(self, "original", original)
        object.__setattr__(self, "label", label)

    def __setattr__(self, name, value):
        raise AttributeError("ClassSpec is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassSpec) and self.basis == other.basis

    def __hash__(self) -> int:
        return hash(self.basis)

    def __repr__(self) -> str:
        inner = ", ".join(repr(str(p)) for p in sorted(self.basis))
        return "ClassSpec([%s])" % inner

    def sorted_basis(self) -> list[Permutation]:
        return sorted(self.basis)

    def extended(self, extra: Iterable[Permutation]) -> "ClassSpec":
        return ClassSpec(list(self.basis) + list(extra))


def parse_basis_text(text: str) -> ClassSpec:
    perms = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            perms.append(parse_permutation(line))
    return ClassSpec(perms)


def spec_from_strs(*perm_strs: str, label: Optional[str] = None) -> ClassSpec:
    return ClassSpec([parse_permutation(s) for s in perm_strs], label=label)


def member(spec: ClassSpec, p: Permutation) -> bool:
    """True iff ``p`` avoids every basis element."""
    return all(not contains(b, p) for b in spec.basis)


@dataclass
class Census:
    """Per-length counts (and listings) of class members and their sum
    indecomposable subset."""

    member_counts: list[int] = field(default_factory=list)  # index = length
    si_counts: list[int] = field(default_factory=list)
    levels: list[set[Permutation]] = field(default_factory=list)

    def si_sequence(self) -> list[int]:
        """SI counts for lengths 1..max_len."""
        return self.si_counts[1:]

    def si_members(self, n: int) -> list[Permutation]:
        return sorted(p for p in self.levels[n] if is_sum_indecomposable(p))

    def to_csv(self) -> str:
        lines = ["length,members,sum_indecomposable"]
        for n, (m, s) in enumerate(zip(self.member_counts, self.si_counts)):
            lines.append("%d,%d,%d" % (n, m, s))
        return "\n".join(lines) + "\n"


def census(spec: ClassSpec, max_len: int) -> Census:
    """Exact member/SI counts by incremental children-closed generation:
    a length-n candidate is a member iff all n of its children are members
    of the previous level and the candidate is not itself a basis element."""
    if max_len > CENSUS_BOUND:
        raise ValueError("census bound exceeded (max %d)" % CENSUS_BOUND)
    basis_by_len: dict[int, set[Permutation]] = {}
    for b in spec.basis:
        basis_by_len.setdefault(len(b), set()).add(b)
    out = Census()
    level = {EMPTY} if EMPTY not in spec.basis else set()
    out.levels.append(level)
    out.member_counts.append(len(level))
    out.si_counts.append(0)
    for n in range(1, max_len + 1):
        prev = out.levels[n - 1]
        prev_entries = {p.entries for p in prev}
        forbidden = basis_by_len.get(n, set())
        candidates = set()
        for p in prev:
            for pos in range(n):
                for val in range(1, n + 1):
                    candidates.add(p.insert(pos, val))
        nxt = set()
        for c in candidates:
            if c in forbidden:
                continue
            if all(c.delete(i).entries in prev_entries for i in range(n)):
                nxt.add(c)
        out.levels.append(nxt)
        out.member_counts.append(len(nxt))
        out.si_counts.append(sum(1 for p in nxt if is_sum_indecomposable(p)))
    return out


def si_sequence(spec: ClassSpec, max_len: int) -> list[int]:
    """SI counts for lengths 1..max_len."""
    return census(spec, max_len).si_sequence()


def compute_basis(
    oracle: Callable[[Permutation], bool],
    max_len: int,
    rng: Optional[random.Random] = None,
) -> set[Permutation]:
    """All minimal non-members of length <= max_len of the downward-closed
    set decided by ``oracle`` (non-members all of whose children are
    members).  Raises if the oracle is caught violating downward closure."""
    basis: set[Permutation] = set()
    if not oracle(EMPTY):
        return {EMPTY}
    level = {Permutation((1,))}
    one = Permutation((1,))
    if not oracle(one):
        return {one}
    for n in range(2, max_len + 1):
        candidates = set()
        for p in level:
            for pos in range(n):
                for val in range(1, n + 1):
                    candidates.add(p.insert(pos, val))
        nxt = set()
        member_entries = {p.entries for p in level}
        for c in candidates:
            if not all(c.delete(i).entries in member_entries for i in range(n)):
                continue
            if oracle(c):
                nxt.add(c)
            else:
                basis.add(c)
        level = nxt
    # downward-closure spot check: children of members must be members
    rng = rng or random.Random(0)
    sample = rng.sample(sorted(level), min(20, len(level))) if level else []
    for p in sample:
        for i in range(len(p)):
            if not oracle(p.delete(i)):
                raise ValueError("oracle violates downward closure at %s" % p)
    return basis


def has_regular_insertion_encoding(spec: ClassSpec) -> bool:
    """True iff the class contains no arbitrarily long vertical alternation:
    each of the four alternation families must meet the basis.

    Each family is a chain under containment, so checking one sufficiently
    long member per family decides containment of arbitrarily long ones.
    """
    if not spec.basis:
        raise ValueError("the class of all permutations is not supported")
    if EMPTY in spec.basis:
        return True
    cutoff = 2 * max(len(b) for b in spec.basis) + 4
    for kind in ALTERNATION_KINDS:
        probe = vertical_alternation(cutoff, kind)
        if all(not contains(b, probe) for b in spec.basis):
            return False
    return True
