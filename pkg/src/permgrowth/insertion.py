"""Insertion encodings of permutations and the finite automata they induce
for finitely based classes, yielding exact rational generating functions.

A permutation is built by inserting the values 1, 2, ... in order.  At each
step the gaps still to be filled form numbered slots, left to right, and the
new value either fills a slot (``f``), leaves a gap on its left (``l``), on
its right (``r``), or on both sides (``m``).  The letter sequence determines
the permutation and vice versa.

The automaton for a class tracks, per basis element, every way a value
prefix of that element embeds into the decided entries, recording for each
still-missing entry the interval of slots it may occupy.  A completed
embedding kills the state; words reaching slot count zero are exactly the
encodings of class members.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional

from .classes import ClassSpec, has_regular_insertion_encoding
from .perms import Permutation
from .polynomials import ONE, IntPolynomial, RationalFunction

ACTIONS = ("f", "l", "r", "m")
_ACTION_NAMES = {"f": "fill", "l": "left", "r": "right", "m": "middle"}


class NotRegular(ValueError):
    """The class admits arbitrarily long vertical alternations, so no
    finite-slot automaton exists."""


class SlotBoundExceeded(RuntimeError):
    """The construction reached the configured slot cap; results would be
    unreliable, so the build refuses instead."""


@dataclass(frozen=True, order=True)
class IELetter:
    action: str  # one of ACTIONS
    slot: int  # 1-based

    def __post_init__(self):
        if self.action not in ACTIONS:
            raise ValueError("unknown action %r" % (self.action,))
        if self.slot < 1:
            raise ValueError("slot indices are 1-based")

    def __str__(self) -> str:
        return "%s_%d" % (self.action, self.slot)

    @classmethod
    def parse(cls, text: str) -> "IELetter":
        action, _, slot = text.partition("_")
        return cls(action, int(slot))


def encode(p: Permutation) -> list[IELetter]:
    """Insertion encoding of ``p``: one letter per value, in value order.

    >>> [str(x) for x in encode(Permutation((2, 3, 1)))]
    ['l_1', 'r_1', 'f_1']
    """
    n = len(p)
    undecided = [True] * n
    letters = []
    for v in range(1, n + 1):
        i = p.entries.index(v)
        # slot index: count maximal undecided runs strictly left of i's run
        slot = 1
        in_run = False
        for t in range(i):
            if undecided[t]:
                in_run = True
            elif in_run:
                slot += 1
                in_run = False
        left = i > 0 and undecided[i - 1]
        right = i + 1 < n and undecided[i + 1]
        undecided[i] = False
        if left and right:
            action = "m"
        elif left:
            action = "l"
        elif right:
            action = "r"
        else:
            action = "f"
        letters.append(IELetter(action, slot))
    return letters


_SLOT = object()


def decode(letters: Iterable[IELetter]) -> Permutation:
    """Inverse of :func:`encode`; raises if the word is not a valid
    encoding (bad slot index or leftover slots)."""
    items: list = [_SLOT]
    v = 0
    for letter in letters:
        v += 1
        idx = -1
        seen = 0
        for t, item in enumerate(items):
            if item is _SLOT:
                seen += 1
                if seen == letter.slot:
                    idx = t
                    break
        if idx < 0:
            raise ValueError("letter %s has no slot to act on" % letter)
        replacement = {
            "f": [v],
            "l": [_SLOT, v],
            "r": [v, _SLOT],
            "m": [_SLOT, v, _SLOT],
        }[letter.action]
        items[idx : idx + 1] = replacement
    if any(item is _SLOT for item in items):
        raise ValueError("word leaves unfilled slots")
    return Permutation(items)


# ---------------------------------------------------------------------------
# automaton construction


def _next_entry_tables(basis: Permutation) -> list[int]:
    """For each remaining-count k, the rank (in position order) of the next
    entry to match, which is always the least-valued remaining one."""
    entries = basis.entries
    L = len(entries)
    pos_of_value = {v: i for i, v in enumerate(entries)}
    table = [0] * (L + 1)
    for k in range(1, L + 1):
        m = L - k  # values 1..m already matched
        remaining = sorted(pos_of_value[v] for v in range(m + 1, L + 1))
        table[k] = remaining.index(pos_of_value[m + 1])
    return table


def _reindex(window: tuple[int, int], action: str, j: int) -> tuple[int, int]:
    lo, hi = window
    if action == "f":
        return (lo if lo <= j else lo - 1, hi if hi < j else hi - 1)
    if action == "m":
        return (lo if lo <= j else lo + 1, hi if hi < j else hi + 1)
    return window


def _feasible(sig: tuple[tuple[int, int], ...]) -> bool:
    # remaining entries occupy slots weakly left to right (sharing allowed)
    cur = 1
    for lo, hi in sig:
        if lo > cur:
            cur = lo
        if cur > hi:
            return False
    return True


def _dominance_prune(sigs: set) -> frozenset:
    kept = []
    for a in sigs:
        dominated = False
        for b in sigs:
            if b is a or len(b) != len(a) or b == a:
                continue
            if all(bl <= al and bh >= ah for (bl, bh), (al, ah) in zip(b, a)):
                dominated = True
                break
        if not dominated:
            kept.append(a)
    return frozenset(kept)


_DEAD = object()


def _step_sigset(sigs, table, action: str, j: int, s_new: int):
    """Evolve one basis element's signature set; _DEAD on completion."""
    out = set()
    # v sits between these slot indices of the new configuration
    if action in ("f", "r"):
        j_left, j_right = j - 1, j
    else:  # l, m
        j_left, j_right = j, j + 1
    for sig in sigs:
        ns = tuple(_reindex(w, action, j) for w in sig)
        if all(lo <= hi for lo, hi in ns) and _feasible(ns):
            out.add(ns)
        t = table[len(sig)]
        lo, hi = sig[t]
        if lo <= j <= hi:
            if len(sig) == 1:
                return _DEAD
            matched = []
            alive = True
            for i, w in enumerate(sig):
                if i == t:
                    continue
                wlo, whi = _reindex(w, action, j)
                if i < t:
                    whi = min(whi, j_left)
                else:
                    wlo = max(wlo, j_right)
                    whi = min(whi, s_new)
                if wlo > whi:
                    alive = False
                    break
                matched.append((wlo, whi))
            if alive:
                msig = tuple(matched)
                if _feasible(msig):
                    out.add(msig)
    return _dominance_prune(out)


@dataclass(eq=False)
class Automaton:
    """Deterministic automaton over insertion-encoding letters; transitions
    absent from the maps lead to an implicit dead sink."""

    initial: int
    accepts: frozenset[int]
    transitions: list[dict[str, int]]  # index = state, key = str(letter)

    @property
    def num_states(self) -> int:
        return len(self.transitions)

    def count_words(self, n: int) -> list[int]:
        """Accepted-word counts by length 0..n, by dynamic programming."""
        counts = []
        dist = {self.initial: 1}
        for _ in range(n + 1):
            counts.append(sum(c for q, c in dist.items() if q in self.accepts))
            nxt: dict[int, int] = {}
            for q, c in dist.items():
                for target in self.transitions[q].values():
                    nxt[target] = nxt.get(target, 0) + c
            dist = nxt
        return counts

    def to_json(self) -> str:
        return json.dumps(
            {
                "initial": self.initial,
                "accepts": sorted(self.accepts),
                "transitions": [
                    {k: v for k, v in sorted(t.items())} for t in self.transitions
                ],
            },
            indent=2,
            sort_keys=True,
        )


DEFAULT_SLOT_CAP = 8


def build_automaton(spec: ClassSpec, slot_cap: int = DEFAULT_SLOT_CAP) -> Automaton:
    """Minimal deterministic automaton whose accepted words are exactly the
    insertion encodings of the members of ``spec``.

    Raises :class:`NotRegular` when the class has no regular insertion
    encoding and :class:`SlotBoundExceeded` when more than ``slot_cap``
    simultaneous slots would be needed.
    """
    if not has_regular_insertion_encoding(spec):
        raise NotRegular("class admits unbounded vertical alternations")
    basis = spec.sorted_basis()
    tables = [_next_entry_tables(b) for b in basis]

    def step(state, action: str, j: int):
        s, sets = state
        s_new = s + {"f": -1, "m": 1}.get(action, 0)
        new_sets = []
        for sigs, table in zip(sets, tables):
            stepped = _step_sigset(sigs, table, action, j, s_new)
            if stepped is _DEAD:
                return None
            new_sets.append(stepped)
        return (s_new, tuple(new_sets))

    live_cache: dict = {}

    def live(state) -> bool:
        """A state can reach acceptance iff some way of filling each open
        slot with a single value avoids the basis: deleting surplus values
        from any accepted completion leaves one value per slot.  So only
        fill letters need exploring, and slot count strictly decreases."""
        if state[0] == 0:
            return True
        if state not in live_cache:
            live_cache[state] = False  # placeholder; recursion cannot cycle
            live_cache[state] = any(
                (t := step(state, "f", j)) is not None and live(t)
                for j in range(1, state[0] + 1)
            )
        return live_cache[state]

    initial = (1, tuple(frozenset({((1, 1),) * len(b)}) for b in basis))
    ids = {initial: 0}
    transitions: list[dict[str, int]] = [{}]
    queue = [initial]
    while queue:
        state = queue.pop()
        s, sets = state
        here = transitions[ids[state]]
        for action in ACTIONS:
            s_new = s + {"f": -1, "m": 1}.get(action, 0)
            if s_new > slot_cap:
                raise SlotBoundExceeded(
                    "needs more than %d slots; raise slot_cap" % slot_cap
                )
            for j in range(1, s + 1):
                target = step(state, action, j)
                if target is None or not live(target):
                    continue
                if target not in ids:
                    ids[target] = len(ids)
                    transitions.append({})
                    queue.append(target)
                here[str(IELetter(action, j))] = ids[target]
    accepts = frozenset(i for st, i in ids.items() if st[0] == 0)
    return _minimize(Automaton(0, accepts, transitions))


def _minimize(aut: Automaton) -> Automaton:
    """Moore partition refinement with an implicit dead sink; states
    equivalent to the sink (including non-coaccessible ones) are dropped."""
    n = aut.num_states
    alphabet = sorted({a for t in aut.transitions for a in t})
    DEAD = -1
    block = [1 if q in aut.accepts else 0 for q in range(n)]
    dead_block = 0  # the sink is non-accepting
    while True:
        signature = {}
        for q in range(n):
            sig = (
                block[q],
                tuple(
                    block[aut.transitions[q][a]] if a in aut.transitions[q] else DEAD
                    for a in alphabet
                ),
            )
            signature[q] = sig
        dead_sig = (dead_block, (DEAD,) * len(alphabet))
        relabel = {}
        for q in range(n):
            relabel.setdefault(signature[q], len(relabel))
        new_dead = relabel.setdefault(dead_sig, len(relabel))
        new_block = [relabel[signature[q]] for q in range(n)]
        if new_block == block and new_dead == dead_block:
            break
        block, dead_block = new_block, new_dead
    keep = sorted({b for b in block if b != dead_block})
    remap = {b: i for i, b in enumerate(keep)}
    if block[aut.initial] == dead_block:
        # class contains nothing but possibly the empty permutation; keep a
        # lone initial state with no transitions
        return Automaton(0, frozenset(), [{}])
    transitions: list[dict[str, int]] = [{} for _ in keep]
    for q in range(n):
        b = block[q]
        if b == dead_block:
            continue
        for a, target in aut.transitions[q].items():
            tb = block[target]
            if tb != dead_block:
                transitions[remap[b]][a] = remap[tb]
    accepts = frozenset(remap[block[q]] for q in aut.accepts if block[q] != dead_block)
    return Automaton(remap[block[aut.initial]], accepts, transitions)


def gf_from_automaton(aut: Automaton) -> RationalFunction:
    """Generating function of the class: 1 (empty permutation) plus the
    length generating function of the accepted words, by state elimination
    over exact rational functions."""
    one = RationalFunction.from_poly(ONE)
    x = RationalFunction.from_poly(IntPolynomial([0, 1]))
    zero = RationalFunction(IntPolynomial([]), ONE)
    n = aut.num_states
    END = n
    edges: dict[tuple[int, int], RationalFunction] = {}

    def add(u: int, v: int, w: RationalFunction) -> None:
        if (u, v) in edges:
            edges[(u, v)] = edges[(u, v)] + w
        else:
            edges[(u, v)] = w

    for q, trans in enumerate(aut.transitions):
        counts: dict[int, int] = {}
        for target in trans.values():
            counts[target] = counts.get(target, 0) + 1
        for target, c in counts.items():
            add(q, target, RationalFunction(IntPolynomial([0, c]), ONE))
    for q in aut.accepts:
        add(q, END, one)
    for q in range(n):
        if q == aut.initial:
            continue
        loop = edges.pop((q, q), zero)
        factor = one / (one - loop)
        incoming = [(u, w) for (u, v), w in edges.items() if v == q]
        outgoing = [(v, w) for (u, v), w in edges.items() if u == q]
        for (u, _) in incoming:
            edges.pop((u, q))
        for (v, _) in outgoing:
            edges.pop((q, v), None)
        for u, w1 in incoming:
            for v, w2 in outgoing:
                add(u, v, w1 * factor * w2)
    loop = edges.pop((aut.initial, aut.initial), zero)
    direct = edges.pop((aut.initial, END), zero)
    words = (one / (one - loop)) * direct
    return one + words


def class_gf(spec: ClassSpec, slot_cap: int = DEFAULT_SLOT_CAP) -> RationalFunction:
    """Generating function counting members of ``spec`` by length."""
    return gf_from_automaton(build_automaton(spec, slot_cap))


def si_gf(f: RationalFunction) -> RationalFunction:
    """Generating function of sum indecomposable members, valid for sum
    closed classes: g = 1 - 1/f."""
    if f.den(0) == 0 or f.num(0) / f.den(0) != 1:
        raise ValueError("class generating function must have constant term 1")
    one = RationalFunction.from_poly(ONE)
    return one - f.inverse()


def series_coefficients(f: RationalFunction, n: int) -> list[int]:
    """First n+1 power-series coefficients of ``f``."""
    return f.series(n)


def eventual_period(f: RationalFunction, max_period: int = 12) -> tuple[list[int], int]:
    """Smallest period P <= max_period with f * (1 - x^P) polynomial,
    together with the coefficient prefix that determines the whole series
    (everything beyond it repeats with period P).  Raises if none exists."""
    one_minus = lambda P: IntPolynomial([1] + [0] * (P - 1) + [-1])
    for P in range(1, max_period + 1):
        g = f * RationalFunction.from_poly(one_minus(P))
        if g.den == ONE:
            D = g.num.degree
            return f.series(max(D, 0) + P), P
    raise ValueError("series is not eventually periodic with period <= %d" % max_period)


def coefficients_bounded(f: RationalFunction, bound: int, max_period: int = 12) -> bool:
    """True iff every power-series coefficient of ``f`` is <= bound, decided
    exactly via eventual periodicity."""
    prefix, _ = eventual_period(f, max_period)
    return all(c <= bound for c in prefix)
