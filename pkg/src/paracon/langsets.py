"""Exact set algebra for subsets of a free group and of finite point sets.

Symbolic sets are regular languages of reduced words, stored as complete
minimal DFAs with a canonical (breadth-first) state numbering.  Two values
are structurally equal exactly when they denote the same set, so boolean
algebra, membership, emptiness, inclusion, and left translation are all
decidable and deterministic.

Finite sets are plain subsets of {0, ..., n-1} tagged with their degree.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Union

from .words import FreeWord, alphabet, letter_from_index, letter_index, word_sorted


# ---------------------------------------------------------------------------
# internal DFA machinery
#
# A DFA here is (rank, transitions, accepting) with states 0..N-1, initial
# state 0, complete transition function indexed by the canonical letter order
# a < A < b < B < ...  Canonical form = reachable, minimal, BFS-numbered.
# ---------------------------------------------------------------------------

_Transitions = tuple[tuple[int, ...], ...]


def _universe(rank: int) -> tuple[_Transitions, tuple[bool, ...]]:
    """DFA of all reduced words: remember the last letter, kill inverse pairs."""
    n_letters = 2 * rank
    dead = n_letters + 1
    trans = []
    # state 0: nothing read yet; state i+1: last letter had index i; dead sink
    trans.append(tuple(i + 1 for i in range(n_letters)))
    for last in range(n_letters):
        row = []
        bad = letter_index(-letter_from_index(last))
        for nxt in range(n_letters):
            row.append(dead if nxt == bad else nxt + 1)
        trans.append(tuple(row))
    trans.append(tuple(dead for _ in range(n_letters)))
    accepting = tuple(state != dead for state in range(dead + 1))
    return tuple(trans), accepting


def _product(
    rank: int,
    t1: _Transitions,
    a1: tuple[bool, ...],
    t2: _Transitions,
    a2: tuple[bool, ...],
    keep: Callable[[bool, bool], bool],
) -> tuple[_Transitions, tuple[bool, ...]]:
    n_letters = 2 * rank
    index = {(0, 0): 0}
    order = [(0, 0)]
    trans: list[tuple[int, ...]] = []
    pos = 0
    while pos < len(order):
        s1, s2 = order[pos]
        row = []
        for letter in range(n_letters):
            nxt = (t1[s1][letter], t2[s2][letter])
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            row.append(index[nxt])
        trans.append(tuple(row))
        pos += 1
    accepting = tuple(keep(a1[s1], a2[s2]) for s1, s2 in order)
    return tuple(trans), accepting


def _minimize(
    rank: int, trans: _Transitions, accepting: tuple[bool, ...]
) -> tuple[_Transitions, tuple[bool, ...]]:
    """Moore partition refinement followed by BFS renumbering."""
    n_letters = 2 * rank
    # restrict to reachable states first
    reachable = [0]
    seen = {0}
    for state in reachable:
        for letter in range(n_letters):
            nxt = trans[state][letter]
            if nxt not in seen:
                seen.add(nxt)
                reachable.append(nxt)
    states = reachable
    block = {s: int(accepting[s]) for s in states}
    while True:
        signature = {
            s: (block[s],) + tuple(block[trans[s][l]] for l in range(n_letters))
            for s in states
        }
        renumber: dict[tuple, int] = {}
        new_block = {}
        for s in states:
            sig = signature[s]
            if sig not in renumber:
                renumber[sig] = len(renumber)
            new_block[s] = renumber[sig]
        if len(set(new_block.values())) == len(set(block.values())):
            block = new_block
            break
        block = new_block
    # representative transition table over blocks
    block_trans = {}
    block_accept = {}
    for s in states:
        b = block[s]
        if b not in block_trans:
            block_trans[b] = tuple(block[trans[s][l]] for l in range(n_letters))
            block_accept[b] = accepting[s]
    # canonical BFS numbering from the initial block
    start = block[0]
    numbering = {start: 0}
    order = [start]
    for b in order:
        for letter in range(n_letters):
            nxt = block_trans[b][letter]
            if nxt not in numbering:
                numbering[nxt] = len(order)
                order.append(nxt)
    new_trans = tuple(
        tuple(numbering[block_trans[b][l]] for l in range(n_letters)) for b in order
    )
    new_accept = tuple(block_accept[b] for b in order)
    return new_trans, new_accept


def _canonical(rank: int, trans: _Transitions, accepting: tuple[bool, ...]) -> "SymbolicSet":
    ut, ua = _universe(rank)
    pt, pa = _product(rank, trans, accepting, ut, ua, lambda x, y: x and y)
    mt, ma = _minimize(rank, pt, pa)
    return SymbolicSet(rank, mt, ma)


def _alive(rank: int, trans: _Transitions, accepting: tuple[bool, ...]) -> set[int]:
    """States from which some accepting state is reachable."""
    n = len(trans)
    alive = {s for s in range(n) if accepting[s]}
    changed = True
    while changed:
        changed = False
        for s in range(n):
            if s not in alive and any(t in alive for t in trans[s]):
                alive.add(s)
                changed = True
    return alive


@dataclass(frozen=True)
class SymbolicSet:
    """Canonical automaton for a set of reduced words over F_rank."""

    rank: int
    transitions: _Transitions
    accepting: tuple[bool, ...]

    # -- constructors -------------------------------------------------------

    @staticmethod
    def empty(rank: int) -> "SymbolicSet":
        return _canonical(rank, (tuple(0 for _ in range(2 * rank)),), (False,))

    @staticmethod
    def full(rank: int) -> "SymbolicSet":
        return _canonical(rank, (tuple(0 for _ in range(2 * rank)),), (True,))

    @staticmethod
    def singleton(w: FreeWord, rank: int) -> "SymbolicSet":
        return SymbolicSet._chain(w, rank, tail_accepts_all=False)

    @staticmethod
    def cone(w: FreeWord, rank: int) -> "SymbolicSet":
        """All reduced words with prefix w, including w itself."""
        return SymbolicSet._chain(w, rank, tail_accepts_all=True)

    @staticmethod
    def _chain(w: FreeWord, rank: int, tail_accepts_all: bool) -> "SymbolicSet":
        if any(abs(l) > rank for l in w.letters):
            raise ValueError(f"word {w} outside rank {rank}")
        n_letters = 2 * rank
        length = len(w.letters)
        dead = length + 1
        trans = []
        for pos in range(length):
            want = letter_index(w.letters[pos])
            trans.append(tuple(pos + 1 if l == want else dead for l in range(n_letters)))
        if tail_accepts_all:
            trans.append(tuple(length for _ in range(n_letters)))
        else:
            trans.append(tuple(dead for _ in range(n_letters)))
        trans.append(tuple(dead for _ in range(n_letters)))
        accepting = tuple(s == length for s in range(dead + 1))
        return _canonical(rank, tuple(trans), accepting)

    @staticmethod
    def powers(a: FreeWord, rank: int) -> "SymbolicSet":
        """The set {a^n : n >= 0} of nonnegative powers of a reduced word."""
        if a.is_identity:
            return SymbolicSet.singleton(a, rank)
        if any(abs(l) > rank for l in a.letters):
            raise ValueError(f"word {a} outside rank {rank}")
        # peel a = w c w^-1 with c cyclically reduced; then a^n = w c^n w^-1
        # letter-for-letter, with no cancellation anywhere.
        letters = list(a.letters)
        wing: list[int] = []
        while len(letters) >= 2 and letters[0] == -letters[-1]:
            wing.append(letters[0])
            letters = letters[1:-1]
        core = letters
        suffix = [-l for l in reversed(wing)]
        n_letters = 2 * rank
        # states: 0..len(wing)-1 read the wing, then core positions cycle;
        # at each block boundary the next letter picks "another block" vs
        # "start the suffix" (those letters differ because a is reduced).
        n_wing, n_core, n_suf = len(wing), len(core), len(suffix)
        first_block = n_wing                      # block positions, no block done
        boundary = first_block + n_core           # >= 1 block done, at a boundary
        suffix_start = boundary + n_core          # suffix position j at suffix_start + j
        accept_state = suffix_start + n_suf
        dead = accept_state + 1
        total = dead + 1
        trans = [[dead] * n_letters for _ in range(total)]
        for pos in range(n_wing):
            trans[pos][letter_index(wing[pos])] = pos + 1
        for j in range(n_core):
            nxt = boundary if j == n_core - 1 else first_block + j + 1
            trans[first_block + j][letter_index(core[j])] = nxt
        for j in range(n_core):
            src = boundary + j
            nxt = boundary if j == n_core - 1 else boundary + j + 1
            trans[src][letter_index(core[j])] = nxt
        if n_suf:
            trans[boundary][letter_index(suffix[0])] = suffix_start + 1
            for j in range(1, n_suf):
                trans[suffix_start + j][letter_index(suffix[j])] = suffix_start + j + 1
        accepting = [False] * total
        accepting[0] = True  # a^0 = e
        accepting[accept_state if n_suf else boundary] = True
        return _canonical(rank, tuple(tuple(r) for r in trans), tuple(accepting))

    # -- queries -------------------------------------------------------------

    def __contains__(self, w: FreeWord) -> bool:
        state = 0
        for letter in w.letters:
            if abs(letter) > self.rank:
                return False
            state = self.transitions[state][letter_index(letter)]
        return self.accepting[state]

    @property
    def is_empty(self) -> bool:
        return not any(self.accepting)

    @property
    def is_full(self) -> bool:
        return self == SymbolicSet.full(self.rank)

    def shortest(self) -> Optional[FreeWord]:
        """Minimal-length, lexicographically least member (None if empty)."""
        if self.accepting[0]:
            return FreeWord(())
        seen = {0}
        queue = deque([(0, ())])
        while queue:
            state, path = queue.popleft()
            for idx in range(2 * self.rank):
                nxt = self.transitions[state][idx]
                if nxt in seen:
                    continue
                seen.add(nxt)
                new_path = path + (letter_from_index(idx),)
                if self.accepting[nxt]:
                    return FreeWord(new_path)
                queue.append((nxt, new_path))
        return None

    def enumerate_up_to(self, max_length: int) -> list[FreeWord]:
        """Members of length <= max_length in length-then-lex order."""
        alive = _alive(self.rank, self.transitions, self.accepting)
        out: list[FreeWord] = []
        level = [((), 0)] if 0 in alive else []
        if self.accepting[0]:
            out.append(FreeWord(()))
        for _ in range(max_length):
            next_level = []
            for path, state in level:
                for idx in range(2 * self.rank):
                    nxt = self.transitions[state][idx]
                    if nxt not in alive:
                        continue
                    new_path = path + (letter_from_index(idx),)
                    if self.accepting[nxt]:
                        out.append(FreeWord(new_path))
                    next_level.append((new_path, nxt))
            level = next_level
        return out

    # -- algebra -------------------------------------------------------------

    def _check_rank(self, other: "SymbolicSet") -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def union(self, other: "SymbolicSet") -> "SymbolicSet":
        self._check_rank(other)
        t, a = _product(
            self.rank, self.transitions, self.accepting,
            other.transitions, other.accepting, lambda x, y: x or y,
        )
        return _canonical(self.rank, t, a)

    def intersection(self, other: "SymbolicSet") -> "SymbolicSet":
        self._check_rank(other)
        t, a = _product(
            self.rank, self.transitions, self.accepting,
            other.transitions, other.accepting, lambda x, y: x and y,
        )
        return _canonical(self.rank, t, a)

    def difference(self, other: "SymbolicSet") -> "SymbolicSet":
        self._check_rank(other)
        t, a = _product(
            self.rank, self.transitions, self.accepting,
            other.transitions, other.accepting, lambda x, y: x and not y,
        )
        return _canonical(self.rank, t, a)

    def complement(self) -> "SymbolicSet":
        flipped = tuple(not a for a in self.accepting)
        return _canonical(self.rank, self.transitions, flipped)

    def translate(self, g: FreeWord) -> "SymbolicSet":
        """Left translate gS = {g*w : w in S}, applied letter by letter."""
        if any(abs(l) > self.rank for l in g.letters):
            raise ValueError(f"word {g} outside rank {self.rank}")
        result = self
        for letter in reversed(g.letters):
            result = result._translate_letter(letter)
        return result

    def _translate_letter(self, letter: int) -> "SymbolicSet":
        # v is in l.S  iff  l^-1 * v is in S.  A fresh initial state simulates
        # reading l^-1 first: consuming l cancels it, any other letter m sends
        # us where S's automaton goes after l^-1 then m.
        n_letters = 2 * self.rank
        shift = 1
        trans = [tuple(t + shift for t in row) for row in self.transitions]
        after_inv = self.transitions[0][letter_index(-letter)]
        row = []
        for idx in range(n_letters):
            if idx == letter_index(letter):
                row.append(0 + shift)
            else:
                row.append(self.transitions[after_inv][idx] + shift)
        new_trans = tuple([tuple(row)] + trans)
        new_accept = (self.accepting[after_inv],) + self.accepting
        return _canonical(self.rank, new_trans, new_accept)

    def is_subset(self, other: "SymbolicSet") -> bool:
        return self.difference(other).is_empty

    def is_disjoint(self, other: "SymbolicSet") -> bool:
        return self.intersection(other).is_empty

    def subset_witness(self, other: "SymbolicSet") -> Optional[FreeWord]:
        """Least word of self missing from other; None when self <= other."""
        return self.difference(other).shortest()

    def witness(self) -> Optional[FreeWord]:
        return self.shortest()

    # -- operators -----------------------------------------------------------

    def __or__(self, other):
        return self.union(other)

    def __and__(self, other):
        return self.intersection(other)

    def __sub__(self, other):
        return self.difference(other)

    def __invert__(self):
        return self.complement()

    def __repr__(self) -> str:
        sample = ", ".join(str(w) for w in self.enumerate_up_to(2)[:6])
        return f"SymbolicSet(rank={self.rank}, ~{{{sample}, ...}})"


@dataclass(frozen=True)
class FiniteSet:
    """Subset of the points {0, ..., degree-1}."""

    degree: int
    members: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if any(p < 0 or p >= self.degree for p in self.members):
            raise ValueError(f"point outside 0..{self.degree-1}")

    @staticmethod
    def of(degree: int, points: Iterable[int]) -> "FiniteSet":
        return FiniteSet(degree, frozenset(points))

    @staticmethod
    def empty(degree: int) -> "FiniteSet":
        return FiniteSet(degree, frozenset())

    @staticmethod
    def full(degree: int) -> "FiniteSet":
        return FiniteSet(degree, frozenset(range(degree)))

    def __contains__(self, point: int) -> bool:
        return point in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    @property
    def is_empty(self) -> bool:
        return not self.members

    @property
    def is_full(self) -> bool:
        return len(self.members) == self.degree

    def _check(self, other: "FiniteSet") -> None:
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def union(self, other: "FiniteSet") -> "FiniteSet":
        self._check(other)
        return FiniteSet(self.degree, self.members | other.members)

    def intersection(self, other: "FiniteSet") -> "FiniteSet":
        self._check(other)
        return FiniteSet(self.degree, self.members & other.members)

    def difference(self, other: "FiniteSet") -> "FiniteSet":
        self._check(other)
        return FiniteSet(self.degree, self.members - other.members)

    def complement(self) -> "FiniteSet":
        return FiniteSet(self.degree, frozenset(range(self.degree)) - self.members)

    def is_subset(self, other: "FiniteSet") -> bool:
        return self.members <= other.members

    def is_disjoint(self, other: "FiniteSet") -> bool:
        return not (self.members & other.members)

    def subset_witness(self, other: "FiniteSet") -> Optional[int]:
        extra = self.members - other.members
        return min(extra) if extra else None

    def witness(self) -> Optional[int]:
        return min(self.members) if self.members else None

    def __or__(self, other):
        return self.union(other)

    def __and__(self, other):
        return self.intersection(other)

    def __sub__(self, other):
        return self.difference(other)

    def __invert__(self):
        return self.complement()

    def __repr__(self) -> str:
        return f"FiniteSet({self.degree}, {sorted(self.members)})"


ActionSet = Union[SymbolicSet, FiniteSet]


def make_base(kind: str, w: FreeWord | None, rank: int) -> SymbolicSet:
    """Base symbolic sets: cone(w), singleton(w), full, empty."""
    if kind == "cone":
        return SymbolicSet.cone(w if w is not None else FreeWord(()), rank)
    if kind == "singleton":
        return SymbolicSet.singleton(w if w is not None else FreeWord(()), rank)
    if kind == "full":
        return SymbolicSet.full(rank)
    if kind == "empty":
        return SymbolicSet.empty(rank)
    raise ValueError(f"unknown base kind {kind!r}")


def combine(op: str, *operands: ActionSet) -> ActionSet:
    """Boolean combination: union | intersection | complement | difference."""
    if op == "complement":
        if len(operands) != 1:
            raise ValueError("complement takes exactly one operand")
        return operands[0].complement()
    if op == "difference":
        if len(operands) != 2:
            raise ValueError("difference takes exactly two operands")
        return operands[0].difference(operands[1])
    if op in ("union", "intersection"):
        if not operands:
            raise ValueError(f"{op} needs at least one operand")
        result = operands[0]
        for s in operands[1:]:
            result = result.union(s) if op == "union" else result.intersection(s)
        return result
    raise ValueError(f"unknown operation {op!r}")


@dataclass(frozen=True)
class SetRelation:
    """Exact relation report between two sets of the same kind."""

    equal: bool
    subset: bool
    disjoint: bool
    empty: bool
    subset_witness: object = None


def compare(s: ActionSet, t: ActionSet) -> SetRelation:
    """Decide equality, inclusion s <= t, disjointness, and emptiness of s."""
    subset = s.is_subset(t)
    return SetRelation(
        equal=subset and t.is_subset(s),
        subset=subset,
        disjoint=s.is_disjoint(t),
        empty=s.is_empty,
        subset_witness=None if subset else s.subset_witness(t),
    )


def union_all(sets: Iterable[ActionSet]) -> ActionSet:
    items = list(sets)
    if not items:
        raise ValueError("union of no sets")
    result = items[0]
    for s in items[1:]:
        result = result.union(s)
    return result
