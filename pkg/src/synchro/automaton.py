"""Complete deterministic automata over integer states and letters.

States are 0..n-1 and letters are 0..k-1. State sets are bit masks wrapped
in :class:`StateSet`. An automaton is immutable after construction; the
inverse transition table is built once on first use and only read afterwards.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

Word = tuple[int, ...]


def _bit_members(bits: int) -> list[int]:
    """Indices of the set bits of ``bits``, ascending."""
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


class StateSet:
    """Immutable subset of the state range [0, n) with cached cardinality."""

    __slots__ = ("n", "bits", "cardinality")

    def __init__(self, n: int, members: Iterable[int] = ()):
        if n < 1:
            raise ValueError("state count must be >= 1")
        bits = 0
        for q in members:
            if not 0 <= q < n:
                raise ValueError(f"state {q} out of range [0, {n})")
            bits |= 1 << q
        self.n = n
        self.bits = bits
        self.cardinality = bits.bit_count()

    @classmethod
    def from_bits(cls, n: int, bits: int) -> "StateSet":
        if bits < 0 or bits >> n:
            raise ValueError(f"bit mask out of range for n={n}")
        s = cls.__new__(cls)
        s.n = n
        s.bits = bits
        s.cardinality = bits.bit_count()
        return s

    @classmethod
    def full(cls, n: int) -> "StateSet":
        return cls.from_bits(n, (1 << n) - 1)

    def members(self) -> list[int]:
        return _bit_members(self.bits)

    def __contains__(self, q: int) -> bool:
        return 0 <= q < self.n and (self.bits >> q) & 1 == 1

    def __iter__(self):
        return iter(self.members())

    def __len__(self) -> int:
        return self.cardinality

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, StateSet)
            and self.n == other.n
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __repr__(self) -> str:
        return f"StateSet({self.n}, {{{', '.join(map(str, self.members()))}}})"


class Automaton:
    """A complete DFA given by its transition table.

    ``rows[q][a]`` is the successor of state ``q`` under letter ``a``. The
    table must be rectangular and every entry must lie in [0, n).
    """

    __slots__ = ("n", "k", "rows", "_cols", "_inv_bits")

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if not rows or not rows[0]:
            raise ValueError("automaton needs at least one state and one letter")
        n = len(rows)
        k = len(rows[0])
        for q, row in enumerate(rows):
            if len(row) != k:
                raise ValueError(f"row {q} has {len(row)} entries, expected {k}")
            for a, p in enumerate(row):
                if not 0 <= p < n:
                    raise ValueError(
                        f"transition delta({q}, {a}) = {p} out of range [0, {n})"
                    )
        self.n = n
        self.k = k
        self.rows = rows
        self._cols = tuple(tuple(row[a] for row in rows) for a in range(k))
        self._inv_bits = None

    def delta(self, q: int, a: int) -> int:
        return self.rows[q][a]

    @property
    def full_bits(self) -> int:
        return (1 << self.n) - 1

    def build_inverse(self) -> None:
        """Force construction of the inverse table (e.g. before sharing)."""
        self._inverse()

    def _inverse(self):
        # Idempotent: a racing second build produces the identical tuple.
        inv = self._inv_bits
        if inv is None:
            masks_per_letter = []
            for a in range(self.k):
                masks = [0] * self.n
                for q, p in enumerate(self._cols[a]):
                    masks[p] |= 1 << q
                masks_per_letter.append(tuple(masks))
            inv = tuple(masks_per_letter)
            self._inv_bits = inv
        return inv

    def preimage_states(self, a: int, p: int) -> list[int]:
        """The states q with delta(q, a) = p."""
        return _bit_members(self._inverse()[a][p])

    def in_degree(self, a: int, p: int) -> int:
        return self._inverse()[a][p].bit_count()

    def image_bits(self, bits: int, a: int) -> int:
        col = self._cols[a]
        out = 0
        while bits:
            low = bits & -bits
            out |= 1 << col[low.bit_length() - 1]
            bits ^= low
        return out

    def preimage_bits(self, bits: int, a: int) -> int:
        inv = self._inverse()[a]
        out = 0
        while bits:
            low = bits & -bits
            out |= inv[low.bit_length() - 1]
            bits ^= low
        return out

    def _check_set(self, s: StateSet) -> None:
        if s.n != self.n:
            raise ValueError(f"state set over [0, {s.n}) used with n={self.n}")

    def _check_letter(self, a: int) -> None:
        if not 0 <= a < self.k:
            raise ValueError(f"letter {a} out of range [0, {self.k})")

    def image(self, s: StateSet, a: int) -> StateSet:
        """{ delta(q, a) : q in s }"""
        self._check_set(s)
        self._check_letter(a)
        return StateSet.from_bits(self.n, self.image_bits(s.bits, a))

    def preimage(self, s: StateSet, a: int) -> StateSet:
        """{ q : delta(q, a) in s }"""
        self._check_set(s)
        self._check_letter(a)
        return StateSet.from_bits(self.n, self.preimage_bits(s.bits, a))

    def is_synchronizing_word(self, word: Sequence[int]) -> bool:
        """True iff applying ``word`` to the full state set yields a singleton."""
        for a in word:
            self._check_letter(a)
        bits = self.full_bits
        for a in word:
            bits = self.image_bits(bits, a)
        return bits.bit_count() == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Automaton) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Automaton(n={self.n}, k={self.k})"


def cerny(n: int) -> Automaton:
    """The n-state Cerny automaton: letter 0 is the cyclic shift q -> q+1 mod n,
    letter 1 maps 0 -> 1 and fixes every other state. Shortest reset length
    is (n-1)^2."""
    if n < 2:
        raise ValueError("cerny automaton needs n >= 2")
    rows = [((q + 1) % n, 1 if q == 0 else q) for q in range(n)]
    return Automaton(rows)


def random_automaton(n: int, k: int, seed: int) -> Automaton:
    """Uniformly random labeled automaton: every transition drawn independently
    and uniformly from [0, n) using a Mersenne Twister seeded with ``seed``.
    Draws are row-major (state, then letter), so identical (n, k, seed) give
    identical tables."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    rng = random.Random(seed)
    rows = [[rng.randrange(n) for _ in range(k)] for _ in range(n)]
    return Automaton(rows)


def _sink_component(a: Automaton) -> list[int]:
    """States of the unique sink SCC of the transition digraph (all letters),
    or [] if the sink SCC is not unique."""
    n, k = a.n, a.k
    rows = a.rows

    visited = [False] * n
    order: list[int] = []
    for s in range(n):
        if visited[s]:
            continue
        visited[s] = True
        stack = [(s, 0)]
        while stack:
            q, i = stack[-1]
            if i < k:
                stack[-1] = (q, i + 1)
                p = rows[q][i]
                if not visited[p]:
                    visited[p] = True
                    stack.append((p, 0))
            else:
                order.append(q)
                stack.pop()

    inv = a._inverse()
    comp = [-1] * n
    ncomp = 0
    for s in reversed(order):
        if comp[s] >= 0:
            continue
        comp[s] = ncomp
        stack2 = [s]
        while stack2:
            q = stack2.pop()
            for letter in range(k):
                for p in _bit_members(inv[letter][q]):
                    if comp[p] < 0:
                        comp[p] = ncomp
                        stack2.append(p)
        ncomp += 1

    has_out = [False] * ncomp
    for q in range(n):
        for letter in range(k):
            p = rows[q][letter]
            if comp[p] != comp[q]:
                has_out[comp[q]] = True
    sinks = [c for c in range(ncomp) if not has_out[c]]
    if len(sinks) != 1:
        return []
    return [q for q in range(n) if comp[q] == sinks[0]]


START_MODES = ("all", "sink", "high-indegree")


def start_set(a: Automaton, mode: str = "all") -> list[StateSet]:
    """Singletons to seed the inverse search with.

    ``sink`` keeps only states of the unique sink SCC; ``high-indegree`` keeps
    states with in-degree >= 2 on some letter. A restricted mode that comes up
    empty falls back to all singletons.
    """
    if mode not in START_MODES:
        raise ValueError(f"unknown start mode {mode!r}")
    if mode == "sink":
        states = _sink_component(a)
    elif mode == "high-indegree":
        states = [
            p
            for p in range(a.n)
            if any(a.in_degree(letter, p) >= 2 for letter in range(a.k))
        ]
    else:
        states = list(range(a.n))
    if not states:
        states = list(range(a.n))
    return [StateSet(a.n, (q,)) for q in states]


def indegree_permutation(a: Automaton) -> tuple[Automaton, tuple[int, ...]]:
    """Relabel states so total in-degree (summed over letters) is non-increasing
    in state index; ties keep original order. Returns the relabeled automaton
    and the map pi with pi[old] = new. Letters are untouched, so any reset word
    of the relabeled automaton is a reset word of the original."""
    n, k = a.n, a.k
    total = [
        sum(a.in_degree(letter, q) for letter in range(k)) for q in range(n)
    ]
    by_indegree = sorted(range(n), key=lambda q: (-total[q], q))
    pi = [0] * n
    for new, old in enumerate(by_indegree):
        pi[old] = new
    rows = [[0] * k for _ in range(n)]
    for q in range(n):
        for letter in range(k):
            rows[pi[q]][letter] = pi[a.rows[q][letter]]
    return Automaton(rows), tuple(pi)


class AutomatonFormatError(ValueError):
    """Malformed automaton text; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_automaton(text: str) -> Automaton:
    """Parse the interchange text format: first line "n k", then n lines of k
    whitespace-separated successor states (0-based)."""
    lines = text.splitlines()
    if not lines or not lines[0].split():
        raise AutomatonFormatError("expected header 'n k'", 1)
    header = lines[0].split()
    if len(header) != 2:
        raise AutomatonFormatError(
            f"expected header 'n k', got {len(header)} fields", 1
        )
    try:
        n, k = int(header[0]), int(header[1])
    except ValueError:
        raise AutomatonFormatError(f"non-integer header {lines[0]!r}", 1) from None
    if n < 1 or k < 1:
        raise AutomatonFormatError(f"need n >= 1 and k >= 1, got n={n} k={k}", 1)

    rows = []
    for q in range(n):
        lineno = q + 2
        if q + 1 >= len(lines) or not lines[q + 1].split():
            raise AutomatonFormatError(f"expected {n} transition rows", lineno)
        fields = lines[q + 1].split()
        if len(fields) != k:
            raise AutomatonFormatError(
                f"expected {k} entries in row {q}, got {len(fields)}", lineno
            )
        row = []
        for a, field in enumerate(fields):
            try:
                p = int(field)
            except ValueError:
                raise AutomatonFormatError(
                    f"non-integer entry {field!r}", lineno
                ) from None
            if not 0 <= p < n:
                raise AutomatonFormatError(
                    f"state {p} out of range [0, {n})", lineno
                )
            row.append(p)
        rows.append(row)

    for extra, line in enumerate(lines[n + 1 :], n + 2):
        if line.split():
            raise AutomatonFormatError("unexpected extra row", extra)
    return Automaton(rows)


def serialize_automaton(a: Automaton) -> str:
    out = [f"{a.n} {a.k}"]
    out.extend(" ".join(map(str, row)) for row in a.rows)
    return "\n".join(out) + "\n"
