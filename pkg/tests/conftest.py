"""Shared brute-force oracles, kept independent of the library internals:
they only read the transition table via Automaton.delta."""

from __future__ import annotations

from itertools import product

from synchro import Automaton


def brute_image(a: Automaton, members, letter) -> set[int]:
    return {a.delta(q, letter) for q in members}


def brute_preimage(a: Automaton, members, letter) -> set[int]:
    target = set(members)
    return {q for q in range(a.n) if a.delta(q, letter) in target}


def brute_word_image(a: Automaton, members, word) -> set[int]:
    cur = set(members)
    for letter in word:
        cur = brute_image(a, cur, letter)
    return cur


def brute_pair_merge_distance(a: Automaton, p: int, q: int, limit: int) -> int:
    """Length of a shortest word merging {p, q}, by BFS over unordered pairs
    forward (independent of the backward diagonal BFS it checks). -1 if none
    within ``limit``."""
    if p == q:
        return 0
    start = (min(p, q), max(p, q))
    seen = {start}
    frontier = [start]
    for d in range(1, limit + 1):
        nxt = []
        for u, v in frontier:
            for letter in range(a.k):
                x, y = a.delta(u, letter), a.delta(v, letter)
                if x == y:
                    return d
                pair = (min(x, y), max(x, y))
                if pair not in seen:
                    seen.add(pair)
                    nxt.append(pair)
        frontier = nxt
        if not frontier:
            break
    return -1


def no_shorter_reset_word(a: Automaton, length: int) -> bool:
    """Exhaustively check that no word strictly shorter than ``length``
    synchronizes. Only viable for tiny alphabets/lengths."""
    all_states = range(a.n)
    for l in range(length):
        for word in product(range(a.k), repeat=l):
            if len(brute_word_image(a, all_states, word)) == 1:
                return False
    return True
