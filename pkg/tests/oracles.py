"""Reference implementations that avoid Gaussian elimination entirely.

Everything here enumerates subsets or permutations, so it shares no code
path with the package it checks.
"""

from __future__ import annotations

import itertools
from math import comb


def span(vectors):
    """Every XOR-combination of the given int vectors (as a set)."""
    out = {0}
    for v in vectors:
        out |= {x ^ v for x in out}
    return out


def rank(rows):
    return len(span(rows)).bit_length() - 1


def columns(rows, l):
    return [sum(((rows[r] >> c) & 1) << r for r in range(len(rows))) for c in range(l)]


def kills(rows, i, erased):
    """Subset search: is Y = e_i absent from combos of kept columns on rows i..?"""
    l = len(rows)
    kept = [col >> i for c, col in enumerate(columns(rows, l)) if not erased[c]]
    for k in range(len(kept) + 1):
        for combo in itertools.combinations(kept, k):
            acc = 0
            for v in combo:
                acc ^= v
            if acc == 1:
                return False
    return True


def etable(rows):
    l = len(rows)
    E = [[0] * (l + 1) for _ in range(l)]
    for bits in itertools.product((0, 1), repeat=l):
        w = sum(bits)
        for i in range(l):
            if kills(rows, i, bits):
                E[i][w] += 1
    return E


def triangularizable(rows, l):
    cols = columns(rows, l)
    for perm in itertools.permutations(range(l)):
        if all(cols[c] >> (j + 1) == 0 for j, c in enumerate(perm)):
            return True
    return False


def partial_distances(rows):
    l = len(rows)
    out = []
    for i in range(l):
        out.append(min((rows[i] ^ c).bit_count() for c in span(rows[i + 1:])))
    return out


def bernstein(E_row, z):
    l = len(E_row) - 1
    return sum(e * z**w * (1 - z) ** (l - w) for w, e in enumerate(E_row))


def binom_row(l):
    return [comb(l, w) for w in range(l + 1)]
