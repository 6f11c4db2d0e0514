"""Exact rank computations over the rationals and prime fields.

All matrices are small and dense; entries are Python ints.  Characteristic 0
uses fraction-free (Bareiss) elimination, characteristic p reduces mod p.
No floating point anywhere.
"""

from __future__ import annotations


def rank_char0(rows: list[list[int]]) -> int:
    """Rank over Q of an integer matrix, by fraction-free elimination."""
    m = [row[:] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pivot_row = m[rank]
        pv = pivot_row[col]
        for i in range(rank + 1, nrows):
            row = m[i]
            f = row[col]
            for j in range(col + 1, ncols):
                row[j] = (pv * row[j] - f * pivot_row[j]) // prev
            row[col] = 0
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_modp(rows: list[list[int]], p: int) -> int:
    """Rank over F_p of an integer matrix."""
    m = [[x % p for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        pivot_row = [(x * inv) % p for x in m[rank]]
        m[rank] = pivot_row
        for i in range(rank + 1, nrows):
            f = m[i][col]
            if f:
                row = m[i]
                m[i] = [(a - f * b) % p for a, b in zip(row, pivot_row)]
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_mod2(bitrows: list[int]) -> int:
    """Rank over F_2 of a matrix whose rows are given as bitmasks."""
    rank = 0
    pivots: dict[int, int] = {}
    for row in bitrows:
        while row:
            high = row.bit_length() - 1
            if high in pivots:
                row ^= pivots[high]
            else:
                pivots[high] = row
                rank += 1
                break
    return rank
