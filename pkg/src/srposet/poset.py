"""Finite posets: intervals, ideals, purity, order complexes and P (+) Q.

A poset is stored as a labelled element list together with the full strict
order relation, kept transitively closed.  Rows of the relation are bitmasks:
bit j of ``lt[i]`` means element i < element j.  All values are immutable;
every operation is a pure function.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    CycleError,
    NotAnIdealError,
    NotComparableError,
    UnknownLabelError,
)
from .simplicial import SimplicialComplex

STAR = "*"


class _Sentinel:
    def __init__(self, name: str):
        self._name = name

    def __repr__(self) -> str:
        return self._name


#: Formal bottom/top elements, accepted by interval operations but never
#: stored inside a Poset.
NEG_INF = _Sentinel("-inf")
POS_INF = _Sentinel("+inf")


@dataclass(frozen=True)
class Poset:
    """Finite poset on labelled elements with a transitively closed order."""

    elements: tuple[str, ...]
    lt: tuple[int, ...]

    def __post_init__(self):
        n = len(self.elements)
        if len(set(self.elements)) != n:
            raise ValueError("duplicate element labels")
        if len(self.lt) != n:
            raise ValueError("relation size does not match element count")
        full = (1 << n) - 1
        for i, row in enumerate(self.lt):
            if row & ~full:
                raise ValueError("relation bit out of range")
            if (row >> i) & 1:
                raise CycleError(f"{self.elements[i]} < {self.elements[i]}")
        # closed + irreflexive implies antisymmetric, so no separate check
        for i in range(n):
            row = self.lt[i]
            closure = row
            m = row
            while m:
                j = (m & -m).bit_length() - 1
                closure |= self.lt[j]
                m &= m - 1
            if closure != row:
                raise ValueError("relation is not transitively closed")

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        pairs = [
            f"{self.elements[i]}<{self.elements[j]}"
            for i, j in self.cover_pairs_idx()
        ]
        return f"Poset({list(self.elements)!r}, covers=[{', '.join(pairs)}])"

    def index(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise UnknownLabelError(label) from None

    def less(self, a: str, b: str) -> bool:
        """a < b in this poset."""
        return bool((self.lt[self.index(a)] >> self.index(b)) & 1)

    def leq(self, a: str, b: str) -> bool:
        return a == b or self.less(a, b)

    def down_masks(self) -> tuple[int, ...]:
        """For each element, the bitmask of elements strictly below it."""
        n = len(self.elements)
        cols = [0] * n
        for i, row in enumerate(self.lt):
            m = row
            while m:
                j = (m & -m).bit_length() - 1
                cols[j] |= 1 << i
                m &= m - 1
        return tuple(cols)

    def cover_pairs_idx(self) -> list[tuple[int, int]]:
        """Hasse diagram as (lower, upper) index pairs."""
        cols = self.down_masks()
        out = []
        for i, row in enumerate(self.lt):
            m = row
            while m:
                j = (m & -m).bit_length() - 1
                if not (row & cols[j]):
                    out.append((i, j))
                m &= m - 1
        return out

    def minimal_idx(self) -> list[int]:
        cols = self.down_masks()
        return [i for i in range(len(self.elements)) if not cols[i]]

    def maximal_idx(self) -> list[int]:
        return [i for i in range(len(self.elements)) if not self.lt[i]]

    def restrict(self, keep: Iterable[str]) -> "Poset":
        """Induced subposet on the given labels (kept in this poset's order)."""
        keep_set = set(keep)
        unknown = keep_set - set(self.elements)
        if unknown:
            raise UnknownLabelError(sorted(unknown)[0])
        idx = [i for i, e in enumerate(self.elements) if e in keep_set]
        return self._restrict_idx(idx)

    def _restrict_idx(self, idx: Sequence[int]) -> "Poset":
        pos = {g: k for k, g in enumerate(idx)}
        rows = []
        for i in idx:
            row = 0
            m = self.lt[i]
            while m:
                j = (m & -m).bit_length() - 1
                if j in pos:
                    row |= 1 << pos[j]
                m &= m - 1
            rows.append(row)
        return Poset(tuple(self.elements[i] for i in idx), tuple(rows))

    def maximal_chains_idx(self) -> list[tuple[int, ...]]:
        """All maximal chains, as index tuples from bottom to top."""
        n = len(self.elements)
        if n == 0:
            return []
        above = [[] for _ in range(n)]
        for i, j in self.cover_pairs_idx():
            above[i].append(j)
        chains = []
        stack = [(i, (i,)) for i in self.minimal_idx()]
        while stack:
            x, chain = stack.pop()
            if not above[x]:
                chains.append(chain)
            else:
                for y in above[x]:
                    stack.append((y, chain + (y,)))
        return chains


def poset_from_cover_relations(
    labels: Sequence[str], covers: Iterable[tuple[str, str]]
) -> Poset:
    """Build a poset as the transitive closure of cover relations.

    Raises CycleError if the closure would relate an element to itself
    (this also rejects any antisymmetry violation).
    """
    labels = tuple(labels)
    if len(set(labels)) != len(labels):
        raise ValueError("duplicate element labels")
    index = {e: i for i, e in enumerate(labels)}
    n = len(labels)
    rows = [0] * n
    for a, b in covers:
        if a not in index:
            raise UnknownLabelError(a)
        if b not in index:
            raise UnknownLabelError(b)
        rows[index[a]] |= 1 << index[b]
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rows[k]
    for i in range(n):
        if (rows[i] >> i) & 1:
            raise CycleError(f"closure relates {labels[i]} < {labels[i]}")
    return Poset(labels, tuple(rows))


def is_pure(p: Poset) -> bool:
    """True iff all maximal chains of p have the same cardinality."""
    n = len(p)
    if n == 0:
        return True
    above = [[] for _ in range(n)]
    for i, j in p.cover_pairs_idx():
        above[i].append(j)
    lengths: dict[int, frozenset[int]] = {}

    def up_lengths(x: int) -> frozenset[int]:
        got = lengths.get(x)
        if got is None:
            if not above[x]:
                got = frozenset([1])
            else:
                got = frozenset(1 + l for y in above[x] for l in up_lengths(y))
            lengths[x] = got
        return got

    seen: set[int] = set()
    for x in p.minimal_idx():
        seen |= up_lengths(x)
        if len(seen) > 1:
            return False
    return True


def is_poset_ideal(p: Poset, subset: Iterable[str]) -> bool:
    """True iff the subset is downward closed in p."""
    mask = _subset_mask(p, subset)
    cols = p.down_masks()
    m = mask
    while m:
        j = (m & -m).bit_length() - 1
        if cols[j] & ~mask:
            return False
        m &= m - 1
    return True


def _subset_mask(p: Poset, subset: Iterable[str]) -> int:
    mask = 0
    for label in subset:
        mask |= 1 << p.index(label)
    return mask


def open_interval(p: Poset, a, b) -> Poset:
    """The induced subposet on {z | a < z < b}.

    Endpoints may be elements of p or the sentinels NEG_INF / POS_INF;
    (NEG_INF, POS_INF) returns p itself.
    """
    n = len(p)
    full = (1 << n) - 1
    if a is NEG_INF:
        lower = full
    else:
        lower = p.lt[p.index(a)]
    if b is POS_INF:
        upper = full
    else:
        upper = p.down_masks()[p.index(b)]
    if a is not NEG_INF and b is not POS_INF:
        if not (p.lt[p.index(a)] >> p.index(b)) & 1:
            raise NotComparableError(f"{a} is not strictly below {b}")
    mask = lower & upper
    return p._restrict_idx([i for i in range(n) if (mask >> i) & 1])


def uplus(p: Poset, q: Iterable[str]) -> Poset:
    """The poset on P and a duplicated copy Q* of a poset ideal Q.

    The starred copy sits below its originals: x* < y* and x* < y follow the
    order of P (the latter for x <= y), and P keeps its own order.  Starred
    labels are the original labels suffixed with ``*``; input labels must not
    contain the marker.
    """
    for e in p.elements:
        if STAR in e:
            raise ValueError(f"label {e!r} contains the reserved marker {STAR!r}")
    qmask = _subset_mask(p, q)
    if not is_poset_ideal(p, [p.elements[i] for i in _bits(qmask)]):
        raise NotAnIdealError("subset is not downward closed")
    n = len(p)
    qidx = list(_bits(qmask))
    star_of = {x: n + k for k, x in enumerate(qidx)}
    labels = list(p.elements) + [p.elements[x] + STAR for x in qidx]
    rows = [0] * len(labels)
    for i in range(n):
        rows[i] = p.lt[i]
    for x in qidx:
        sx = star_of[x]
        row = 1 << x
        for y in qidx:
            if (p.lt[x] >> y) & 1:
                row |= 1 << star_of[y]
        m = p.lt[x]
        while m:
            j = (m & -m).bit_length() - 1
            row |= 1 << j
            m &= m - 1
        rows[sx] = row
    return Poset(tuple(labels), tuple(rows))


def order_complex(p: Poset) -> SimplicialComplex:
    """The simplicial complex of chains of p; facets are maximal chains."""
    if len(p) == 0:
        return SimplicialComplex((), (0,))
    masks = []
    for chain in p.maximal_chains_idx():
        m = 0
        for i in chain:
            m |= 1 << i
        masks.append(m)
    return SimplicialComplex(p.elements, tuple(sorted(set(masks))))


def reduced_euler_char_poset(p: Poset) -> int:
    """Reduced Euler characteristic of the order complex of p.

    Sum of (-1)^(|chain|-1) over all chains; the empty chain contributes
    -1, so the empty poset has value -1.
    """
    n = len(p)
    return euler_char_restricted(p.down_masks(), (1 << n) - 1)


def euler_char_restricted(down_masks: Sequence[int], mask: int) -> int:
    """Reduced Euler characteristic of the induced subposet on a bitmask.

    signed[i] accumulates the signed count of chains with maximum i; a
    chain extending one that ends at j flips the sign.
    """
    order = sorted(_bits(mask), key=lambda i: (down_masks[i] & mask).bit_count())
    signed = {}
    total = -1
    for i in order:
        s = 1
        m = down_masks[i] & mask
        while m:
            j = (m & -m).bit_length() - 1
            s -= signed[j]
            m &= m - 1
        signed[i] = s
        total += s
    return total


def opposite(p: Poset) -> Poset:
    """The poset with all relations reversed; an involution."""
    return Poset(p.elements, p.down_masks())


def _bits(mask: int) -> Iterator[int]:
    while mask:
        yield (mask & -mask).bit_length() - 1
        mask &= mask - 1


# ----------------------------------------------------------------------
# JSON round trips: {"elements": [...], "covers": [[a, b], ...]} and
# {"ideal": [...]}.

def poset_to_json(p: Poset) -> str:
    covers = [
        [p.elements[i], p.elements[j]] for i, j in sorted(p.cover_pairs_idx())
    ]
    return json.dumps({"elements": list(p.elements), "covers": covers})


def poset_from_json(text: str) -> Poset:
    data = json.loads(text)
    if not isinstance(data, dict) or "elements" not in data:
        raise ValueError("poset JSON must be an object with an 'elements' key")
    covers = [tuple(pair) for pair in data.get("covers", [])]
    return poset_from_cover_relations(data["elements"], covers)


def ideal_from_json(text: str) -> list[str]:
    data = json.loads(text)
    if not isinstance(data, dict) or "ideal" not in data:
        raise ValueError("ideal JSON must be an object with an 'ideal' key")
    return list(data["ideal"])


# ----------------------------------------------------------------------
# Enumeration and sampling, for sweeps and property tests.

def enumerate_posets(labels: Sequence[str]) -> Iterator[Poset]:
    """All labelled posets on the given elements.

    Counts by size follow 1, 1, 3, 19, 219, 4231, 130023, ...
    """
    labels = tuple(labels)
    n = len(labels)

    def closed_subsets(req: Sequence[int], m: int) -> list[int]:
        # subsets s with req[j] a subset of s for every j in s
        out = []
        for s in range(1 << m):
            ok = True
            t = s
            while t:
                j = (t & -t).bit_length() - 1
                if req[j] & ~s:
                    ok = False
                    break
                t &= t - 1
            if ok:
                out.append(s)
        return out

    def rec(m: int, rows: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if m == n:
            yield rows
            return
        cols = [0] * m
        for i in range(m):
            t = rows[i]
            while t:
                j = (t & -t).bit_length() - 1
                cols[j] |= 1 << i
                t &= t - 1
        downs = closed_subsets(cols, m)
        ups = closed_subsets(rows, m)
        for d in downs:
            for u in ups:
                if d & u:
                    continue
                ok = True
                t = d
                while t and ok:
                    i = (t & -t).bit_length() - 1
                    if u & ~rows[i]:
                        ok = False
                    t &= t - 1
                if not ok:
                    continue
                new_rows = tuple(
                    rows[i] | (1 << m) if (d >> i) & 1 else rows[i] for i in range(m)
                ) + (u,)
                yield from rec(m + 1, new_rows)

    for rows in rec(0, ()):
        yield Poset(labels, rows)


def random_poset(rng, labels: Sequence[str], edge_prob: float = 0.35) -> Poset:
    """A random labelled poset: random DAG on a shuffled order, then closure."""
    labels = list(labels)
    n = len(labels)
    perm = list(range(n))
    rng.shuffle(perm)
    covers = []
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < edge_prob:
                covers.append((labels[perm[a]], labels[perm[b]]))
    return poset_from_cover_relations(labels, covers)


def all_poset_ideals(p: Poset) -> Iterator[frozenset[str]]:
    """All poset ideals (down-sets) of p, the empty set and p included."""
    n = len(p)
    cols = p.down_masks()
    for s in range(1 << n):
        ok = True
        t = s
        while t:
            j = (t & -t).bit_length() - 1
            if cols[j] & ~s:
                ok = False
                break
            t &= t - 1
        if ok:
            yield frozenset(p.elements[i] for i in _bits(s))


def random_poset_ideal(rng, p: Poset) -> frozenset[str]:
    """Downward closure of a random subset of p."""
    n = len(p)
    cols = p.down_masks()
    mask = 0
    for i in range(n):
        if rng.random() < 0.4:
            mask |= 1 << i
    closed = mask
    t = mask
    while t:
        j = (t & -t).bit_length() - 1
        closed |= cols[j]
        t &= t - 1
    # cols are full lower sets, so one pass closes downward
    return frozenset(p.elements[i] for i in _bits(closed))
