"""Posets, intervals, purity, and order complexes.

Run:  python demos/01_posets_and_order_complexes.py
"""

from srposet import (
    NEG_INF,
    POS_INF,
    is_poset_ideal,
    is_pure,
    open_interval,
    opposite,
    order_complex,
    poset_from_cover_relations,
    reduced_euler_char_poset,
    uplus,
)

# A poset is built from cover relations; the strict order is their
# transitive closure.  The diamond: one bottom, two middles, one top.
diamond = poset_from_cover_relations(
    ["bot", "x", "y", "top"],
    [("bot", "x"), ("bot", "y"), ("x", "top"), ("y", "top")],
)
print("diamond:", diamond)
print("bot < top (forced by closure):", diamond.less("bot", "top"))

# Purity: all maximal chains have the same cardinality.
print("diamond is pure:", is_pure(diamond))
broken = poset_from_cover_relations(["a", "b", "c"], [("a", "b")])
print("chain plus isolated point is pure:", is_pure(broken))

# Open intervals, with formal bottom/top sentinels.
print("(bot, top) =", open_interval(diamond, "bot", "top").elements)
print("(-inf, top) =", open_interval(diamond, NEG_INF, "top").elements)
print("(x, +inf) =", open_interval(diamond, "x", POS_INF).elements)

# The order complex has the maximal chains as facets.
delta = order_complex(diamond)
print("order complex facets:", delta.facet_labels())

# The reduced Euler characteristic counts chains with alternating signs,
# the empty chain included.  Anything with a unique minimum is a cone.
print("chi~(diamond) =", reduced_euler_char_poset(diamond))
two_points = poset_from_cover_relations(["a", "b"], [])
print("chi~(two-point antichain) =", reduced_euler_char_poset(two_points))
empty = poset_from_cover_relations([], [])
print("chi~(empty poset) =", reduced_euler_char_poset(empty))

# Reversing all relations is an involution.
print("opposite(diamond):", opposite(diamond))

# Poset ideals are down-closed subsets.  Duplicating an ideal Q below
# itself yields the poset P (+) Q: each x* sits below x and below
# everything above x, and the starred copies inherit Q's order.
print("is {bot, x} an ideal:", is_poset_ideal(diamond, {"bot", "x"}))
enlarged = uplus(diamond, {"bot", "x"})
print("P (+) Q elements:", enlarged.elements)
print("x* < x:", enlarged.less("x*", "x"))
print("x* < top:", enlarged.less("x*", "top"))
print("bot* < x*:", enlarged.less("bot*", "x*"))
