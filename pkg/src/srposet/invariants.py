"""Ring-theoretic invariants of Stanley-Reisner rings, read off combinatorially.

The Cohen-Macaulay, Buchsbaum and depth tests all reduce to the vanishing
pattern of reduced homology of links.  Two exact observations keep the loops
desk-scale:

* only faces that are intersections of facets can carry nonvanishing link
  homology (for any other face the link is a cone), so the loops run over
  the intersection-closure of the facet family;
* dominated-vertex deletion (strong collapse) is a deformation retract, so
  each link is collapsed before any boundary matrix is built.

Both reductions preserve the computed values exactly; no approximation is
involved anywhere.
"""

from __future__ import annotations

from .errors import EmptyComplexError
from .poset import NEG_INF, POS_INF, Poset, open_interval, order_complex
from .simplicial import (
    FieldSpec,
    SimplicialComplex,
    _closed_faces,
    _jmin,
    _minimalize_facets,
    is_equidimensional,
    reduced_betti_numbers,
)


def krull_dim_stanley_reisner(k: SimplicialComplex) -> int:
    """Krull dimension of the face ring: dim K + 1, i.e. largest facet size."""
    return max(f.bit_count() for f in k.facets)


def _link_facets(facets: tuple[int, ...], sigma: int) -> tuple[int, ...]:
    return _minimalize_facets([f & ~sigma for f in facets if f & sigma == sigma])


def is_cohen_macaulay_complex(k: SimplicialComplex, field: FieldSpec) -> bool:
    """Reisner's criterion: every link has homology only in its top degree."""
    char = field.characteristic
    for sigma in _closed_faces(k.facets):
        lf = _link_facets(k.facets, sigma)
        dim_link = max(f.bit_count() for f in lf) - 1
        j = _jmin(lf, char)
        if j is not None and j < dim_link:
            return False
    return True


def is_buchsbaum_complex(k: SimplicialComplex, field: FieldSpec) -> bool:
    """Equidimensional with Cohen-Macaulay links of all nonempty faces."""
    if not is_equidimensional(k):
        return False
    char = field.characteristic
    # vertices first: cheapest failures, and links of larger faces are
    # links inside vertex links
    closed = [s for s in _closed_faces(k.facets) if s]
    for sigma in sorted(closed, key=lambda m: m.bit_count()):
        lf = _link_facets(k.facets, sigma)
        dim_link = max(f.bit_count() for f in lf) - 1
        j = _jmin(lf, char)
        if j is not None and j < dim_link:
            return False
    return True


def depth_stanley_reisner(k: SimplicialComplex, field: FieldSpec) -> int:
    """Depth of the face ring, from the vanishing of link homology.

    Implements depth = min { i : some face s has nonzero reduced homology
    of its link in degree i - |s| - 1 }.  For K = {emptyset} the face ring
    is the coefficient field; its depth is 0 by convention and this
    function raises EmptyComplexError instead of applying the formula.
    """
    if k.facets == (0,):
        raise EmptyComplexError("face ring of {emptyset} is the field; depth 0")
    return _depth_masks(k.facets, field.characteristic)


def _depth_masks(facets: tuple[int, ...], char: int) -> int:
    # vertices in every facet generate a polynomial extension: strip them
    common = facets[0]
    for f in facets:
        common &= f
    cones = common.bit_count()
    if cones:
        facets = _minimalize_facets([f & ~common for f in facets])
    if facets == (0,):
        return cones
    best = min(f.bit_count() for f in facets)
    facet_set = set(facets)
    for sigma in _closed_faces(facets):
        size = sigma.bit_count()
        if size + 1 >= best:
            break  # closed faces come sorted by size; no smaller value left
        if sigma in facet_set:
            continue
        j = _jmin(_link_facets(facets, sigma), char)
        if j is not None:
            best = min(best, size + 1 + j)
    return cones + best


def is_cohen_macaulay_poset(p: Poset, field: FieldSpec) -> bool:
    """Interval criterion: every open interval of P (with formal bottom and
    top adjoined) has an order complex with homology only in top degree.

    Deliberately implemented via open_interval + reduced_betti_numbers,
    independently of the link-based complex test.
    """
    points = [NEG_INF, *p.elements, POS_INF]

    def strictly_less(a, b) -> bool:
        if a is NEG_INF:
            return b is not NEG_INF
        if b is POS_INF:
            return a is not POS_INF
        if a is POS_INF or b is NEG_INF:
            return False
        return p.less(a, b)

    for a in points:
        for b in points:
            if not strictly_less(a, b):
                continue
            delta = order_complex(open_interval(p, a, b))
            d = delta.dim()
            if d <= 0:
                # d = -1: nothing below top degree; d = 0: only beta_{-1}
                # could matter and it vanishes whenever a vertex exists
                continue
            betti = reduced_betti_numbers(delta, field)
            if any(betti[i] for i in range(-1, d)):
                return False
    return True


def complex_report(k: SimplicialComplex, field: FieldSpec) -> dict:
    """Summary report of the face-ring invariants over one field."""
    dim = krull_dim_stanley_reisner(k)
    if k.facets == (0,):
        depth = 0
    else:
        depth = depth_stanley_reisner(k, field)
    return {
        "dim": dim,
        "depth": depth,
        "cm": is_cohen_macaulay_complex(k, field),
        "buchsbaum": is_buchsbaum_complex(k, field),
        "field": {"char": field.characteristic},
    }
