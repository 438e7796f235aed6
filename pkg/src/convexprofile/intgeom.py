"""Exact integer predicates for the planar hot paths.

Rational polygon vertices are cleared to a common denominator once; after
that every predicate is pure big-integer arithmetic (no divisions), so the
results are exact. Query points travel in homogeneous form (x, y, w) with
w > 0; integer vertices are the special case w = 1.

These functions back the high-volume operations (point-in-polygon,
visibility) and fall back to the rational partition machinery whenever a
query degenerates (vertex touches, collinear overlaps).
"""

from __future__ import annotations

import math


def clear_denominators(points):
    """(integer (x, y) pairs, common multiplier L) for rational 2D points."""
    denoms = []
    for p in points:
        for c in p.coords:
            denoms.append(int(c.denominator))
    L = 1
    for d in denoms:
        L = L * d // math.gcd(L, d)
    scaled = []
    for p in points:
        x, y = p.coords
        scaled.append(
            (
                int(x.numerator) * (L // int(x.denominator)),
                int(y.numerator) * (L // int(y.denominator)),
            )
        )
    return scaled, L


def homogenize(point, L):
    """Homogeneous integer triple (x, y, w), w > 0, for point * L."""
    x, y = point.coords
    xn, xd = int(x.numerator), int(x.denominator)
    yn, yd = int(y.numerator), int(y.denominator)
    w = xd * yd // math.gcd(xd, yd)
    return (xn * L * (w // xd), yn * L * (w // yd), w)


def orient(p, q, r):
    """Orientation sign of the homogeneous triple (all w > 0)."""
    px, py, pw = p
    qx, qy, qw = q
    rx, ry, rw = r
    det = (
        px * (qy * rw - ry * qw)
        - py * (qx * rw - rx * qw)
        + pw * (qx * ry - rx * qy)
    )
    return (det > 0) - (det < 0)


def as_h(v):
    """Lift an integer pair to a homogeneous triple."""
    return (v[0], v[1], 1)


def eq_h(p, q):
    return p[0] * q[2] == q[0] * p[2] and p[1] * q[2] == q[1] * p[2]


def strictly_between(p, a, b):
    """Whether collinear p lies strictly inside segment (a, b); all homogeneous."""
    if a[0] * b[2] != b[0] * a[2]:  # compare on x
        lo, hi = (a, b) if a[0] * b[2] < b[0] * a[2] else (b, a)
        return lo[0] * p[2] < p[0] * lo[2] and p[0] * hi[2] < hi[0] * p[2]
    lo, hi = (a, b) if a[1] * b[2] < b[1] * a[2] else (b, a)
    return lo[1] * p[2] < p[1] * lo[2] and p[1] * hi[2] < hi[1] * p[2]


def on_segment(p, a, b):
    """Whether p lies on the closed segment [a, b]; all homogeneous."""
    if orient(a, b, p) != 0:
        return False
    if eq_h(p, a) or eq_h(p, b):
        return True
    return strictly_between(p, a, b)


def point_in_polygon(q, verts):
    """-1 exterior / 0 boundary / +1 interior for homogeneous q.

    `verts` are integer pairs of a simple polygon. Parity is computed with
    the half-open crossing rule, fully exact.
    """
    qx, qy, qw = q
    inside = False
    n = len(verts)
    for i in range(n):
        ax, ay = verts[i]
        bx, by = verts[(i + 1) % n]
        ah = (ax, ay, 1)
        bh = (bx, by, 1)
        if on_segment(q, ah, bh):
            return 0
        a_above = ay * qw > qy
        b_above = by * qw > qy
        if a_above == b_above:
            continue
        side = orient(ah, bh, q)
        if not a_above:  # upward edge: crosses the +x ray iff q strictly left
            if side > 0:
                inside = not inside
        else:  # downward edge: crosses iff q strictly right
            if side < 0:
                inside = not inside
    return 1 if inside else -1


def sight_blocked(verts, x_h, t_h):
    """Visibility of t from x inside a simple polygon (both homogeneous).

    Returns True when an edge properly crosses the open sight segment,
    False when the open segment is free of boundary contact (the caller
    then classifies the single piece by its midpoint), and None when a
    degenerate contact (vertex inside the open segment) requires the exact
    rational partition fallback.
    """
    degenerate = False
    n = len(verts)
    for i in range(n):
        e1 = as_h(verts[i])
        e2 = as_h(verts[(i + 1) % n])
        o1 = orient(e1, e2, x_h)
        o2 = orient(e1, e2, t_h)
        o3 = orient(x_h, t_h, e1)
        o4 = orient(x_h, t_h, e2)
        if ((o1 > 0 and o2 < 0) or (o1 < 0 and o2 > 0)) and (
            (o3 > 0 and o4 < 0) or (o3 < 0 and o4 > 0)
        ):
            return True
        if o3 == 0 and strictly_between(e1, x_h, t_h):
            degenerate = True
        if o4 == 0 and strictly_between(e2, x_h, t_h):
            degenerate = True
    return None if degenerate else False


def midpoint_h(p, q):
    """Homogeneous midpoint of two homogeneous points."""
    return (
        p[0] * q[2] + q[0] * p[2],
        p[1] * q[2] + q[1] * p[2],
        2 * p[2] * q[2],
    )


def segment_in_polygon(verts, x_h, t_h):
    """Whether the closed segment [x, t] stays inside the closed polygon.

    Both endpoints must already be members. Returns True/False, or None
    when the query needs the rational partition fallback.
    """
    blocked = sight_blocked(verts, x_h, t_h)
    if blocked is True:
        return False
    if blocked is None:
        return None
    return point_in_polygon(midpoint_h(x_h, t_h), verts) >= 0
