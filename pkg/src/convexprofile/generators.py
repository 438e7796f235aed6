"""Seeded random instance generators for the property harness.

Everything is driven by a caller-supplied random.Random so identical seeds
reproduce identical instances byte for byte. Coordinates are rationals
with small denominators (exact arithmetic stays cheap).
"""

from __future__ import annotations

import random

from .core import Point, Q, Vector, ZERO, interpolate, midpoint, orientation
from .errors import InvalidPolygonError
from .polyhedra import Halfspace, HPolyhedron, PointLocation
from .regions2d import SimplePolygon, convexity_oracle

_DENOMS = (1, 2, 4, 8, 16, 32, 64)


def rng_from_seed(seed):
    return random.Random(seed)


def random_rational(rng, lo=-8, hi=8, max_denom=64):
    den = rng.choice([d for d in _DENOMS if d <= max_denom])
    num = rng.randint(lo * den, hi * den)
    return Q(num, den)


def random_point2(rng, lo=-8, hi=8, max_denom=64):
    return Point((random_rational(rng, lo, hi, max_denom),
                  random_rational(rng, lo, hi, max_denom)))


def _convex_hull_ccw(points):
    """Exact 2D convex hull (monotone chain), strict turns only."""
    pts = sorted(set(p.coords for p in points))
    pts = [Point(c) for c in pts]
    if len(pts) < 3:
        return pts

    def build(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and orientation(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = build(pts)
    upper = build(reversed(pts))
    return lower[:-1] + upper[:-1]


def random_convex_polygon(rng, max_vertices=10, max_denom=64):
    """Hull of k random rational points; retries until a valid polygon."""
    while True:
        k = rng.randint(3, max_vertices)
        pts = [random_point2(rng, max_denom=max_denom) for _ in range(k)]
        hull = _convex_hull_ccw(pts)
        if len(hull) < 3:
            continue
        try:
            return SimplePolygon(hull)
        except InvalidPolygonError:
            continue


def random_staircase_polygon(rng, max_steps=5, max_denom=16):
    """Orthogonal skyline polygon: k columns with distinct adjacent heights."""
    while True:
        k = rng.randint(2, max_steps)
        xs = [ZERO]
        for _ in range(k):
            xs.append(xs[-1] + Q(rng.randint(1, 4 * 4), 4))
        heights = []
        for _ in range(k):
            h = Q(rng.randint(1, 6 * 4), 4)
            while heights and h == heights[-1]:
                h = Q(rng.randint(1, 6 * 4), 4)
            heights.append(h)
        verts = [Point((xs[0], ZERO)), Point((xs[-1], ZERO))]
        for i in range(k - 1, -1, -1):
            verts.append(Point((xs[i + 1], heights[i])))
            verts.append(Point((xs[i], heights[i])))
        # drop duplicated corner x-positions where adjacent columns meet
        cleaned = [verts[0]]
        for v in verts[1:]:
            if v != cleaned[-1]:
                cleaned.append(v)
        if cleaned[-1] == cleaned[0]:
            cleaned.pop()
        try:
            return SimplePolygon(cleaned)
        except InvalidPolygonError:
            continue


def random_notched_polygon(rng, max_vertices=9, max_denom=64):
    """Convex polygon with one edge dented toward the centroid (one reflex)."""
    while True:
        convex = random_convex_polygon(rng, max_vertices, max_denom)
        vs = list(convex.vertices)
        n = len(vs)
        i = rng.randrange(n)
        a, b = vs[i], vs[(i + 1) % n]
        g = convex.centroid()
        depth = Q(rng.randint(1, 3), 4)
        c = interpolate(midpoint(a, b), g, depth)
        candidate = vs[: i + 1] + [c] + vs[i + 1 :]
        try:
            poly = SimplePolygon(candidate)
        except InvalidPolygonError:
            continue
        if not convexity_oracle(poly):
            return poly


def random_simple_polygon(rng, max_vertices=10):
    """Mixed diet: convex hulls, skylines, and notched convex polygons."""
    kind = rng.randrange(4)
    if kind <= 1:
        return random_convex_polygon(rng, max_vertices)
    if kind == 2:
        return random_staircase_polygon(rng)
    return random_notched_polygon(rng, max_vertices=min(max_vertices, 9))


def random_hpolyhedron(rng, dim=2, max_constraints=12):
    """Random non-empty H-polyhedron; mixes pointed, lineal, and bounded shapes.

    A feasible anchor point is drawn first and every cut keeps positive
    slack at the anchor, so emptiness never needs retrying.
    """
    anchor = Point([Q(rng.randint(-4 * 8, 4 * 8), 8) for _ in range(dim)])
    k = rng.randint(1, max_constraints)
    halfspaces = []
    for _ in range(k):
        coords = [ZERO] * dim
        while all(c == 0 for c in coords):
            coords = [Q(rng.randint(-4, 4)) for _ in range(dim)]
        normal = Vector(coords)
        slack = Q(rng.randint(0, 24), 4)
        halfspaces.append(Halfspace(normal, normal.dot(Vector(anchor.coords)) + slack))
    if rng.random() < 0.4:  # force boundedness with a box
        bound = Q(rng.randint(6, 12))
        for j in range(dim):
            e = [ZERO] * dim
            e[j] = Q(1)
            halfspaces.append(Halfspace(Vector(e), bound))
            e2 = [ZERO] * dim
            e2[j] = Q(-1)
            halfspaces.append(Halfspace(Vector(e2), bound))
    return HPolyhedron(tuple(halfspaces), dim)


def random_bounded_polytope(rng, dim=2, extra_cuts=4):
    """Non-empty bounded polytope: a box plus random cuts through an anchor."""
    bound = Q(rng.randint(4, 8))
    anchor = Point(
        [Q(rng.randint(-2 * 4, 2 * 4), 4) for _ in range(dim)]
    )
    halfspaces = []
    for j in range(dim):
        e = [ZERO] * dim
        e[j] = Q(1)
        halfspaces.append(Halfspace(Vector(e), bound))
        e2 = [ZERO] * dim
        e2[j] = Q(-1)
        halfspaces.append(Halfspace(Vector(e2), bound))
    for _ in range(rng.randint(0, extra_cuts)):
        coords = [ZERO] * dim
        while all(c == 0 for c in coords):
            coords = [Q(rng.randint(-3, 3)) for _ in range(dim)]
        normal = Vector(coords)
        slack = Q(rng.randint(1, 16), 4)
        halfspaces.append(
            Halfspace(normal, normal.dot(Vector(anchor.coords)) + slack)
        )
    return HPolyhedron(tuple(halfspaces), dim)


def random_direction(rng, dim):
    coords = [ZERO] * dim
    while all(c == 0 for c in coords):
        coords = [Q(rng.randint(-5, 5)) for _ in range(dim)]
    return Vector(coords)


def sample_member_points(polygon, rng, count, max_denom=64):
    """Deterministic member samples of a simple polygon.

    Rejection sampling from the bounding box, topped up with inward-nudged
    edge midpoints when the polygon is thin.
    """
    xmin, ymin, xmax, ymax = polygon.bounding_box()
    out = []
    attempts = 0
    while len(out) < count and attempts < count * 40:
        attempts += 1
        x = xmin + (xmax - xmin) * Q(rng.randint(0, 256), 256)
        y = ymin + (ymax - ymin) * Q(rng.randint(0, 256), 256)
        p = Point((x, y))
        if polygon.locate(p) is not PointLocation.EXTERIOR:
            out.append(p)
    edges = polygon.edges()
    i = 0
    while len(out) < count:
        a, b = edges[i % len(edges)]
        m = midpoint(a, b)
        eps = Q(1, 8)
        d = b - a
        inward = Vector((-d.coords[1], d.coords[0]))
        cand = Point(
            (m.coords[0] + inward.coords[0] * eps,
             m.coords[1] + inward.coords[1] * eps)
        )
        while polygon.locate(cand) is PointLocation.EXTERIOR and eps > Q(1, 2**20):
            eps /= 4
            cand = Point(
                (m.coords[0] + inward.coords[0] * eps,
                 m.coords[1] + inward.coords[1] * eps)
            )
        out.append(cand if polygon.locate(cand) is not PointLocation.EXTERIOR else m)
        i += 1
    return out[:count]
