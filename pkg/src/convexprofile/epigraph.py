"""Epigraphs of strictly convex univariate polynomials.

These are the closed, convex, unbounded instances whose boundary (the
graph) contains no ray: the reconstruction theorems need them to show the
results reach beyond polytopes. Chord search runs in exact arithmetic and
certifies its bracket.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Q, ZERO, rational
from .errors import BelowGraphError, InvalidRegionError
from .polyhedra import PointLocation

CHORD_TOLERANCE = Q(1, 2**40)

# Strict convexity of the polynomial is checked on this probe grid at
# construction (sufficient for the desk-scale instances used here).
_CONVEXITY_GRID = [Q(k, 2) for k in range(-16, 17)]


@dataclass(frozen=True)
class Epigraph1D:
    """The set {(x, y) : y >= f(x)} for a strictly convex polynomial f."""

    poly_coeffs: tuple  # (c0, c1, c2, ...), f(x) = sum c_k x^k

    def __post_init__(self):
        coeffs = tuple(rational(c) for c in self.poly_coeffs)
        object.__setattr__(self, "poly_coeffs", coeffs)
        if len(coeffs) < 3:
            raise InvalidRegionError(
                "need a polynomial of degree >= 2 for strict convexity"
            )
        for x in _CONVEXITY_GRID:
            if self.second_derivative(x) <= 0:
                raise InvalidRegionError(
                    f"second derivative is not positive at x = {x}"
                )

    def value(self, x):
        acc = ZERO
        for c in reversed(self.poly_coeffs):
            acc = acc * x + c
        return acc

    def second_derivative(self, x):
        acc = ZERO
        n = len(self.poly_coeffs)
        for k in range(n - 1, 1, -1):
            acc = acc * x + self.poly_coeffs[k] * (k * (k - 1))
        return acc

    def locate(self, p):
        x, y = p.coords
        fx = self.value(x)
        if y > fx:
            return PointLocation.INTERIOR
        if y == fx:
            return PointLocation.BOUNDARY
        return PointLocation.EXTERIOR

    def contains(self, p):
        return self.locate(p) is not PointLocation.EXTERIOR

    def chord_value(self, a, b, x):
        """Height of the graph chord from (a, f(a)) to (b, f(b)) at x."""
        fa, fb = self.value(a), self.value(b)
        if a == b:
            return fa
        return fa + (fb - fa) * (x - a) / (b - a)


def chord_find(epigraph, p, tolerance=CHORD_TOLERANCE):
    """Rationals a <= p.x <= b whose graph chord passes just above p.

    The chord height at p.x is exactly >= p.y and <= p.y + tolerance.
    Found by symmetric doubling then bisection on the half-width (the
    symmetric chord height is strictly increasing in the half-width for a
    strictly convex f). A boundary point degenerates to a = b = p.x.
    """
    px, py = p.coords
    fx = epigraph.value(px)
    if py < fx:
        raise BelowGraphError(f"{p!r} lies strictly below the graph")
    if py == fx:
        return px, px

    def height(t):
        return (epigraph.value(px - t) + epigraph.value(px + t)) / 2

    t = Q(1)
    for _ in range(128):
        if height(t) >= py:
            break
        t *= 2
    else:  # pragma: no cover - convexity guarantees growth
        raise ArithmeticError("chord expansion failed to clear the point")
    if height(t) == py:
        return px - t, px + t
    lo, hi = ZERO, t
    while height(hi) - py > tolerance:
        mid = (lo + hi) / 2
        if height(mid) >= py:
            hi = mid
        else:
            lo = mid
    return px - hi, px + hi
