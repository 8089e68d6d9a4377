"""Closed-form Weierstrass semigroups, pure gaps, gap boxes and floors.

The membership and pure-gap predicates only need the ramification data
(m, r) and the Bezout pair a*r + b*m = 1, so they also accept a bare
RamificationData when no valid curve exists over the field at hand.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .rrlattice import Divisor, ceil_div, monomial_divisor, omega_enumerate


class BadArityError(ValueError):
    pass


class NonPositiveCoordinateError(ValueError):
    pass


class EmptyRiemannRochSpaceError(ValueError):
    pass


class RamificationData:
    """The (m, r) skeleton shared by all curves y^m = f(x)^lambda, deg f = r."""

    def __init__(self, m: int, r: int):
        import math

        if m < 2 or r < 1 or math.gcd(m, r) != 1:
            raise ValueError(f"need m >= 2, r >= 1, gcd(m, r) = 1; got m={m}, r={r}")
        self.m = m
        self.r = r
        self.g = (r - 1) * (m - 1) // 2
        self.a = pow(r, -1, m)
        self.b = (1 - self.a * r) // m


@dataclass(frozen=True)
class PlaceTuple:
    """Selection P_1..P_l, optionally followed by P_inf."""

    l: int
    include_infinity: bool = False

    def arity(self) -> int:
        return self.l + (1 if self.include_infinity else 0)

    def validate(self, r: int) -> None:
        if not 0 <= self.l <= r:
            raise BadArityError(f"l={self.l} out of [0, {r}]")
        if self.arity() == 0:
            raise BadArityError("at least one place must be selected")


@dataclass(frozen=True)
class GapBox:
    """Axis-aligned box of pure gaps: coordinates base_i .. base_i + width_i."""

    places: PlaceTuple
    base: Tuple[int, ...]
    widths: Tuple[int, ...]

    def corner(self) -> Tuple[int, ...]:
        return tuple(b + w for b, w in zip(self.base, self.widths))

    def points(self) -> Iterable[Tuple[int, ...]]:
        return itertools.product(*(range(b, b + w + 1) for b, w in zip(self.base, self.widths)))

    def induced_divisor(self, r: int) -> Divisor:
        """G = sum (2*base_i + width_i - 1) Q_i over the selected places."""
        coeffs = [2 * b + w - 1 for b, w in zip(self.base, self.widths)]
        s = [0] * r
        t = 0
        if self.places.include_infinity:
            t = coeffs[-1]
            coeffs = coeffs[:-1]
        for idx, c in enumerate(coeffs):
            s[idx] = c
        return Divisor(tuple(s), t)


def _split_coords(places: PlaceTuple, coords: Sequence[int]) -> Tuple[List[int], Optional[int]]:
    if len(coords) != places.arity():
        raise BadArityError(f"expected {places.arity()} coordinates, got {len(coords)}")
    if places.include_infinity:
        return list(coords[:-1]), coords[-1]
    return list(coords), None


def _member_conditions(curve, ss: List[int], t: Optional[int]) -> List[int]:
    """Left-minus-right values of the membership inequalities (<= 0 means satisfied).

    ss lists the coordinates at P_1..P_l; t is the coordinate at P_inf or
    None.  Places beyond l carry coefficient 0 and are folded into the
    (r - l) ceiling term.
    """
    m, r, a, b = curve.m, curve.r, curve.a, curve.b
    l = len(ss)
    vals = []
    if t is not None:
        # The P_inf condition sums over the other selected finite places
        # (all but the first) plus the r - l unselected ones.
        s1 = ss[0] if ss else 0
        lhs = m * sum(ceil_div(-a * t - si, m) for si in ss[1:])
        lhs += m * (r - max(l, 1)) * ceil_div(-a * t, m)
        vals.append(lhs - (s1 + (a + b * m) * t))
    for j in range(l):
        lhs = m * sum(ceil_div(ss[j] - ss[i], m) for i in range(l) if i != j)
        lhs += m * (r - l) * ceil_div(ss[j], m)
        rhs = r * ss[j] + (t if t is not None else 0)
        vals.append(lhs - rhs)
    return vals


def semigroup_member(curve, places: PlaceTuple, coords: Sequence[int]) -> bool:
    """Whether coords is realized as a pole-order tuple at the places."""
    places.validate(curve.r)
    ss, t = _split_coords(places, coords)
    if any(c < 0 for c in coords):
        return False
    return all(v <= 0 for v in _member_conditions(curve, ss, t))


def pure_gap(curve, places: PlaceTuple, coords: Sequence[int]) -> bool:
    """Whether coords is a pure gap: every inequality strictly reversed."""
    places.validate(curve.r)
    ss, t = _split_coords(places, coords)
    if any(c < 1 for c in coords):
        raise NonPositiveCoordinateError("pure gap coordinates must be >= 1")
    if places.arity() == 1:
        # For a single place a pure gap is just a gap.
        return not semigroup_member(curve, places, coords)
    return all(v > 0 for v in _member_conditions(curve, ss, t))


def one_point_gaps(curve, which: str, limit: int) -> List[int]:
    """Sorted gap numbers at P_1 or P_inf up to the value `limit`."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    m, r = curve.m, curve.r
    gaps = set()
    jmax = m - 1 - m // r
    if which == "P1":
        for j in range(1, jmax + 1):
            for k in range(0, r - 1 - (r * j) // m):
                gaps.add(m * k + j)
    elif which == "Pinf":
        for j in range(1, jmax + 1):
            for k in range(ceil_div(r * j, m), r):
                gaps.add(m * k - r * j)
    else:
        raise ValueError(f"unknown place selector {which!r}")
    return sorted(x for x in gaps if 1 <= x <= limit)


def make_gap_box(curve, places: PlaceTuple, base: Sequence[int], widths: Sequence[int]) -> GapBox:
    """Build a GapBox, verifying every integer point is a pure gap."""
    box = GapBox(places, tuple(base), tuple(widths))
    if len(box.base) != places.arity() or len(box.widths) != places.arity():
        raise BadArityError("base/widths arity does not match the place tuple")
    if any(b < 1 for b in box.base) or any(w < 0 for w in box.widths):
        raise ValueError("base coordinates must be >= 1 and widths >= 0")
    for pt in box.points():
        if not pure_gap(curve, places, pt):
            raise ValueError(f"{pt} is not a pure gap; box invalid")
    return box


def box_bound_value(curve, box: GapBox) -> int:
    """The designed-distance value deg(G) - (2g - 2) + sum(widths) + arity."""
    deg = sum(2 * b + w - 1 for b, w in zip(box.base, box.widths))
    return deg - (2 * curve.g - 2) + sum(box.widths) + box.places.arity()


def box_search(curve, places: PlaceTuple, search_bound: int) -> Optional[Tuple[GapBox, Divisor]]:
    """Best pure-gap box with coordinates in [1, search_bound].

    Maximizes the induced designed-distance value; ties go to the
    smallest induced degree, then the lexicographically largest base
    (which favors the extreme gap over its mirror images), then the
    largest widths.
    """
    places.validate(curve.r)
    d = places.arity()
    if curve.g == 0:
        return None
    gaps = set()
    for pt in itertools.product(range(1, search_bound + 1), repeat=d):
        if pure_gap(curve, places, pt):
            gaps.add(pt)
    if not gaps:
        return None

    def box_ok(lo: Tuple[int, ...], hi: Tuple[int, ...]) -> bool:
        return all(pt in gaps
                   for pt in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))))

    best = None
    best_key = None
    for hi in gaps:
        for lo in gaps:
            if not all(a <= b for a, b in zip(lo, hi)):
                continue
            if not box_ok(lo, hi):
                continue
            widths = tuple(b - a for a, b in zip(lo, hi))
            box = GapBox(places, lo, widths)
            deg = sum(2 * a + w - 1 for a, w in zip(lo, widths))
            value = deg - (2 * curve.g - 2) + sum(widths) + d
            key = (-value, deg, tuple(-c for c in lo), tuple(-w for w in widths))
            if best_key is None or key < best_key:
                best_key = key
                best = box
    assert best is not None
    return best, best.induced_divisor(curve.r)


def floor_divisor(curve, H: Divisor) -> Divisor:
    """The unique minimum-degree divisor with the same Riemann-Roch space.

    Coordinate-wise maxima of pole orders over the enumerated basis;
    defined only when ell(H) > 0.
    """
    pts = omega_enumerate(curve, H)
    if not pts:
        raise EmptyRiemannRochSpaceError("ell(H) = 0; floor undefined")
    m, r = curve.m, curve.r
    s1 = max(-p.i for p in pts)
    s_rest = [max(-p.i - m * p.j[mu] for p in pts) for mu in range(r - 1)]
    t = max(r * p.i + m * sum(p.j) for p in pts)
    return Divisor(tuple([s1] + s_rest), t)


def floor_via_gcd(curve, H: Divisor) -> Divisor:
    """Floor as minus the gcd of the basis monomial divisors (oracle route)."""
    divs = [monomial_divisor(curve, pt) for pt in omega_enumerate(curve, H)]
    if not divs:
        raise EmptyRiemannRochSpaceError("ell(H) = 0; floor undefined")
    s = tuple(-min(d.s[mu] for d in divs) for mu in range(curve.r))
    t = -min(d.t for d in divs)
    return Divisor(s, t)
