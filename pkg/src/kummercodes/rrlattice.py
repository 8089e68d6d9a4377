"""Riemann-Roch spaces as lattice point sets.

For a divisor supported on the distinguished places P_1..P_r, P_inf of
the curve y^m = f(x)^lambda, the space L(G) has a monomial basis indexed
by integer tuples (i, j_2..j_r): the exponents of z and of the linear
factors x - alpha_mu.  Enumerating those tuples gives the dimension, the
basis, the floor of the divisor and the evaluation maps used to build
codes, all with exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, List, Sequence, Tuple

if TYPE_CHECKING:  # pragma: no cover
    from .curve import KummerCurve, Place


class PoleAtPlaceError(ValueError):
    pass


class UnsupportedPlaceError(ValueError):
    pass


def ceil_div(a: int, b: int) -> int:
    """ceil(a/b) for integers, b > 0."""
    return -((-a) // b)


@dataclass(frozen=True)
class Divisor:
    """Integer divisor s_1 P_1 + ... + s_r P_r + t P_inf."""

    s: Tuple[int, ...]
    t: int

    @staticmethod
    def make(r: int, coeffs: dict | None = None, t: int = 0) -> "Divisor":
        """Divisor from {place index (1-based): coefficient}; index 0 = P_inf."""
        s = [0] * r
        for mu, c in (coeffs or {}).items():
            s[mu - 1] = c
        return Divisor(tuple(s), t)

    @property
    def degree(self) -> int:
        return sum(self.s) + self.t

    def __add__(self, other: "Divisor") -> "Divisor":
        return Divisor(tuple(a + b for a, b in zip(self.s, other.s)), self.t + other.t)

    def __sub__(self, other: "Divisor") -> "Divisor":
        return Divisor(tuple(a - b for a, b in zip(self.s, other.s)), self.t - other.t)

    def __neg__(self) -> "Divisor":
        return Divisor(tuple(-a for a in self.s), -self.t)

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.s) and self.t >= 0

    def leq(self, other: "Divisor") -> bool:
        return all(a <= b for a, b in zip(self.s, other.s)) and self.t <= other.t

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.s) + f" {self.t}"


@dataclass(frozen=True)
class LatticePoint:
    """Exponent tuple of the monomial z^i prod (x-alpha_mu)^{j_mu}."""

    i: int
    j: Tuple[int, ...]


@dataclass(frozen=True)
class ThetaPoint:
    """Exponent tuple of the alternative monomial beta^u prod h_mu^{v_mu}."""

    u: int
    v: Tuple[int, ...]


def omega_enumerate(curve: "KummerCurve", G: Divisor) -> List[LatticePoint]:
    """All lattice points of the basis index set for L(G), sorted by i.

    For each i >= -s_1 the remaining exponents are forced by
    j_mu = ceil((-i - s_mu)/m); the point survives iff the pole order at
    infinity, r*i + m*sum(j), is at most t.  That pole order gains
    exactly m over any m consecutive values of i, so the scan stops once
    m consecutive candidates fail.
    """
    m, r = curve.m, curve.r
    s, t = G.s, G.t
    if len(s) != r:
        raise ValueError(f"divisor has {len(s)} finite coefficients, curve has r={r}")
    points = []
    i = -s[0]
    misses = 0
    while misses < m:
        js = tuple(ceil_div(-i - s[mu], m) for mu in range(1, r))
        if r * i + m * sum(js) <= t:
            points.append(LatticePoint(i, js))
            misses = 0
        else:
            misses += 1
        i += 1
    return points


def dimension(curve: "KummerCurve", G: Divisor) -> int:
    """ell(G) = number of basis lattice points."""
    return len(omega_enumerate(curve, G))


def theta_to_lattice(curve: "KummerCurve", pt: ThetaPoint) -> LatticePoint:
    a, b, m = curve.a, curve.b, curve.m
    vsum = sum(pt.v)
    i = -(a + b * m) * pt.u - m * vsum
    j = tuple(b * pt.u + vsum + v for v in pt.v)
    return LatticePoint(i, j)


def lattice_to_theta(curve: "KummerCurve", pt: LatticePoint) -> ThetaPoint:
    a, b, m, r = curve.a, curve.b, curve.m, curve.r
    jsum = sum(pt.j)
    u = -r * pt.i - m * jsum
    v = tuple(b * pt.i - a * jsum + j for j in pt.j)
    return ThetaPoint(u, v)


def theta_enumerate(curve: "KummerCurve", G: Divisor) -> List[ThetaPoint]:
    """Image of the basis index set under the (u, v) change of variables."""
    return [lattice_to_theta(curve, pt) for pt in omega_enumerate(curve, G)]


def increment_predicate(curve: "KummerCurve", G: Divisor, at: str) -> bool:
    """Whether raising the coefficient at `at` ("P1" or "Pinf") raised ell.

    True iff ell(G) = ell(G - P) + 1 for the named place, evaluated by
    closed-form ceiling inequalities rather than by counting.
    """
    m, r = curve.m, curve.r
    s, t = G.s, G.t
    if at == "P1":
        lhs = m * sum(ceil_div(s[0] - s[mu], m) for mu in range(1, r))
        return lhs <= t + r * s[0]
    if at == "Pinf":
        a, b = curve.a, curve.b
        lhs = m * sum(ceil_div(-a * t - s[mu], m) for mu in range(1, r))
        return lhs <= s[0] + (a + b * m) * t
    raise ValueError(f"unknown place selector {at!r}")


def monomial_divisor(curve: "KummerCurve", pt) -> Divisor:
    """Principal divisor of the basis monomial indexed by pt (degree 0)."""
    if isinstance(pt, ThetaPoint):
        pt = theta_to_lattice(curve, pt)
    m, r = curve.m, curve.r
    s = [pt.i] + [pt.i + m * j for j in pt.j]
    return Divisor(tuple(s), -(r * pt.i + m * sum(pt.j)))


def evaluate_monomial(curve: "KummerCurve", pt, place: "Place") -> int:
    """Value of the basis monomial at a rational place (codec integer).

    Requires the monomial to have no pole there.  At the ramified places
    and at infinity the value comes from the substitution
    x - alpha_mu = z^m * prod_{nu != mu} (x - alpha_nu)^{-1}, which
    rewrites the monomial so its local valuation is explicit.
    """
    if isinstance(pt, ThetaPoint):
        pt = theta_to_lattice(curve, pt)
    F = curve.field
    m = curve.m
    roots = curve.roots
    i, js = pt.i, pt.j

    if place.kind == "affine":
        z0 = F.mul(F.pow(place.y, curve.A), F.pow(curve.f_at(place.x), curve.B))
        val = F.pow(z0, i)
        for j, alpha in zip(js, roots[1:]):
            if j:
                val = F.mul(val, F.pow(F.sub(place.x, alpha), j))
        return val

    if place.kind == "ramified":
        mu = place.mu
        if mu == 1:
            w = i
            if w < 0:
                raise PoleAtPlaceError(f"monomial has a pole at P_{mu}")
            if w > 0:
                return 0
            val = 1
            for j, alpha in zip(js, roots[1:]):
                if j:
                    val = F.mul(val, F.pow(F.sub(roots[0], alpha), j))
            return val
        w = i + m * js[mu - 2]
        if w < 0:
            raise PoleAtPlaceError(f"monomial has a pole at P_{mu}")
        if w > 0:
            return 0
        jmu = js[mu - 2]
        alpha_mu = roots[mu - 1]
        val = F.pow(F.sub(alpha_mu, roots[0]), -jmu)
        for nu in range(2, curve.r + 1):
            if nu == mu:
                continue
            exp = js[nu - 2] - jmu
            if exp:
                val = F.mul(val, F.pow(F.sub(alpha_mu, roots[nu - 1]), exp))
        return val

    if place.kind == "infinity":
        # In (u, v) form the monomial is beta^u times ratios h_mu that
        # are 1 at infinity, and beta vanishes to order 1 there.
        w = curve.r * i + m * sum(js)  # pole order at P_inf; u = -w
        if w > 0:
            raise PoleAtPlaceError("monomial has a pole at P_inf")
        return 1 if w == 0 else 0

    raise UnsupportedPlaceError(f"cannot evaluate at place kind {place.kind!r}")
