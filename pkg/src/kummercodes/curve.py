"""Validated model of the Kummer extension y^m = f(x)^lambda.

f(x) = prod (x - alpha_i) with r distinct roots in the base field and
gcd(m, r*lambda) = 1, so the places over the roots and the place at
infinity are totally ramified.  The curve object carries the genus and
the Bezout coefficients that normalize the auxiliary function
z = y^A f(x)^B with divisor P_1 + ... + P_r - r*P_inf.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .gf import FiniteField
from .rrlattice import Divisor


class GcdViolationError(ValueError):
    pass


class CharacteristicDividesMError(ValueError):
    pass


class DuplicateRootsError(ValueError):
    pass


class DoesNotSplitError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Place:
    """A rational place: P_inf, a ramified P_mu, or an affine point.

    The sort order (infinity, then ramified by mu, then affine by the
    codec integers of x then y) is the canonical place ordering used by
    every listing and matrix in the package.
    """

    kind_rank: int
    mu: int = 0
    x: int = 0
    y: int = 0

    @property
    def kind(self) -> str:
        return ("infinity", "ramified", "affine")[self.kind_rank]

    @staticmethod
    def infinity() -> "Place":
        return Place(0)

    @staticmethod
    def ramified(mu: int) -> "Place":
        return Place(1, mu=mu)

    @staticmethod
    def affine(x: int, y: int) -> "Place":
        return Place(2, x=x, y=y)

    def __str__(self) -> str:
        if self.kind_rank == 0:
            return "Pinf"
        if self.kind_rank == 1:
            return f"P{self.mu}"
        return f"({self.x},{self.y})"


class KummerCurve:
    """y^m = f(x)^lambda over a finite field, with explicit roots of f."""

    def __init__(self, field: FiniteField, m: int, lam: int, roots: Sequence[int]):
        roots = [field.check(a) for a in roots]
        if not roots:
            raise ValueError("f needs at least one root")
        if len(set(roots)) != len(roots):
            raise DuplicateRootsError("roots of f must be pairwise distinct")
        if m < 2:
            raise ValueError(f"m={m} must be >= 2")
        if lam < 1:
            raise ValueError(f"lambda={lam} must be >= 1")
        r = len(roots)
        if math.gcd(m, r * lam) != 1:
            raise GcdViolationError(f"gcd(m, r*lambda) = gcd({m}, {r * lam}) != 1")
        if m % field.p == 0:
            raise CharacteristicDividesMError(f"characteristic {field.p} divides m={m}")

        self.field = field
        self.m = m
        self.lam = lam
        self.roots = tuple(roots)
        self.r = r
        self.g = (r - 1) * (m - 1) // 2
        assert (r - 1) * (m - 1) % 2 == 0

        # A*lambda + B*m = 1 with A the least nonnegative residue, and
        # likewise a*r + b*m = 1; pinning A and a makes z and the basis
        # monomials byte-identical across runs.
        self.A = pow(lam, -1, m)
        self.B = (1 - self.A * lam) // m
        self.a = pow(r, -1, m)
        self.b = (1 - self.a * r) // m
        assert self.A * lam + self.B * m == 1
        assert self.a * r + self.b * m == 1

    def f_at(self, x0: int) -> int:
        """f(x0) = prod (x0 - alpha_i)."""
        F = self.field
        val = 1
        for alpha in self.roots:
            val = F.mul(val, F.sub(x0, alpha))
        return val

    def genus(self) -> int:
        return self.g

    def num_places(self) -> int:
        return len(self.places())

    def places(self) -> List[Place]:
        """All rational places in canonical order (cached)."""
        cached = getattr(self, "_places", None)
        if cached is None:
            cached = self._enumerate_places()
            self._places = cached
        return cached

    def _enumerate_places(self) -> List[Place]:
        F = self.field
        out = [Place.infinity()]
        out.extend(Place.ramified(mu) for mu in range(1, self.r + 1))
        for x0 in F.elements():
            fx = self.f_at(x0)
            if fx == 0:
                continue
            target = F.pow(fx, self.lam)
            for y0 in F.elements():
                if F.pow(y0, self.m) == target:
                    out.append(Place.affine(x0, y0))
        return out

    def on_curve(self, place: Place) -> bool:
        """Re-validate a place against the curve equation."""
        if place.kind != "affine":
            return place.kind == "infinity" or 1 <= place.mu <= self.r
        fx = self.f_at(place.x)
        F = self.field
        return fx != 0 and F.pow(place.y, self.m) == F.pow(fx, self.lam)

    def principal_divisor(self, item: str, index: int = 0) -> Divisor:
        """Divisor of x - alpha_index, y, f, or z."""
        r, m, lam = self.r, self.m, self.lam
        if item == "x-alpha":
            if not 1 <= index <= r:
                raise IndexError(f"index {index} out of [1, {r}]")
            return Divisor.make(r, {index: m}, -m)
        if item == "y":
            return Divisor(tuple([lam] * r), -r * lam)
        if item == "f":
            return Divisor(tuple([m] * r), -r * m)
        if item == "z":
            return Divisor(tuple([1] * r), -r)
        raise ValueError(f"unknown function {item!r}")

    def __repr__(self) -> str:
        lam = f"^{self.lam}" if self.lam != 1 else ""
        return f"KummerCurve(y^{self.m} = f(x){lam}, r={self.r}, g={self.g} over {self.field!r})"


def find_roots(field: FiniteField, f_coeffs: Sequence[int]) -> Tuple[int, ...]:
    """Roots of a monic f that splits with distinct roots, sorted by codec.

    Rejects any other polynomial: the curve model requires all roots of
    f to be simple and rational.
    """
    coeffs = list(f_coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2:
        raise DoesNotSplitError("f must have degree >= 1")
    if coeffs[-1] != 1:
        raise DoesNotSplitError("f must be monic")
    deg = len(coeffs) - 1
    roots = sorted(x for x in field.elements() if field.poly_eval(coeffs, x) == 0)
    if len(roots) != deg:
        raise DoesNotSplitError(
            f"f has {len(roots)} distinct rational roots but degree {deg}")
    return tuple(roots)
