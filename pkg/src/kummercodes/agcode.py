"""Construction of the evaluation code C_L and its dual C_Omega.

C_L evaluates the monomial basis of L(G) at the chosen rational places;
C_Omega is realized as the linear-algebra dual (null space) of C_L.
Designed minimum-distance lower bounds are attached from the Goppa
estimates, pure-gap boxes and floor pairs, and a brute-force weight
enumerator verifies them where the codebook is small enough.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import List, Optional, Sequence, Tuple

from .curve import KummerCurve, Place
from .gf import Matrix
from .rrlattice import Divisor, evaluate_monomial, omega_enumerate
from .weierstrass import GapBox, box_bound_value, floor_divisor, pure_gap


class PlaceInSupportError(ValueError):
    pass


class BudgetExceededError(ValueError):
    pass


class InconsistentDivisorError(ValueError):
    pass


DEFAULT_BUDGET = 1 << 24


def in_support(G: Divisor, place: Place) -> bool:
    if place.kind == "ramified":
        return G.s[place.mu - 1] != 0
    if place.kind == "infinity":
        return G.t != 0
    return False


def evaluation_places(curve: KummerCurve, G: Divisor,
                      n: Optional[int] = None, seed: Optional[int] = None) -> List[Place]:
    """Evaluation set: rational places outside supp(G), canonical order.

    With n given, places are dropped from the end of the canonical
    ordering (highest codec order first); a seed instead selects a
    reproducible pseudo-random subset.
    """
    pool = [p for p in curve.places() if not in_support(G, p)]
    if n is None:
        return pool
    if n > len(pool):
        raise ValueError(f"asked for n={n} places but only {len(pool)} available")
    if seed is None:
        return pool[:n]
    chosen = random.Random(seed).sample(range(len(pool)), n)
    return [pool[i] for i in sorted(chosen)]


@dataclass
class LinearCode:
    """[n, k] code over GF(q) given by a full-rank generator in RREF."""

    generator: Matrix
    n: int
    k: int
    bounds: List[Tuple[str, int]] = dc_field(default_factory=list)

    @property
    def field(self):
        return self.generator.field

    def add_bound(self, name: str, value: int) -> None:
        self.bounds.append((name, value))

    def export_text(self) -> str:
        """Wire format: header `n k q`, then k rows of n codec integers."""
        lines = [f"{self.n} {self.k} {self.field.q}"]
        lines.extend(" ".join(str(v) for v in row) for row in self.generator.rows)
        return "\n".join(lines) + "\n"


def _check_evaluation_set(G: Divisor, places: Sequence[Place]) -> None:
    if len(set(places)) != len(places):
        raise ValueError("evaluation places must be pairwise distinct")
    for p in places:
        if in_support(G, p):
            raise PlaceInSupportError(f"place {p} lies in supp(G)")


def build_cl(curve: KummerCurve, G: Divisor, places: Sequence[Place]) -> LinearCode:
    """The evaluation code C_L(D, G) with a canonical RREF generator."""
    _check_evaluation_set(G, places)
    rows = []
    for pt in omega_enumerate(curve, G):
        rows.append([evaluate_monomial(curve, pt, pl) for pl in places])
    n = len(places)
    raw = Matrix(curve.field, rows, n)
    rank, red, _ = raw.rref()
    gen = Matrix(curve.field, red.rows[:rank], n)
    code = LinearCode(gen, n, rank)
    if G.degree < n:
        code.add_bound("goppa_L", n - G.degree)
    return code


def build_comega(curve: KummerCurve, G: Divisor, places: Sequence[Place]) -> LinearCode:
    """C_Omega as the dual of C_L; checks the dimension law when it applies."""
    cl = build_cl(curve, G, places)
    gen = cl.generator.nullspace()
    n = cl.n
    k = n - cl.k
    if 2 * curve.g - 2 < G.degree < n:
        expected = n + curve.g - 1 - G.degree
        if k != expected:
            raise AssertionError(
                f"dimension law violated: k_omega={k}, expected {expected}")
    code = LinearCode(gen, n, k)
    if G.degree > 2 * curve.g - 2:
        code.add_bound("goppa_omega", G.degree - (2 * curve.g - 2))
    return code


def designed_distance(curve: KummerCurve, G: Divisor, method: str, *,
                      n: Optional[int] = None,
                      box: Optional[GapBox] = None,
                      H: Optional[Divisor] = None) -> int:
    """A proven lower bound on the minimum distance for the given divisor."""
    two_g_2 = 2 * curve.g - 2
    if method == "goppa_L":
        if n is None or G.degree >= n:
            raise InconsistentDivisorError("goppa_L needs deg(G) < n")
        return n - G.degree
    if method == "goppa_omega":
        return G.degree - two_g_2
    if method == "pure_gap_box":
        if box is None:
            raise InconsistentDivisorError("pure_gap_box needs a box")
        for pt in box.points():
            if not pure_gap(curve, box.places, pt):
                raise InconsistentDivisorError(f"{pt} in the box is not a pure gap")
        if box.induced_divisor(curve.r) != G:
            raise InconsistentDivisorError("box does not induce G")
        return box_bound_value(curve, box)
    if method == "floor_pair":
        if H is None:
            raise InconsistentDivisorError("floor_pair needs the divisor H")
        if not H.is_effective():
            raise InconsistentDivisorError("H must be effective")
        if H + floor_divisor(curve, H) != G:
            raise InconsistentDivisorError("G != H + floor(H)")
        return 2 * H.degree - two_g_2
    raise ValueError(f"unknown method {method!r}")


def brute_force_distance(code: LinearCode, budget: int = DEFAULT_BUDGET) -> Optional[int]:
    """Exact minimum distance by enumerating all q^k - 1 nonzero codewords.

    Messages run in codec order as a base-q odometer; each tick adds a
    precomputed delta row (next scalar multiple minus the current one),
    so the codeword is updated in O(n) per message.  Returns None for
    the zero-dimensional code, which has no distance.
    """
    F = code.field
    q = F.q
    k = code.k
    if k == 0:
        return None
    total = q ** k
    if total - 1 > budget:
        raise BudgetExceededError(f"{total - 1} codewords exceed budget {budget}")
    n = code.n
    add = F.add
    mul = F.mul
    sub = F.sub
    # delta[d][a]: row d scaled by decode((a+1) mod q) - decode(a).
    delta = []
    for row in code.generator.rows:
        per_digit = []
        for a in range(q):
            step = sub((a + 1) % q, a)
            per_digit.append([mul(step, v) for v in row])
        delta.append(per_digit)
    cw = [0] * n
    digits = [0] * k
    best = n + 1
    for _ in range(total - 1):
        d = 0
        while True:
            step_row = delta[d][digits[d]]
            for idx in range(n):
                cw[idx] = add(cw[idx], step_row[idx])
            digits[d] += 1
            if digits[d] < q:
                break
            digits[d] = 0
            d += 1
        w = n - cw.count(0)
        if w < best:
            best = w
    return best


def duality_holds(cl: LinearCode, comega: LinearCode) -> bool:
    """G_L * G_Omega^T = 0 over the common field."""
    return cl.generator.mul_matrix(comega.generator.transpose()).is_zero()
