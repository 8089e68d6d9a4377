"""Exact arithmetic in GF(p^e) and dense linear algebra over it.

Field elements are represented as plain integers in [0, q): the base-p
digits of the integer (least significant first) are the coefficients of
the element in the polynomial basis defined by a user-supplied monic
irreducible modulus.  This integer form is the "codec integer" used in
every file format, so encode/decode are near-trivial and round-trip by
construction.

Multiplication, inversion and powers go through discrete log tables
built once per field from a primitive element; addition is table-backed
for small fields and digitwise otherwise.  The supported range is
q <= 2^16, which keeps every table exact and small.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple


class NotPrimeError(ValueError):
    pass


class NotIrreducibleError(ValueError):
    pass


class BadModulusError(ValueError):
    pass


class FieldMismatchError(ValueError):
    pass


MAX_Q = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n: int) -> List[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomial helpers over GF(p), coefficients low-degree first --------

def _poly_trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> List[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _poly_divmod(prod, mod, p)[1]


def _poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> Tuple[List[int], List[int]]:
    rem = list(a)
    _poly_trim(rem)
    div = _poly_trim(list(b))
    if not div:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(div[-1], p - 2, p)
    quot = [0] * max(0, len(rem) - len(div) + 1)
    while len(rem) >= len(div):
        shift = len(rem) - len(div)
        c = rem[-1] * inv_lead % p
        quot[shift] = c
        for i, di in enumerate(div):
            rem[shift + i] = (rem[shift + i] - c * di) % p
        _poly_trim(rem)
    return quot, rem


def _poly_is_irreducible(mod: Sequence[int], p: int) -> bool:
    """Exhaustive trial division by all monic polynomials of degree <= e/2."""
    e = len(mod) - 1
    if e == 1:
        return True
    for deg in range(1, e // 2 + 1):
        for code in range(p ** deg):
            trial = []
            c = code
            for _ in range(deg):
                trial.append(c % p)
                c //= p
            trial.append(1)
            if not _poly_divmod(mod, trial, p)[1]:
                return False
    return True


class FiniteField:
    """The field GF(p^e) with a pinned polynomial-basis modulus.

    Immutable after construction; all operations are pure functions of
    their integer arguments, so a field object is safe to share.
    """

    def __init__(self, p: int, e: int, modulus: Sequence[int]):
        if not is_prime(p):
            raise NotPrimeError(f"p={p} is not prime")
        if e < 1:
            raise BadModulusError(f"extension degree e={e} must be >= 1")
        modulus = list(modulus)
        if len(modulus) != e + 1:
            raise BadModulusError(
                f"modulus needs {e + 1} coefficients for degree {e}, got {len(modulus)}")
        if any(not 0 <= c < p for c in modulus):
            raise BadModulusError("modulus coefficients out of [0, p)")
        if modulus[-1] != 1:
            raise BadModulusError("modulus must be monic")
        q = p ** e
        if q > MAX_Q:
            raise BadModulusError(f"q={q} exceeds supported range 2^16")
        if not _poly_is_irreducible(modulus, p):
            raise NotIrreducibleError(f"modulus {modulus} is reducible over GF({p})")

        self.p = p
        self.e = e
        self.q = q
        self.modulus = tuple(modulus)
        self._build_tables()

    # -- construction helpers -------------------------------------------

    def _build_tables(self) -> None:
        p, e, q = self.p, self.e, self.q
        mod = list(self.modulus)

        def raw_mul(a: int, b: int) -> int:
            return self._encode(_poly_mulmod(self._digits(a), self._digits(b), mod, p))

        gen = self._find_generator(raw_mul)
        exp = [0] * max(q - 1, 1)
        log = [0] * q
        v = 1
        for i in range(q - 1):
            exp[i] = v
            log[v] = i
            v = raw_mul(v, gen)
        self.generator = gen
        self._exp = exp
        self._log = log

        if q <= 1 << 8:
            self._add_table = [
                [self._add_digitwise(a, b) for b in range(q)] for a in range(q)
            ]
        else:
            self._add_table = None

    def _find_generator(self, raw_mul) -> int:
        q = self.q
        if q == 2:
            return 1
        factors = prime_factors(q - 1)

        def raw_pow(a: int, n: int) -> int:
            acc, base = 1, a
            while n:
                if n & 1:
                    acc = raw_mul(acc, base)
                base = raw_mul(base, base)
                n >>= 1
            return acc

        for c in range(2, q):
            if all(raw_pow(c, (q - 1) // f) != 1 for f in factors):
                return c
        raise AssertionError("no primitive element found")  # pragma: no cover

    # -- codec ----------------------------------------------------------

    def _digits(self, a: int) -> List[int]:
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        _poly_trim(out)
        return out

    def _encode(self, coeffs: Iterable[int]) -> int:
        a = 0
        for c in reversed(list(coeffs)):
            a = a * self.p + c
        return a

    def coeffs(self, a: int) -> Tuple[int, ...]:
        """Polynomial-basis coefficients of a, low degree first, length e."""
        self.check(a)
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.e:
            raise ValueError(f"too many coefficients for GF({self.p}^{self.e})")
        a = self._encode(c % self.p for c in coeffs)
        return a

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element code of GF({self.q})")
        return a

    def elements(self) -> range:
        return range(self.q)

    # -- arithmetic ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_digitwise(a, b)

    def _add_digitwise(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        out = 0
        mult = 1
        for _ in range(self.e):
            out += (a + b) % p * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        out = 0
        mult = 1
        for _ in range(self.e):
            out += (-a) % p * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        """a^n for any integer n; negative n uses the inverse."""
        if a == 0:
            if n > 0:
                return 0
            if n == 0:
                return 1
            raise ZeroDivisionError("0 to a negative power")
        return self._exp[self._log[a] * n % (self.q - 1)]

    def poly_eval(self, coeffs: Sequence[int], x: int) -> int:
        """Evaluate a polynomial (codec-integer coefficients, low first) at x."""
        acc = 0
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, x), c)
        return acc

    def same_as(self, other: "FiniteField") -> bool:
        return (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"


class Matrix:
    """Dense row-major matrix of codec integers over one FiniteField."""

    def __init__(self, field: FiniteField, rows: Sequence[Sequence[int]], ncols: int | None = None):
        self.field = field
        self.rows = [list(r) for r in rows]
        if self.rows:
            self.ncols = len(self.rows[0])
            if any(len(r) != self.ncols for r in self.rows):
                raise ValueError("ragged rows")
        else:
            self.ncols = 0 if ncols is None else ncols
        self.nrows = len(self.rows)

    def _check_field(self, other: "Matrix") -> None:
        if not self.field.same_as(other.field):
            raise FieldMismatchError("matrices over different fields")

    def rref(self) -> Tuple[int, "Matrix", List[int]]:
        """Reduced row echelon form.

        Pivot rule is fixed (scan columns left to right, rows top-down)
        so the result, and hence every derived basis, is deterministic.
        Returns (rank, rref matrix, pivot column list).
        """
        F = self.field
        rows = [list(r) for r in self.rows]
        pivots: List[int] = []
        prow = 0
        for col in range(self.ncols):
            sel = None
            for r in range(prow, len(rows)):
                if rows[r][col] != 0:
                    sel = r
                    break
            if sel is None:
                continue
            rows[prow], rows[sel] = rows[sel], rows[prow]
            inv = F.inv(rows[prow][col])
            rows[prow] = [F.mul(inv, v) for v in rows[prow]]
            for r in range(len(rows)):
                if r != prow and rows[r][col] != 0:
                    c = rows[r][col]
                    rows[r] = [F.sub(v, F.mul(c, w)) for v, w in zip(rows[r], rows[prow])]
            pivots.append(col)
            prow += 1
            if prow == len(rows):
                break
        return prow, Matrix(F, rows, self.ncols), pivots

    def rank(self) -> int:
        return self.rref()[0]

    def nullspace(self) -> "Matrix":
        """Basis of {v : M v^T = 0}, rows in reduced echelon order."""
        F = self.field
        rank, red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for fc in free:
            v = [0] * self.ncols
            v[fc] = 1
            for i, pc in enumerate(pivots):
                v[pc] = F.neg(red.rows[i][fc])
            basis.append(v)
        return Matrix(F, basis, self.ncols)

    def mul_matrix(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        F = self.field
        ot = list(zip(*other.rows)) if other.rows else []
        out = []
        for row in self.rows:
            new = []
            for col in ot:
                acc = 0
                for a, b in zip(row, col):
                    if a and b:
                        acc = F.add(acc, F.mul(a, b))
                new.append(acc)
            out.append(new)
        return Matrix(F, out, other.ncols)

    def mul_vector(self, v: Sequence[int]) -> List[int]:
        F = self.field
        out = []
        for row in self.rows:
            acc = 0
            for a, b in zip(row, v):
                if a and b:
                    acc = F.add(acc, F.mul(a, b))
            out.append(acc)
        return out

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(map(list, zip(*self.rows))) if self.rows else [],
                      self.nrows)

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.rows for v in row)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.field.same_as(other.field)
                and self.rows == other.rows and self.ncols == other.ncols)

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols} over {self.field!r})"


def identity(field: FiniteField, n: int) -> Matrix:
    return Matrix(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])
