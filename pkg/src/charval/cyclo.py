"""Exact arithmetic in cyclotomic fields.

A value is stored as its coordinate vector over the power basis
1, z, z^2, ..., z^(phi(n)-1) of Q(zeta_n), where n is the smallest
conductor containing the value.  Coordinates are Fractions, so every
operation is exact; equality of values is equality of (conductor,
coordinates) after canonicalization.  Rational numbers are the
conductor-1 case and take fast paths throughout.
"""

from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from functools import lru_cache


class NotCoprime(ValueError):
    """Galois substitution exponent shares a factor with the conductor."""


def _polydiv_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Exact division of integer polynomials, coefficients ascending.
    # den is monic (true for every cyclotomic polynomial).
    num = list(num)
    dd = len(den) - 1
    qd = len(num) - 1 - dd
    quot = [0] * (qd + 1)
    for k in range(qd, -1, -1):
        c = num[dd + k]
        quot[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, ascending.

    Computed by exact division: x^n - 1 divided by the product of the
    cyclotomic polynomials of all proper divisors of n.
    """
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def phi(n: int) -> int:
    """Euler totient, read off as the degree of the cyclotomic polynomial."""
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _prime_factors(n: int) -> tuple[int, ...]:
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
    return tuple(out)


@lru_cache(maxsize=None)
def _power_rows(n: int) -> tuple[tuple[int, ...], ...]:
    # Row t is the coordinate vector of zeta_n^t over the power basis.
    # Enough rows for embedding (t < n) and for reducing a product of two
    # reduced polynomials (t <= 2*phi - 2).
    k = phi(n)
    length = max(n, 2 * k - 1)
    cp = cyclotomic_polynomial(n)
    rows: list[tuple[int, ...]] = []
    cur = [1] + [0] * (k - 1)
    for _ in range(length):
        rows.append(tuple(cur))
        lead = cur[k - 1]
        nxt = [0] + cur[:-1]
        if lead:
            # x^k = -(cp[0] + cp[1] x + ... + cp[k-1] x^(k-1))
            for i in range(k):
                nxt[i] -= lead * cp[i]
        cur = nxt
    return tuple(rows)


@lru_cache(maxsize=None)
def _embed_rows(n: int, m: int) -> tuple[tuple[int, ...], ...]:
    # Coordinates of each conductor-n basis vector zeta_n^j inside Q(zeta_m).
    if m % n:
        raise ValueError(f"{n} does not divide {m}")
    step = m // n
    rows_m = _power_rows(m)
    return tuple(rows_m[j * step] for j in range(phi(n)))


@lru_cache(maxsize=None)
def _descent_solver(n: int, d: int):
    # Pivot data for rewriting a conductor-n coordinate vector over the
    # embedded power basis of Q(zeta_d), d a proper divisor of n.
    # Returns (basis columns as rows, pivot row indices, inverse of the
    # pivot submatrix as Fractions).
    cols = _embed_rows(d, n)  # phi(d) vectors of length phi(n)
    kn, kd = phi(n), phi(d)
    # Gaussian elimination on the kn x kd matrix to locate kd pivot rows.
    work = [[Fraction(cols[j][i]) for j in range(kd)] for i in range(kn)]
    pivots: list[int] = []
    for col in range(kd):
        pr = None
        for i in range(kn):
            if i not in pivots and work[i][col]:
                pr = i
                break
        if pr is None:
            raise ArithmeticError("embedded basis is rank-deficient")
        pivots.append(pr)
        inv = 1 / work[pr][col]
        work[pr] = [x * inv for x in work[pr]]
        for i in range(kn):
            if i != pr and work[i][col]:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[pr])]
    sub = [[Fraction(cols[j][i]) for j in range(kd)] for i in pivots]
    return cols, tuple(pivots), _invert_fraction_matrix(sub)


def _invert_fraction_matrix(mat: list[list[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    k = len(mat)
    aug = [list(row) + [Fraction(i == j) for j in range(k)] for i, row in enumerate(mat)]
    for col in range(k):
        pr = next(i for i in range(col, k) if aug[i][col])
        aug[col], aug[pr] = aug[pr], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(k):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return tuple(tuple(row[k:]) for row in aug)


def _try_descend(n: int, d: int, coeffs: tuple[Fraction, ...]) -> tuple[Fraction, ...] | None:
    cols, pivots, inv = _descent_solver(n, d)
    kd = phi(d)
    x = [sum(inv[i][j] * coeffs[pivots[j]] for j in range(kd)) for i in range(kd)]
    # Full verification: the candidate coordinates must reproduce every entry.
    for i in range(phi(n)):
        if sum(x[j] * cols[j][i] for j in range(kd)) != coeffs[i]:
            return None
    return tuple(x)


def _canonical(n: int, coeffs) -> tuple[int, tuple[Fraction, ...]]:
    coeffs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coeffs)
    changed = True
    while n > 1 and changed:
        changed = False
        for p in _prime_factors(n):
            down = _try_descend(n, n // p, coeffs)
            if down is not None:
                n, coeffs = n // p, down
                changed = True
                break
    return n, coeffs


class Cyc:
    """An element of a cyclotomic field, reduced to its minimal conductor."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: tuple[Fraction, ...], _raw: bool = False):
        if _raw:
            self.n = n
            self.coeffs = coeffs
        else:
            self.n, self.coeffs = _canonical(n, coeffs)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(q) -> "Cyc":
        return Cyc(1, (Fraction(q),), _raw=True)

    @staticmethod
    def zero() -> "Cyc":
        return _ZERO

    @staticmethod
    def one() -> "Cyc":
        return _ONE

    @staticmethod
    def from_exponents(n: int, terms: dict[int, object]) -> "Cyc":
        """Sum of c * zeta_n^e over the given exponent -> coefficient map."""
        if n < 1:
            raise ValueError(f"conductor must be positive, got {n}")
        if n == 1:
            return Cyc.from_rational(sum(Fraction(c) for c in terms.values()))
        k = phi(n)
        rows = _power_rows(n)
        acc = [Fraction(0)] * k
        for e, c in terms.items():
            c = Fraction(c)
            if not c:
                continue
            row = rows[e % n]
            for i in range(k):
                if row[i]:
                    acc[i] += c * row[i]
        return Cyc(n, tuple(acc))

    # -- classification ----------------------------------------------------

    def is_rational(self) -> bool:
        return self.n == 1

    def is_integer(self) -> bool:
        return self.n == 1 and self.coeffs[0].denominator == 1

    def is_zero(self) -> bool:
        return self.n == 1 and not self.coeffs[0]

    def is_positive_natural(self) -> bool:
        """True for 1, 2, 3, ... (0 does not count)."""
        return self.is_integer() and self.coeffs[0] >= 1

    def as_fraction(self) -> Fraction:
        if self.n != 1:
            raise ValueError(f"not rational: {self.display()}")
        return self.coeffs[0]

    def as_int(self) -> int:
        f = self.as_fraction()
        if f.denominator != 1:
            raise ValueError(f"not an integer: {self.display()}")
        return f.numerator

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "Cyc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.n == 1 and other.n == 1:
            return Cyc(1, (self.coeffs[0] + other.coeffs[0],), _raw=True)
        m = math.lcm(self.n, other.n)
        a = self._embedded(m)
        b = other._embedded(m)
        return Cyc(m, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> "Cyc":
        return Cyc(self.n, tuple(-c for c in self.coeffs), _raw=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Cyc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.n == 1:
            return other._scaled(self.coeffs[0])
        if other.n == 1:
            return self._scaled(other.coeffs[0])
        m = math.lcm(self.n, other.n)
        a = self._embedded(m)
        b = other._embedded(m)
        k = phi(m)
        rows = _power_rows(m)
        if all(x.denominator == 1 for x in a) and all(x.denominator == 1 for x in b):
            ai = [x.numerator for x in a]
            bi = [x.numerator for x in b]
            conv = [0] * (2 * k - 1)
            for i, x in enumerate(ai):
                if x:
                    for j, y in enumerate(bi):
                        if y:
                            conv[i + j] += x * y
            acc_int = list(conv[:k])
            for t in range(k, 2 * k - 1):
                c = conv[t]
                if c:
                    row = rows[t]
                    for i in range(k):
                        if row[i]:
                            acc_int[i] += c * row[i]
            return Cyc(m, tuple(Fraction(v) for v in acc_int))
        conv = [Fraction(0)] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        acc = list(conv[:k])
        for t in range(k, 2 * k - 1):
            c = conv[t]
            if c:
                row = rows[t]
                for i in range(k):
                    if row[i]:
                        acc[i] += c * row[i]
        return Cyc(m, tuple(acc))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Cyc":
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = _ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def _scaled(self, q: Fraction) -> "Cyc":
        if not q:
            return _ZERO
        return Cyc(self.n, tuple(c * q for c in self.coeffs), _raw=True)

    def _embedded(self, m: int) -> tuple[Fraction, ...]:
        if m == self.n:
            return self.coeffs
        rows = _embed_rows(self.n, m)
        k = phi(m)
        acc = [Fraction(0)] * k
        for c, row in zip(self.coeffs, rows):
            if c:
                for i in range(k):
                    if row[i]:
                        acc[i] += c * row[i]
        return tuple(acc)

    # -- Galois ------------------------------------------------------------

    def galois(self, v: int) -> "Cyc":
        """Apply the field automorphism zeta -> zeta^v; v must be coprime to
        the conductor."""
        if self.n == 1:
            return self
        if math.gcd(v, self.n) != 1:
            raise NotCoprime(f"substitution {v} not coprime to conductor {self.n}")
        terms: dict[int, Fraction] = {}
        for j, c in enumerate(self.coeffs):
            if c:
                e = (j * v) % self.n
                terms[e] = terms.get(e, Fraction(0)) + c
        return Cyc.from_exponents(self.n, terms)

    def conjugate(self) -> "Cyc":
        if self.n == 1:
            return self
        return self.galois(self.n - 1)

    def abs_squared(self) -> "Cyc":
        if self.n == 1:
            c = self.coeffs[0]
            return Cyc(1, (c * c,), _raw=True)
        return self * self.conjugate()

    def is_root_of_unity(self) -> bool:
        if self.n == 1:
            return self.coeffs[0] in (1, -1)
        return self in _roots_of_unity(self.n)

    # -- display / parse ---------------------------------------------------

    def display(self) -> str:
        """Canonical text form: rationals as plain fractions, otherwise
        nonzero terms c*z(n)^e joined by " + " in ascending exponent order."""
        if self.n == 1:
            return str(self.coeffs[0])
        parts = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append(f"{c}*z({self.n})")
            else:
                parts.append(f"{c}*z({self.n})^{e}")
        return " + ".join(parts)

    _TERM_RE = re.compile(r"^(-?\d+(?:/\d+)?)\*z\((\d+)\)(?:\^(\d+))?$")
    _RAT_RE = re.compile(r"^-?\d+(?:/\d+)?$")

    @staticmethod
    def parse(text: str) -> "Cyc":
        """Inverse of display(); raises ValueError on malformed input."""
        s = text.strip()
        if not s:
            raise ValueError("empty cyclotomic literal")
        if Cyc._RAT_RE.match(s):
            return Cyc.from_rational(Fraction(s))
        n = None
        terms: dict[int, Fraction] = {}
        for part in s.split(" + "):
            if Cyc._RAT_RE.match(part):
                e, c = 0, Fraction(part)
            else:
                m = Cyc._TERM_RE.match(part)
                if not m:
                    raise ValueError(f"bad cyclotomic term {part!r} in {text!r}")
                c = Fraction(m.group(1))
                tn = int(m.group(2))
                e = int(m.group(3)) if m.group(3) else 1
                if e == 1 and m.group(3):
                    raise ValueError(f"redundant exponent in {part!r}")
                if n is not None and tn != n:
                    raise ValueError(f"mixed conductors {n} and {tn} in {text!r}")
                n = tn
            if e in terms:
                raise ValueError(f"repeated exponent {e} in {text!r}")
            terms[e] = c
        if n is None:
            raise ValueError(f"no conductor in {text!r}")
        if n < 3:
            raise ValueError(f"conductor {n} cannot carry irrational terms")
        if any(e >= phi(n) for e in terms):
            raise ValueError(f"exponent out of reduced range in {text!r}")
        val = Cyc.from_exponents(n, terms)
        if val.display() != s:
            raise ValueError(f"non-canonical cyclotomic literal {text!r}")
        return val

    # -- misc --------------------------------------------------------------

    def approx(self) -> complex:
        """Floating-point image for debugging only; never used in checks."""
        return sum(
            float(c) * cmath.exp(2j * cmath.pi * j / self.n)
            for j, c in enumerate(self.coeffs)
            if c
        )

    def sort_key(self):
        """Total order: rationals first by value, then by display string."""
        if self.n == 1:
            return (0, self.coeffs[0], "")
        return (1, Fraction(0), self.display())

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        if self.n == 1:
            return hash(self.coeffs[0])
        return hash((self.n, self.coeffs))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"Cyc({self.display()})"


def _coerce(x) -> "Cyc":
    if isinstance(x, Cyc):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyc.from_rational(x)
    return NotImplemented


@lru_cache(maxsize=None)
def _roots_of_unity(n: int) -> frozenset:
    out = set()
    for k in range(n):
        z = zeta(n, k)
        out.add(z)
        out.add(-z)
    return frozenset(out)


def zeta(n: int, k: int = 1) -> Cyc:
    """The root of unity zeta_n^k."""
    return Cyc.from_exponents(n, {k: 1})


_ZERO = Cyc(1, (Fraction(0),), _raw=True)
_ONE = Cyc(1, (Fraction(1),), _raw=True)
