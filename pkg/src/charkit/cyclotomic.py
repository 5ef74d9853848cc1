"""Exact arithmetic in cyclotomic fields.

Values are stored in the power basis 1, z, ..., z^(phi(e)-1) of the e-th
cyclotomic field, reduced modulo the e-th cyclotomic polynomial, at the
minimal conductor e containing the value.  That makes the representation
canonical: two values are equal iff conductor and coefficient vector agree,
rational values always live at conductor 1, and hashing is structural.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd

_ZERO = Fraction(0)
_ONE = Fraction(1)


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Exact division of integer polynomials (low-to-high coefficients)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for shift in range(len(out) - 1, -1, -1):
        coeff = num[shift + len(den) - 1]
        if coeff % den[-1] != 0:
            raise ArithmeticError("inexact polynomial division")
        q = coeff // den[-1]
        out[shift] = q
        if q:
            for i, c in enumerate(den):
                num[shift + i] -= q * c
    if any(num):
        raise ArithmeticError("nonzero remainder in polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients (low-to-high) of the e-th cyclotomic polynomial."""
    if e == 1:
        return (-1, 1)
    poly = [-1] + [0] * (e - 1) + [1]  # x^e - 1
    for d in divisors(e)[:-1]:
        poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def phi(e: int) -> int:
    return len(cyclotomic_polynomial(e)) - 1


@lru_cache(maxsize=None)
def _power_rows(e: int) -> tuple[tuple[int, ...], ...]:
    """z^k mod the e-th cyclotomic polynomial, for k = 0..e-1."""
    poly = cyclotomic_polynomial(e)
    deg = len(poly) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(e):
        rows.append(tuple(cur))
        top = cur[deg - 1]
        nxt = [0] + cur[:deg - 1]
        if top:
            for i in range(deg):
                nxt[i] -= top * poly[i]
        cur = nxt
    return tuple(rows)


@lru_cache(maxsize=None)
def _subfield_solver(e: int, d: int):
    """Solver deciding membership of conductor-e vectors in Q(zeta_d).

    Returns (transform L, pivot row of each basis coefficient, zero rows):
    for a vector v, w = L v solves M a = v where M embeds the power basis
    of conductor d into conductor e; v lies in the subfield iff w vanishes
    on the zero rows.
    """
    rows_e = _power_rows(e)
    pe, pd = phi(e), phi(d)
    step = e // d
    cols = [rows_e[(i * step) % e] for i in range(pd)]
    mat = [[Fraction(cols[j][i]) for j in range(pd)] for i in range(pe)]
    aug = [[_ONE if i == j else _ZERO for j in range(pe)] for i in range(pe)]
    pivot_rows = []
    row = 0
    for col in range(pd):
        pivot = next(r for r in range(row, pe) if mat[r][col])
        mat[row], mat[pivot] = mat[pivot], mat[row]
        aug[row], aug[pivot] = aug[pivot], aug[row]
        scale = mat[row][col]
        mat[row] = [x / scale for x in mat[row]]
        aug[row] = [x / scale for x in aug[row]]
        for r in range(pe):
            if r != row and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[row])]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[row])]
        pivot_rows.append(row)
        row += 1
    zero_rows = tuple(range(row, pe))
    return tuple(tuple(r) for r in aug), tuple(pivot_rows), zero_rows


class Cyclotomic:
    """An exact cyclotomic number in canonical form.

    Do not call the constructor directly; use :func:`rational`,
    :func:`root_of_unity`, :func:`from_terms`, or arithmetic on existing
    values, all of which canonicalize.
    """

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs: tuple[Fraction, ...]):
        self.conductor = conductor
        self.coeffs = coeffs
        self._hash = hash((conductor, coeffs))

    # --- canonicalization -------------------------------------------------

    @staticmethod
    def _canonical(e: int, vec: list[Fraction]) -> "Cyclotomic":
        if all(c == 0 for c in vec[1:]):
            return Cyclotomic(1, (vec[0],))
        if e > 2:
            for d in divisors(e)[1:-1]:
                if d == 2:
                    continue  # Q(zeta_2) = Q, already ruled out
                transform, pivots, zeros = _subfield_solver(e, d)
                w = [sum(row[i] * vec[i] for i in range(len(vec)) if vec[i])
                     for row in transform]
                if all(w[z] == 0 for z in zeros):
                    return Cyclotomic(d, tuple(w[r] for r in pivots))
        return Cyclotomic(e, tuple(vec))

    @staticmethod
    def _from_sparse(e: int, terms) -> "Cyclotomic":
        rows = _power_rows(e)
        vec = [_ZERO] * phi(e)
        for k, c in terms:
            if c:
                row = rows[k % e]
                for i, m in enumerate(row):
                    if m:
                        vec[i] += c * m
        return Cyclotomic._canonical(e, vec)

    def _embedded(self, e: int) -> list[Fraction]:
        """Coefficient vector of this value inside conductor e (a multiple)."""
        if e == self.conductor:
            return list(self.coeffs)
        rows = _power_rows(e)
        step = e // self.conductor
        vec = [_ZERO] * phi(e)
        for i, c in enumerate(self.coeffs):
            if c:
                row = rows[(i * step) % e]
                for j, m in enumerate(row):
                    if m:
                        vec[j] += c * m
        return vec

    # --- predicates and views ----------------------------------------------

    def is_zero(self) -> bool:
        return self.conductor == 1 and self.coeffs[0] == 0

    def is_rational(self) -> bool:
        return self.conductor == 1

    def as_rational(self) -> Fraction | None:
        """Exact rational value, or None when irrational."""
        return self.coeffs[0] if self.conductor == 1 else None

    def as_integer(self) -> int | None:
        q = self.as_rational()
        return int(q) if q is not None and q.denominator == 1 else None

    def complex_value(self) -> complex:
        """Floating-point embedding (sanity oracle only)."""
        e = self.conductor
        return sum(float(c) * cmath.exp(2j * cmath.pi * i / e)
                   for i, c in enumerate(self.coeffs))

    def sort_key(self):
        """Fixed total order: rationals first (descending), then by
        conductor and coefficient vector."""
        if self.conductor == 1:
            return (0, -self.coeffs[0], 0)
        return (1, self.conductor, self.coeffs)

    # --- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if self.conductor == 1 and other.conductor == 1:
            return rational(self.coeffs[0] + other.coeffs[0])
        e = lcm(self.conductor, other.conductor)
        a, b = self._embedded(e), other._embedded(e)
        return Cyclotomic._canonical(e, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if self.conductor == 1:
            return other._scaled(self.coeffs[0])
        if other.conductor == 1:
            return self._scaled(other.coeffs[0])
        e = lcm(self.conductor, other.conductor)
        a, b = self._embedded(e), other._embedded(e)
        prod = [_ZERO] * e
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[(i + j) % e] += x * y
        return Cyclotomic._from_sparse(e, enumerate(prod))

    __rmul__ = __mul__

    def _scaled(self, q: Fraction):
        if q == 0:
            return ZERO
        if q == 1:
            return self
        return Cyclotomic(self.conductor, tuple(c * q for c in self.coeffs))

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation: maps exponent k to (conductor - k)."""
        e = self.conductor
        if e == 1:
            return self
        rows = _power_rows(e)
        vec = [_ZERO] * phi(e)
        for i, c in enumerate(self.coeffs):
            if c:
                row = rows[(e - i) % e]
                for j, m in enumerate(row):
                    if m:
                        vec[j] += c * m
        # conjugation fixes the field, so the conductor cannot drop
        return Cyclotomic(e, tuple(vec))

    # --- comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.conductor == 1 and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.conductor == other.conductor and self.coeffs == other.coeffs

    def __hash__(self):
        return self._hash

    # --- rendering ------------------------------------------------------------

    def text(self) -> str:
        if self.is_zero():
            return "0"
        e = self.conductor
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            elif mag == 1:
                body = f"z({e})^{i}"
            else:
                body = f"{mag}*z({e})^{i}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def to_json(self) -> dict:
        return {
            "conductor": self.conductor,
            "terms": [{"exp": i, "num": c.numerator, "den": c.denominator}
                      for i, c in enumerate(self.coeffs) if c],
        }

    def __repr__(self):
        return f"Cyclotomic({self.text()})"


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _coerce(x) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction)):
        return rational(x)
    raise TypeError(f"cannot interpret {x!r} as a cyclotomic number")


def rational(q) -> Cyclotomic:
    q = Fraction(q)
    if q == 0:
        return ZERO
    if q == 1:
        return ONE
    return Cyclotomic(1, (q,))


@lru_cache(maxsize=None)
def _zeta_cached(e: int, k: int) -> Cyclotomic:
    return Cyclotomic._from_sparse(e, [(k, _ONE)])


def root_of_unity(e: int, k: int = 1) -> Cyclotomic:
    """Canonical form of the k-th power of a primitive e-th root of unity."""
    if e < 1:
        raise ValueError("conductor must be >= 1")
    return _zeta_cached(e, k % e)


def from_terms(e: int, terms: dict) -> Cyclotomic:
    """Canonical value of sum over terms of coeff * zeta_e^exp."""
    if e < 1:
        raise ValueError("conductor must be >= 1")
    return Cyclotomic._from_sparse(
        e, ((k, Fraction(c)) for k, c in terms.items()))


def from_json(data: dict) -> Cyclotomic:
    e = data["conductor"]
    return from_terms(e, {t["exp"]: Fraction(t["num"], t["den"])
                          for t in data["terms"]})


def sum_products(terms) -> Cyclotomic:
    """Exact sum of scalar * a * conj_b over (scalar, a, conj_b) triples.

    Used by inner products: accumulates raw coefficient vectors at the
    common conductor and canonicalizes once at the end.
    """
    terms = [(Fraction(s), a, b) for s, a, b in terms]
    e = 1
    for _, a, b in terms:
        e = lcm(e, lcm(a.conductor, b.conductor))
    acc = [_ZERO] * e
    for s, a, b in terms:
        if s == 0 or a.is_zero() or b.is_zero():
            continue
        va, vb = a._embedded(e), b._embedded(e)
        for i, x in enumerate(va):
            if x:
                xs = x * s
                for j, y in enumerate(vb):
                    if y:
                        acc[(i + j) % e] += xs * y
    return Cyclotomic._from_sparse(e, enumerate(acc))


ZERO = Cyclotomic(1, (_ZERO,))
ONE = Cyclotomic(1, (_ONE,))
