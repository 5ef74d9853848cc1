"""Exact character tables.

The table is computed by splitting the class algebra over a prime field
GF(p) with p = 1 (mod exponent) and p > 2 sqrt(|G|): seeded random integer
combinations of the class-sum structure matrices are diagonalized until all
common eigenspaces are one-dimensional, degrees are recovered from the
orthogonality relation mod p, and each character value is lifted to an
exact sum of roots of unity by counting representation eigenvalues via
discrete Fourier inversion mod p.  Every table invariant (both
orthogonality relations, degree sum, divisibility) is then verified in
exact arithmetic before the table is returned.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
import numpy as np

from . import cyclotomic as cy
from . import kernels, perms
from .classfun import ClassFunction, inner_product
from .config import DEFAULT_SEED
from .errors import CapExceeded
from .permgroup import PermGroup

_MAX_DRAWS = 200


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def choose_prime(exponent: int, order: int) -> int:
    """Smallest prime p = 1 (mod exponent) with p*p > 4*order."""
    p = exponent + 1
    while True:
        if p * p > 4 * order and _is_prime(p):
            return p
        p += exponent


def _primitive_root(p: int) -> int:
    factors = []
    m = p - 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            factors.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        factors.append(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise AssertionError("no primitive root found")


# --- GF(p) linear algebra (int64 numpy; p*p*r stays below 2**63) ---------


def _inv_mod(a: int, p: int) -> int:
    return pow(int(a) % p, p - 2, p)


def _rref(M: np.ndarray, p: int):
    M = M.copy() % p
    rows, cols = M.shape
    pivots = []
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(M[rank:, c])[0]
        if nz.size == 0:
            continue
        pivot = rank + int(nz[0])
        if pivot != rank:
            M[[rank, pivot]] = M[[pivot, rank]]
        M[rank] = (M[rank] * _inv_mod(M[rank, c], p)) % p
        factors = M[:, c].copy()
        factors[rank] = 0
        M = (M - np.outer(factors, M[rank])) % p
        pivots.append(c)
        rank += 1
    return M, pivots


def _kernel_basis(M: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning the right kernel of M over GF(p)."""
    R, pivots = _rref(M, p)
    n = M.shape[1]
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, c in enumerate(pivots):
            basis[i, c] = (-R[row, f]) % p
    return basis


def _solve_unique(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """X with A @ X = B, where A has full column rank."""
    n = A.shape[1]
    aug = np.concatenate([A % p, B % p], axis=1)
    R, pivots = _rref(aug, p)
    if pivots[:n] != list(range(n)) or len(pivots) != n:
        raise AssertionError("system is not uniquely solvable")
    return R[:n, n:]


def _restricted_action(A: np.ndarray, basis: np.ndarray, p: int) -> np.ndarray:
    """Matrix C with C @ basis = basis @ A (action on the row space)."""
    BA = (basis @ A) % p
    Ct = _solve_unique(basis.T, BA.T, p)
    return Ct.T


def _split_by(A: np.ndarray, basis: np.ndarray, p: int):
    """Split a space of column vectors into the eigenspaces of A.

    The space is spanned by the rows of ``basis`` read as column vectors;
    with D solving D basis = basis A^T, a coordinate column k describes an
    eigenvector iff (D - lam I)^T k = 0.
    """
    d = basis.shape[0]
    D = _restricted_action(A.T % p, basis, p)
    pieces = []
    found = 0
    eye = np.eye(d, dtype=np.int64)
    for lam in range(p):
        K = _kernel_basis(((D - lam * eye) % p).T.copy(), p)
        if K.shape[0]:
            pieces.append((K @ basis) % p)
            found += K.shape[0]
            if found == d:
                break
    if found != d:
        raise AssertionError("restricted class-algebra action not diagonalizable")
    return pieces


# --- the table ------------------------------------------------------------


def class_mult_coefficients(G: PermGroup) -> np.ndarray:
    """Tensor a[i][j][k]: the number of ways a fixed element of class k
    factors as (class i element) * (class j element)."""
    r = len(G.classes)
    if r ** 3 > 64_000_000:
        raise CapExceeded(f"class coefficient tensor with {r} classes is too large")
    reps_idx = [G.element_index[c.representative] for c in G.classes]
    entries = kernels.class_coeff_entries(
        G.elements, G.element_index, G.inverse_indices, G.class_of, reps_idx)
    tensor = np.zeros((r, r, r), dtype=np.int64)
    for (i, j, k), count in entries.items():
        tensor[i, j, k] = count
    return tensor


def _combo_matrix(G: PermGroup, coeffs, p: int) -> np.ndarray:
    reps_idx = [G.element_index[c.representative] for c in G.classes]
    mat = kernels.combo_matrix(G.elements, G.element_index, G.inverse_indices,
                               G.class_of, reps_idx, coeffs, p)
    return np.array(mat, dtype=np.int64)


@dataclass(frozen=True)
class CharacterTable:
    group: PermGroup
    rows: tuple[ClassFunction, ...]
    degrees: tuple[int, ...]
    exponent: int
    prime: int
    seed: int

    @property
    def classes(self):
        return self.group.classes

    def row_index(self, chi: ClassFunction) -> int | None:
        for i, row in enumerate(self.rows):
            if row.values == chi.values:
                return i
        return None

    def to_json(self) -> dict:
        G = self.group
        return {
            "group": G.label,
            "order": G.order,
            "exponent": self.exponent,
            "classes": [
                {
                    "rep": perms.format_cycles(c.representative),
                    "size": c.size,
                    "elementOrder": c.element_order,
                }
                for c in G.classes
            ],
            "irreducibles": [
                {"degree": d, "values": row.to_json()}
                for d, row in zip(self.degrees, self.rows)
            ],
        }


def character_table(G: PermGroup, seed: int = DEFAULT_SEED) -> CharacterTable:
    """Exact character table with fixed row/class orderings.

    Deterministic for a fixed seed; the result itself is seed-independent
    because the orderings are canonical and the exact verification accepts
    only the true table.
    """
    r = len(G.classes)
    order = G.order
    e = G.exponent
    p = choose_prime(e, order)
    rng = random.Random(seed)

    spaces = [np.eye(r, dtype=np.int64)]
    draws = 0
    while any(s.shape[0] > 1 for s in spaces):
        if draws >= _MAX_DRAWS:
            raise AssertionError(
                "eigenspace splitting did not converge; retry with a new seed")
        draws += 1
        coeffs = [rng.randrange(p) for _ in range(r)]
        A = _combo_matrix(G, coeffs, p)
        new_spaces = []
        for s in spaces:
            if s.shape[0] == 1:
                new_spaces.append(s)
            else:
                new_spaces.extend(_split_by(A, s, p))
        spaces = new_spaces

    inv_sizes = [_inv_mod(c.size, p) for c in G.classes]
    inv_class = G.inverse_class
    omegas = []
    for s in spaces:
        w = s[0] % p
        w = (w * _inv_mod(w[0], p)) % p
        omegas.append(w)

    w_root = pow(_primitive_root(p), (p - 1) // e, p)
    wpows = [pow(w_root, t, p) for t in range(e)]
    power_classes = [
        [G.power_class(j, t) for t in range(G.classes[j].element_order)]
        for j in range(r)
    ]

    rows = []
    for w in omegas:
        s_val = sum(int(w[i]) * int(w[inv_class[i]]) * inv_sizes[i]
                    for i in range(r)) % p
        d2 = order % p * _inv_mod(s_val, p) % p
        degree = next((d for d in range(1, (p - 1) // 2 + 1)
                       if d * d % p == d2), None)
        if degree is None:
            raise AssertionError("no degree with the required square mod p")
        chibar = [degree * int(w[j]) % p * inv_sizes[j] % p for j in range(r)]
        values = []
        for j in range(r):
            m = G.classes[j].element_order
            step = e // m
            minv = _inv_mod(m, p)
            terms = {}
            total_mult = 0
            for length in range(m):
                acc = 0
                for t, cls_id in enumerate(power_classes[j]):
                    acc += chibar[cls_id] * wpows[(-step * length * t) % e]
                mult = acc % p * minv % p
                if mult > degree:
                    raise AssertionError(
                        "eigenvalue multiplicity exceeds the degree; "
                        "modular data is inconsistent")
                total_mult += mult
                if mult:
                    terms[step * length] = mult
            if total_mult != degree:
                raise AssertionError("eigenvalue multiplicities do not sum "
                                     "to the degree")
            values.append(cy.from_terms(e, terms))
        rows.append((degree, ClassFunction(G, tuple(values))))

    rows.sort(key=lambda item: (item[0], item[1].sort_key()))
    table = CharacterTable(
        group=G,
        rows=tuple(row for _, row in rows),
        degrees=tuple(d for d, _ in rows),
        exponent=e,
        prime=p,
        seed=seed,
    )
    verify_table_exact(table)
    return table


def verify_table_exact(table: CharacterTable) -> None:
    """Check every table invariant in exact arithmetic; raises on failure."""
    G = table.group
    r = len(G.classes)
    if len(table.rows) != r:
        raise AssertionError("row count differs from class count")
    if sum(d * d for d in table.degrees) != G.order:
        raise AssertionError("degree squares do not sum to the group order")
    for d in table.degrees:
        if G.order % d != 0:
            raise AssertionError(f"degree {d} does not divide the group order")
    if any(v != 1 for v in table.rows[0].values):
        raise AssertionError("first row is not the trivial character")
    for row in table.rows:
        for v in row.values:
            if table.exponent % v.conductor != 0:
                raise AssertionError("value outside the exponent field")
    for i, a in enumerate(table.rows):
        for j, b in enumerate(table.rows):
            got = inner_product(a, b)
            if got != (1 if i == j else 0):
                raise AssertionError(f"row orthogonality failed at ({i},{j})")
    for k in range(r):
        for l in range(r):
            total = cy.sum_products(
                [(1, row.values[k], row.values[l].conjugate())
                 for row in table.rows])
            want = G.centralizer_order(k) if k == l else 0
            if total != want:
                raise AssertionError(f"column orthogonality failed at ({k},{l})")
