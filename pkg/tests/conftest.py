"""Shared fixtures and independent test-side oracles.

The oracle helpers deliberately reimplement group arithmetic from scratch
(set closure, all-pairs conjugation, numeric eigendecomposition) so the
library's fast paths are checked against something they do not share code
with.
"""

import functools
import itertools

import numpy as np

from charkit import Config, GroupContext, parse_group


@functools.lru_cache(maxsize=None)
def context(name: str) -> GroupContext:
    """One shared context per group spec for the whole test session."""
    return GroupContext(parse_group(name), Config())


def mult(a, b):
    return tuple(b[x] for x in a)


def inv(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def brute_closure(gens, n):
    """Exhaustive set closure by repeated multiplication until stable."""
    elements = {tuple(range(n))}
    elements.update(tuple(g) for g in gens)
    while True:
        new = {mult(a, b) for a in elements for b in elements} - elements
        if not new:
            return sorted(elements)
        elements |= new


def brute_classes(elements):
    """Conjugacy classes by all-pairs conjugation."""
    elements = list(elements)
    seen = set()
    classes = []
    for x in elements:
        if x in seen:
            continue
        orbit = {mult(mult(inv(g), x), g) for g in elements}
        seen |= orbit
        classes.append(frozenset(orbit))
    return classes


def brute_derived(elements):
    """Commutator subgroup from all element-pair commutators."""
    comms = [mult(mult(inv(a), inv(b)), mult(a, b))
             for a, b in itertools.product(elements, repeat=2)]
    n = len(elements[0])
    return brute_closure(comms, n)


def brute_class_coefficients(G):
    """Class multiplication tensor by direct product enumeration."""
    r = len(G.classes)
    tensor = np.zeros((r, r, r), dtype=np.int64)
    members = [[G.elements[i] for i in c.members] for c in G.classes]
    rep_class = {c.representative: k for k, c in enumerate(G.classes)}
    class_of_elem = {}
    for k, mem in enumerate(members):
        for x in mem:
            class_of_elem[x] = k
    for i in range(r):
        for j in range(r):
            for x in members[i]:
                for y in members[j]:
                    z = mult(x, y)
                    k = class_of_elem[z]
                    if z == G.classes[k].representative:
                        tensor[i, j, k] += 1
    return tensor


def numeric_character_table(G, seed=12345):
    """Floating-point character values via complex eigendecomposition.

    Builds the class-sum structure matrices by brute-force products and
    simultaneously diagonalizes a random real combination; returns the
    character values as complex numbers, one row per irreducible, in no
    particular order.
    """
    tensor = brute_class_coefficients(G).astype(float)
    r = tensor.shape[0]
    rng = np.random.default_rng(seed)
    combo = np.tensordot(rng.random(r), tensor, axes=(0, 0))
    eigvals, eigvecs = np.linalg.eig(combo)
    rows = []
    sizes = np.array([c.size for c in G.classes], dtype=float)
    inv_class = list(G.inverse_class)
    for col in range(r):
        w = eigvecs[:, col]
        w = w / w[0]
        s = sum(w[i] * w[inv_class[i]] / sizes[i] for i in range(r))
        d = np.sqrt(G.order / s)
        rows.append(np.array([d * w[j] / sizes[j] for j in range(r)]))
    return rows


def permutation_character_on_cosets(G, rec):
    """Fixed-point count of G acting on the cosets of a subgroup."""
    cosets = []
    assigned = set()
    for x in G.elements:
        if x in assigned:
            continue
        coset = frozenset(mult(h, x) for h in rec.elements)
        assigned |= coset
        cosets.append(coset)
    values = []
    for cls in G.classes:
        g = cls.representative
        fixed = sum(1 for c in cosets
                    if mult(next(iter(c)), g) in c)
        values.append(fixed)
    return values
