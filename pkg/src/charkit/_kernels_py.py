"""Pure-Python implementations of the hot kernels.

The compiled twin in ``_kernels_c`` exposes the same functions; callers go
through :mod:`charkit.kernels`, which picks whichever is available.
Permutations are tuples of images of 0..n-1, composed left to right.
"""

from __future__ import annotations

from .errors import CapExceeded

BACKEND = "python"


def closure(n, generators, cap=None):
    """Enumerate the subgroup generated by ``generators``, sorted.

    Breadth-first products keep the enumeration deterministic; raises
    CapExceeded as soon as more than ``cap`` elements are seen.
    """
    ident = tuple(range(n))
    elements = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in generators]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = tuple(g[i] for i in x)
                if y not in elements:
                    elements.add(y)
                    if cap is not None and len(elements) > cap:
                        raise CapExceeded(
                            f"group has more than {cap} elements"
                        )
                    new.append(y)
        frontier = new
    return sorted(elements)


def inverse_indices(elements, index):
    """Index of each element's inverse, aligned with ``elements``."""
    out = []
    for p in elements:
        inv = [0] * len(p)
        for i, x in enumerate(p):
            inv[x] = i
        out.append(index[tuple(inv)])
    return out


def conjugacy_labels(elements, generators, index):
    """Label conjugation orbits; labels increase in first-seen scan order.

    Scanning ``elements`` in sorted order makes each orbit's first-seen
    member its lexicographically minimal one.
    """
    gens = [tuple(g) for g in generators]
    ginvs = []
    for g in gens:
        inv = [0] * len(g)
        for i, x in enumerate(g):
            inv[x] = i
        ginvs.append(tuple(inv))
    labels = [-1] * len(elements)
    next_label = 0
    for start, p in enumerate(elements):
        if labels[start] >= 0:
            continue
        labels[start] = next_label
        queue = [p]
        while queue:
            x = queue.pop()
            for g, ginv in zip(gens, ginvs):
                y = tuple(g[x[ginv[i]]] for i in range(len(g)))
                j = index[y]
                if labels[j] < 0:
                    labels[j] = next_label
                    queue.append(y)
        next_label += 1
    return labels


def conjugate_elements(elements, g):
    """Conjugate every element by g (as g^-1 * x * g), preserving order."""
    n = len(g)
    ginv = [0] * n
    for i, x in enumerate(g):
        ginv[x] = i
    rng = range(n)
    return [tuple(g[x[ginv[i]]] for i in rng) for x in elements]


def combo_matrix(elements, index, inv_indices, labels, rep_indices, coeffs, p):
    """Weighted class-algebra structure matrix of one linear combination.

    Entry [j][k] is sum over x in G of coeffs[class(x)] for those x with
    x^-1 * rep_k in class j, reduced mod p.  This equals
    sum_i coeffs[i] * a[i][j][k] for the class multiplication coefficients
    a, without materializing the full tensor.
    """
    r = len(rep_indices)
    mat = [[0] * r for _ in range(r)]
    weights = [coeffs[lab] for lab in labels]
    for k, rk in enumerate(rep_indices):
        zk = elements[rk]
        for xi in range(len(elements)):
            y = elements[inv_indices[xi]]
            prod = tuple(zk[v] for v in y)
            j = labels[index[prod]]
            mat[j][k] = (mat[j][k] + weights[xi]) % p
    return mat


def class_coeff_entries(elements, index, inv_indices, labels, rep_indices):
    """Sparse class multiplication coefficients as {(i, j, k): count}."""
    entries = {}
    for k, rk in enumerate(rep_indices):
        zk = elements[rk]
        for xi in range(len(elements)):
            i = labels[xi]
            y = elements[inv_indices[xi]]
            prod = tuple(zk[v] for v in y)
            j = labels[index[prod]]
            key = (i, j, k)
            entries[key] = entries.get(key, 0) + 1
    return entries
