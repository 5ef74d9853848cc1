# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot kernels.

Same API as ``_kernels_py``: permutations cross the boundary as tuples of
images of 0..n-1, composed left to right; internally rows are packed into
int32 buffers and looked up by lexicographic binary search (element lists
arriving here are sorted).
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdint cimport int32_t, int64_t
from libc.stdlib cimport free, malloc

from .errors import CapExceeded

BACKEND = "compiled"


cdef inline bytes _pack(seq, Py_ssize_t n):
    out = PyBytes_FromStringAndSize(NULL, n * 4)
    cdef int32_t* o = <int32_t*>(<char*>out)
    cdef Py_ssize_t i
    for i in range(n):
        o[i] = seq[i]
    return out


cdef inline tuple _unpack(bytes row, Py_ssize_t n):
    cdef const int32_t* r = <const int32_t*>(<const char*>row)
    cdef Py_ssize_t i
    return tuple([r[i] for i in range(n)])


cdef inline bytes _compose(bytes a, bytes b, Py_ssize_t n):
    """Apply a, then b: out[i] = b[a[i]]."""
    cdef const int32_t* pa = <const int32_t*>(<const char*>a)
    cdef const int32_t* pb = <const int32_t*>(<const char*>b)
    out = PyBytes_FromStringAndSize(NULL, n * 4)
    cdef int32_t* o = <int32_t*>(<char*>out)
    cdef Py_ssize_t i
    for i in range(n):
        o[i] = pb[pa[i]]
    return out


cdef inline bytes _invert(bytes a, Py_ssize_t n):
    cdef const int32_t* pa = <const int32_t*>(<const char*>a)
    out = PyBytes_FromStringAndSize(NULL, n * 4)
    cdef int32_t* o = <int32_t*>(<char*>out)
    cdef Py_ssize_t i
    for i in range(n):
        o[pa[i]] = i
    return out


def closure(n, generators, cap=None):
    """Sorted element list of the generated subgroup, capped."""
    cdef Py_ssize_t nn = n
    cdef bytes ident = _pack(range(n), nn)
    gens = [_pack(gen, nn) for gen in generators]
    seen = {ident}
    frontier = [ident]
    cdef long long limit = -1 if cap is None else <long long>cap
    cdef bytes x, g, y
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = _compose(x, g, nn)
                if y not in seen:
                    seen.add(y)
                    if limit >= 0 and len(seen) > limit:
                        raise CapExceeded(
                            f"group has more than {cap} elements")
                    new.append(y)
        frontier = new
    return sorted(_unpack(row, nn) for row in seen)


def inverse_indices(elements, index):
    out = []
    cdef Py_ssize_t nn
    if not elements:
        return out
    nn = len(elements[0])
    for p in elements:
        out.append(index[_unpack(_invert(_pack(p, nn), nn), nn)])
    return out


def conjugacy_labels(elements, generators, index):
    """Conjugation-orbit labels in first-seen order over the given list."""
    cdef Py_ssize_t count = len(elements)
    if count == 0:
        return []
    cdef Py_ssize_t nn = len(elements[0])
    packed = [_pack(p, nn) for p in elements]
    lookup = {row: i for i, row in enumerate(packed)}
    gens = [_pack(g, nn) for g in generators]
    ginvs = [_invert(g, nn) for g in gens]
    labels = [-1] * count
    cdef Py_ssize_t start, j, gi, ngens = len(gens)
    cdef int next_label = 0
    cdef bytes x, y
    for start in range(count):
        if labels[start] >= 0:
            continue
        labels[start] = next_label
        queue = [packed[start]]
        while queue:
            x = queue.pop()
            for gi in range(ngens):
                y = _compose(_compose(ginvs[gi], x, nn), gens[gi], nn)
                j = lookup[y]
                if labels[j] < 0:
                    labels[j] = next_label
                    queue.append(y)
        next_label += 1
    return labels


def conjugate_elements(elements, g):
    """Conjugate every element by g (g^-1 * x * g), preserving order."""
    cdef Py_ssize_t nn = len(g)
    cdef bytes gb = _pack(g, nn)
    cdef bytes gi = _invert(gb, nn)
    out = []
    for p in elements:
        out.append(_unpack(_compose(_compose(gi, _pack(p, nn), nn), gb, nn), nn))
    return out


cdef Py_ssize_t _binsearch(const int32_t* rows, Py_ssize_t count,
                           Py_ssize_t nn, const int32_t* target) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = count - 1, mid, i
    cdef int cmp_result
    while lo <= hi:
        mid = (lo + hi) >> 1
        cmp_result = 0
        for i in range(nn):
            if rows[mid * nn + i] < target[i]:
                cmp_result = -1
                break
            if rows[mid * nn + i] > target[i]:
                cmp_result = 1
                break
        if cmp_result == 0:
            return mid
        if cmp_result < 0:
            lo = mid + 1
        else:
            hi = mid - 1
    return -1


def combo_matrix(elements, index, inv_indices, labels, rep_indices, coeffs, p):
    """Weighted structure matrix sum_i coeffs[i] * a[i][j][k] mod p.

    ``elements`` must be the group's sorted element list; products are
    looked up by binary search on one packed buffer.
    """
    cdef Py_ssize_t count = len(elements)
    cdef Py_ssize_t nn = len(elements[0])
    cdef Py_ssize_t r = len(rep_indices)
    cdef bytes buf = b"".join([_pack(e, nn) for e in elements])
    cdef const int32_t* rows = <const int32_t*>(<const char*>buf)
    cdef bytes invbuf = b"".join([_pack(elements[i], nn) for i in inv_indices])
    cdef const int32_t* invrows = <const int32_t*>(<const char*>invbuf)

    cdef int64_t* lab = <int64_t*>malloc(count * sizeof(int64_t))
    cdef int64_t* weights = <int64_t*>malloc(count * sizeof(int64_t))
    cdef int64_t* mat = <int64_t*>malloc(r * r * sizeof(int64_t))
    cdef int32_t* prod = <int32_t*>malloc(nn * sizeof(int32_t))
    if lab == NULL or weights == NULL or mat == NULL or prod == NULL:
        free(lab); free(weights); free(mat); free(prod)
        raise MemoryError()
    try:
        for i in range(count):
            lab[i] = labels[i]
            weights[i] = coeffs[labels[i]] % p
        for i in range(r * r):
            mat[i] = 0
        _combo_fill(rows, invrows, lab, weights, mat, prod,
                    count, nn, r, rep_indices, p)
        return [[int(mat[j * r + k]) for k in range(r)] for j in range(r)]
    finally:
        free(lab); free(weights); free(mat); free(prod)


cdef void _combo_fill(const int32_t* rows, const int32_t* invrows,
                      const int64_t* lab, const int64_t* weights,
                      int64_t* mat, int32_t* prod,
                      Py_ssize_t count, Py_ssize_t nn, Py_ssize_t r,
                      rep_indices, int64_t p):
    cdef Py_ssize_t k, xi, t, jidx, rep
    cdef const int32_t* zk
    cdef const int32_t* y
    for k in range(r):
        rep = rep_indices[k]
        zk = rows + rep * nn
        with nogil:
            for xi in range(count):
                y = invrows + xi * nn
                for t in range(nn):
                    prod[t] = zk[y[t]]
                jidx = _binsearch(rows, count, nn, prod)
                t = lab[jidx] * r + k
                mat[t] = (mat[t] + weights[xi]) % p


def class_coeff_entries(elements, index, inv_indices, labels, rep_indices):
    """Sparse class multiplication coefficients as {(i, j, k): count}."""
    cdef Py_ssize_t count = len(elements)
    cdef Py_ssize_t nn = len(elements[0])
    cdef Py_ssize_t r = len(rep_indices)
    cdef bytes buf = b"".join([_pack(e, nn) for e in elements])
    cdef const int32_t* rows = <const int32_t*>(<const char*>buf)
    cdef bytes invbuf = b"".join([_pack(elements[i], nn) for i in inv_indices])
    cdef const int32_t* invrows = <const int32_t*>(<const char*>invbuf)
    cdef int32_t* prod = <int32_t*>malloc(nn * sizeof(int32_t))
    if prod == NULL:
        raise MemoryError()
    entries = {}
    cdef Py_ssize_t k, xi, t, jidx
    cdef const int32_t* zk
    cdef const int32_t* y
    try:
        for k in range(r):
            zk = rows + (<Py_ssize_t>rep_indices[k]) * nn
            for xi in range(count):
                y = invrows + xi * nn
                for t in range(nn):
                    prod[t] = zk[y[t]]
                jidx = _binsearch(rows, count, nn, prod)
                key = (labels[xi], labels[jidx], k)
                entries[key] = entries.get(key, 0) + 1
        return entries
    finally:
        free(prod)
