"""Permutation primitives.

A permutation on n points is a tuple of images of 0..n-1.  Composition is
left to right: ``mult(a, b)`` applies ``a`` first, then ``b``.  Cycle
notation is 1-based on input and output, and a product of cycles inside one
generator string is likewise composed left to right (this only matters for
overlapping cycles).
"""

from __future__ import annotations

import re
from math import lcm

from .errors import ParseError

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_identity(p: Perm) -> bool:
    return all(i == x for i, x in enumerate(p))


def mult(a: Perm, b: Perm) -> Perm:
    """Compose left to right: apply a, then b."""
    return tuple(b[x] for x in a)


def inverse(a: Perm) -> Perm:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def conjugate(x: Perm, g: Perm, ginv: Perm | None = None) -> Perm:
    """g^-1 * x * g under left-to-right composition."""
    if ginv is None:
        ginv = inverse(g)
    return tuple(g[x[ginv[i]]] for i in range(len(g)))


def commutator(a: Perm, b: Perm) -> Perm:
    """a^-1 * b^-1 * a * b."""
    return mult(mult(inverse(a), inverse(b)), mult(a, b))


def power(a: Perm, k: int) -> Perm:
    if k < 0:
        return power(inverse(a), -k)
    result = identity(len(a))
    base = a
    while k:
        if k & 1:
            result = mult(result, base)
        k >>= 1
        if k:
            base = mult(base, base)
    return result


def cycle_lengths(a: Perm) -> list[int]:
    seen = [False] * len(a)
    out = []
    for i in range(len(a)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = a[j]
            length += 1
        out.append(length)
    return out


def order(a: Perm) -> int:
    return lcm(*cycle_lengths(a)) if a else 1


def format_cycles(a: Perm) -> str:
    """Render in 1-based cycle notation; identity renders as "()"."""
    seen = [False] * len(a)
    parts = []
    for i in range(len(a)):
        if seen[i] or a[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = a[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = a[j]
        parts.append("(" + " ".join(str(k + 1) for k in cyc) + ")")
    return "".join(parts) if parts else "()"


_CYCLE_RE = re.compile(r"\(\s*((?:\d+[\s,]*)*)\)")


def parse_cycles(text: str, degree: int = 0) -> Perm:
    """Parse a product of 1-based cycles like "(1 2 3)(4 5)".

    The degree is the largest point mentioned (at least ``degree``); "()" is
    the identity.
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty permutation")
    pos = 0
    cycles: list[list[int]] = []
    for m in _CYCLE_RE.finditer(stripped):
        if m.start() != pos or stripped[pos:m.start()].strip():
            raise ParseError(f"malformed cycle notation: {text!r}")
        pos = m.end()
        body = m.group(1).strip()
        if not body:
            continue
        points = [int(tok) for tok in re.split(r"[\s,]+", body)]
        if any(pt < 1 for pt in points):
            raise ParseError(f"points must be >= 1 in {text!r}")
        if len(set(points)) != len(points):
            raise ParseError(f"repeated point in cycle: {text!r}")
        cycles.append([pt - 1 for pt in points])
    if pos != len(stripped):
        raise ParseError(f"malformed cycle notation: {text!r}")
    n = max([degree] + [1 + max(c) for c in cycles if c] + [1])
    result = identity(n)
    for cyc in cycles:
        p = list(identity(n))
        for a, b in zip(cyc, cyc[1:]):
            p[a] = b
        p[cyc[-1]] = cyc[0]
        result = mult(result, tuple(p))
    return result


def extend(p: Perm, n: int) -> Perm:
    """Pad with fixed points up to degree n."""
    if len(p) >= n:
        return p
    return p + tuple(range(len(p), n))


def shift(p: Perm, offset: int, n: int) -> Perm:
    """Embed p on points offset..offset+len(p)-1 inside degree n."""
    img = list(range(n))
    for i, x in enumerate(p):
        img[offset + i] = offset + x
    return tuple(img)
