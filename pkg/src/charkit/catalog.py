"""Group-spec parsing and the named-group catalog.

Specs are either ``perm:<cycles>,<cycles>,...`` with 1-based cycles, or
``name:<CatalogName>`` where names are Cn, Dn (order 2n), Sn, An, Q8, Q16,
SL23, F20, F21, ES27, and direct products joined by ``x`` (e.g. Q8xC3).
"""

from __future__ import annotations

import re

from . import perms
from .config import DEFAULT_ELEMENT_CAP
from .errors import ParseError
from .permgroup import PermGroup


def _cyclic(n):
    if n == 1:
        return 1, []
    return n, [tuple(range(1, n)) + (0,)]


def _symmetric(n):
    if n <= 1:
        return max(n, 1), []
    cycle = tuple(range(1, n)) + (0,)
    swap = (1, 0) + tuple(range(2, n))
    return n, [swap, cycle]


def _alternating(n):
    if n <= 2:
        return max(n, 1), []
    three = perms.extend(perms.parse_cycles("(1 2 3)"), n)
    if n == 3:
        return n, [three]
    if n % 2 == 1:
        big = tuple(range(1, n)) + (0,)
    else:
        big = (0,) + tuple(range(2, n)) + (1,)
    return n, [three, big]


def _dihedral(n):
    """Dihedral group of order 2n."""
    if n == 1:
        return 2, [(1, 0)]
    if n == 2:
        return 4, [(1, 0, 2, 3), (0, 1, 3, 2)]
    rot = tuple(range(1, n)) + (0,)
    refl = tuple((n - i) % n for i in range(n))
    return n, [rot, refl]


def _dicyclic(m):
    """Dicyclic group of order 4m (Q8 at m=2, Q16 at m=4), regular action.

    Elements are a^i b^e with a of order 2m and b^2 = a^m, b a = a^-1 b;
    points are the 4m elements themselves.
    """
    two_m = 2 * m

    def point(i, e):
        return i + two_m * e

    def times(x, g):
        i, e = x % two_m, x // two_m
        j, f = g % two_m, g // two_m
        if f == 0:
            return point((i + j) % two_m, e)
        if e == 0:
            return point((j - i) % two_m, 1)
        return point((j - i + m) % two_m, 0)

    n = 4 * m
    a = tuple(times(x, point(1, 0)) for x in range(n))
    b = tuple(times(x, point(0, 1)) for x in range(n))
    return n, [a, b]


def _matrix_action(mats, vectors, modulus):
    """Permutations of a vector list induced by matrices over Z/modulus."""
    index = {v: i for i, v in enumerate(vectors)}
    out = []
    for mat in mats:
        images = []
        for v in vectors:
            w = tuple(sum(mat[r][c] * v[c] for c in range(len(v))) % modulus
                      for r in range(len(v)))
            images.append(index[w])
        out.append(tuple(images))
    return len(vectors), out


def _sl23():
    vectors = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    return _matrix_action([[[1, 1], [0, 1]], [[1, 0], [1, 1]]], vectors, 3)


def _es27():
    """Extraspecial 3^(1+2) of exponent 3: unitriangular 3x3 over F3."""
    vectors = [(x, y, z) for x in range(3) for y in range(3) for z in range(3)]
    x_mat = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    y_mat = [[1, 0, 0], [0, 1, 1], [0, 0, 1]]
    return _matrix_action([x_mat, y_mat], vectors, 3)


def _affine(modulus, multiplier):
    shift = tuple((i + 1) % modulus for i in range(modulus))
    scale = tuple((multiplier * i) % modulus for i in range(modulus))
    return modulus, [shift, scale]


_FIXED = {
    "Q8": lambda: _dicyclic(2),
    "Q16": lambda: _dicyclic(4),
    "SL23": _sl23,
    "ES27": _es27,
    "F20": lambda: _affine(5, 2),
    "F21": lambda: _affine(7, 2),
}

_FAMILY = {"C": _cyclic, "D": _dihedral, "S": _symmetric, "A": _alternating}

_NAME_RE = re.compile(r"^([A-Z]+)(\d+)$")


def _construct_name(name):
    if name in _FIXED:
        return _FIXED[name]()
    m = _NAME_RE.match(name)
    if m and m.group(1) in _FAMILY:
        n = int(m.group(2))
        if n < 1:
            raise ParseError(f"index must be >= 1 in {name!r}")
        return _FAMILY[m.group(1)](n)
    known = sorted(_FIXED) + [f + "n" for f in sorted(_FAMILY)]
    raise ParseError(f"unknown catalog name {name!r} (known: {', '.join(known)})")


def _direct_product(parts):
    degrees, genlists = zip(*parts)
    total = sum(degrees)
    gens = []
    offset = 0
    for degree, part_gens in parts:
        for g in part_gens:
            gens.append(perms.shift(g, offset, total))
        offset += degree
    return total, gens


def _split_generators(body):
    """Split 'perm:' body on commas that separate cycle products."""
    out, depth, current = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {body!r}")
        if ch == "," and depth == 0:
            out.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise ParseError(f"unbalanced parentheses in {body!r}")
    out.append("".join(current))
    return [s.strip() for s in out]


def parse_group(spec: str, element_cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """Build a PermGroup from a group spec string."""
    spec = spec.strip()
    if spec.startswith("name:"):
        body = spec[len("name:"):].strip()
        if not body:
            raise ParseError("empty catalog name")
        parts = [_construct_name(piece) for piece in body.split("x")]
        degree, gens = parts[0] if len(parts) == 1 else _direct_product(parts)
    elif spec.startswith("perm:"):
        body = spec[len("perm:"):].strip()
        if not body:
            raise ParseError("empty permutation list")
        raw = [perms.parse_cycles(tok) for tok in _split_generators(body)]
        degree = max(len(p) for p in raw)
        gens = [perms.extend(p, degree) for p in raw]
    else:
        raise ParseError(
            f"group spec must start with 'name:' or 'perm:', got {spec!r}")
    if degree > element_cap:
        raise ParseError(
            f"degree {degree} exceeds the element enumeration cap {element_cap}")
    return PermGroup(degree, gens, label=spec, element_cap=element_cap)
