"""Finite permutation group engine.

Groups are given by generators on points 0..n-1 (1-based in cycle-notation
I/O).  Orders and membership come from a deterministic stabilizer chain;
element lists, conjugacy classes, subgroup machinery and the subgroup
census come from capped exhaustive enumeration, with all orderings fixed so
downstream output is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import lcm

from . import kernels, perms
from .config import DEFAULT_ELEMENT_CAP, DEFAULT_SUBGROUP_CAP
from .errors import CapExceeded, GroupMismatch


@dataclass(frozen=True)
class ConjugacyClass:
    representative: perms.Perm
    size: int
    element_order: int
    members: tuple[int, ...]  # indices into the parent group's element list


class PermGroup:
    """A finite permutation group with cached derived data.

    Instances are immutable after construction; every cached attribute is a
    pure function of (degree, generators), so concurrent use is safe.
    """

    def __init__(self, degree, generators=(), label=None,
                 element_cap=DEFAULT_ELEMENT_CAP):
        if degree < 1:
            raise ValueError("degree must be >= 1")
        seen = []
        for g in generators:
            g = tuple(g)
            if len(g) != degree:
                raise GroupMismatch(
                    f"generator degree {len(g)} != group degree {degree}")
            if sorted(g) != list(range(degree)):
                raise ValueError(f"not a permutation of 0..{degree - 1}: {g}")
            if not perms.is_identity(g) and g not in seen:
                seen.append(g)
        self.degree = degree
        self.generators = tuple(seen)
        self.element_cap = element_cap
        self.label = label if label is not None else self._default_label()

    def _default_label(self):
        if not self.generators:
            return "perm:()"
        return "perm:" + ",".join(perms.format_cycles(g) for g in self.generators)

    def __repr__(self):
        return f"PermGroup({self.label!r}, degree={self.degree})"

    # --- stabilizer chain -------------------------------------------------

    @cached_property
    def _chain(self):
        return _build_chain(self.generators, self.degree)

    @cached_property
    def order(self) -> int:
        result = 1
        for level in self._chain:
            result *= len(level.transversal)
        return result

    def contains(self, g) -> bool:
        g = tuple(g)
        if len(g) != self.degree:
            raise GroupMismatch(
                f"permutation degree {len(g)} != group degree {self.degree}")
        residue, _ = _sift(self._chain, g)
        return perms.is_identity(residue)

    # --- exhaustive data --------------------------------------------------

    @cached_property
    def elements(self) -> tuple[perms.Perm, ...]:
        """All elements, lexicographically sorted; capped enumeration."""
        return tuple(kernels.closure(self.degree, self.generators,
                                     cap=self.element_cap))

    @cached_property
    def element_index(self) -> dict[perms.Perm, int]:
        return {p: i for i, p in enumerate(self.elements)}

    @cached_property
    def identity(self) -> perms.Perm:
        return perms.identity(self.degree)

    @cached_property
    def _raw_class_data(self):
        elements = self.elements
        labels = kernels.conjugacy_labels(elements, self.generators,
                                          self.element_index)
        members: dict[int, list[int]] = {}
        for idx, lab in enumerate(labels):
            members.setdefault(lab, []).append(idx)
        raw = []
        for lab, idxs in members.items():
            rep = elements[idxs[0]]  # minimal: first-seen over sorted scan
            raw.append((perms.order(rep), len(idxs), rep, tuple(idxs), lab))
        raw.sort(key=lambda t: (t[0], t[1], t[2]))
        classes = tuple(
            ConjugacyClass(rep, size, eorder, idxs)
            for eorder, size, rep, idxs, _ in raw)
        relabel = {old: new for new, (*_, old) in enumerate(raw)}
        class_of = tuple(relabel[lab] for lab in labels)
        return classes, class_of

    @cached_property
    def classes(self) -> tuple[ConjugacyClass, ...]:
        """Conjugacy classes ordered by (element order, size, minimal rep)."""
        return self._raw_class_data[0]

    @cached_property
    def class_of(self) -> tuple[int, ...]:
        """Class id of each element, aligned with the element list."""
        return self._raw_class_data[1]

    def class_id_of(self, g) -> int:
        return self.class_of[self.element_index[tuple(g)]]

    @cached_property
    def exponent(self) -> int:
        return lcm(*(c.element_order for c in self.classes))

    @cached_property
    def inverse_indices(self) -> tuple[int, ...]:
        return tuple(kernels.inverse_indices(self.elements, self.element_index))

    @cached_property
    def inverse_class(self) -> tuple[int, ...]:
        """Class id of the inverses of each class."""
        return tuple(self.class_id_of(perms.inverse(c.representative))
                     for c in self.classes)

    def centralizer_order(self, class_id: int) -> int:
        return self.order // self.classes[class_id].size

    def power_class(self, class_id: int, t: int) -> int:
        """Class id of rep**t for the given class."""
        return self.class_id_of(perms.power(self.classes[class_id].representative, t))

    # --- subgroups ----------------------------------------------------------

    def subgroup(self, elements, label=None) -> "SubgroupRecord":
        """Record for a subgroup given by its full, closed element list."""
        els = tuple(sorted(tuple(p) for p in elements))
        for p in els:
            if p not in self.element_index:
                raise GroupMismatch("element outside the parent group")
        normal = _is_union_of_classes(self, els)
        return SubgroupRecord(parent=self, elements=els, order=len(els),
                              is_normal=normal, label=label)

    def generated_subgroup(self, seed, label=None) -> "SubgroupRecord":
        """Smallest subgroup containing ``seed``; empty seed gives trivial."""
        seed = [tuple(p) for p in seed]
        for p in seed:
            if tuple(p) not in self.element_index:
                raise GroupMismatch("seed element outside the parent group")
        els = kernels.closure(self.degree, seed, cap=self.order)
        return self.subgroup(els, label=label)

    @cached_property
    def full_record(self) -> "SubgroupRecord":
        rec = self.subgroup(self.elements, label=self.label)
        rec._group = self
        rec._gens = self.generators
        return rec

    @cached_property
    def trivial_record(self) -> "SubgroupRecord":
        return self.subgroup([self.identity], label="1")


def order_and_membership(G: PermGroup, g) -> tuple[int, bool]:
    """Group order via the stabilizer chain, membership via sifting."""
    return G.order, G.contains(g)


@dataclass(eq=False)
class SubgroupRecord:
    """A subgroup of a fixed parent, stored by its sorted element list."""

    parent: PermGroup
    elements: tuple[perms.Perm, ...]
    order: int
    is_normal: bool
    is_maximal: bool | None = None
    label: str | None = None
    _group: PermGroup | None = field(default=None, repr=False)
    _fusion: tuple[int, ...] | None = field(default=None, repr=False)
    _gens: tuple[perms.Perm, ...] | None = field(default=None, repr=False)

    @cached_property
    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    @property
    def generators(self) -> tuple[perms.Perm, ...]:
        if self._gens is None:
            self._gens = _small_generating_set(self.parent.degree, self.elements)
        return self._gens

    def group(self) -> PermGroup:
        """The subgroup as a standalone group on the parent's points.

        Views are cached on the parent by element set, so records describing
        the same subgroup share one group object (class functions on it
        compare and combine freely).
        """
        if self._group is None:
            if self.order == self.parent.order:
                self._group = self.parent
            else:
                views = self.parent.__dict__.setdefault("_subgroup_views", {})
                view = views.get(self.element_set)
                if view is None:
                    view = PermGroup(self.parent.degree, self.generators,
                                     label=self.describe(),
                                     element_cap=self.parent.element_cap)
                    views[self.element_set] = view
                self._group = view
        return self._group

    def fusion(self) -> tuple[int, ...]:
        """Map each own conjugacy class to the parent class containing it."""
        if self._fusion is None:
            H = self.group()
            self._fusion = tuple(self.parent.class_id_of(c.representative)
                                 for c in H.classes)
        return self._fusion

    def describe(self) -> str:
        if self.label:
            return self.label
        gens = ",".join(perms.format_cycles(g) for g in self.generators)
        return f"perm:{gens}" if gens else "perm:()"

    def __repr__(self):
        return f"SubgroupRecord(order={self.order}, normal={self.is_normal})"


def _small_generating_set(degree, elements):
    gens: list[perms.Perm] = []
    have = {perms.identity(degree)}
    for x in elements:
        if x not in have:
            gens.append(x)
            have = set(kernels.closure(degree, gens, cap=len(elements)))
            if len(have) == len(elements):
                break
    return tuple(gens)


def _is_union_of_classes(G: PermGroup, elements) -> bool:
    ids = {G.class_id_of(p) for p in elements}
    return sum(G.classes[i].size for i in ids) == len(elements)


# --- stabilizer chain ---------------------------------------------------


class _Level:
    __slots__ = ("base", "gens", "transversal")

    def __init__(self, base, n):
        self.base = base
        self.gens: list[perms.Perm] = []  # strong gens first fixed at this level
        self.transversal: dict[int, perms.Perm] = {base: perms.identity(n)}


def _sift(levels, p, start=0):
    """Reduce p through the chain; returns (residue, stuck level index)."""
    for i in range(start, len(levels)):
        level = levels[i]
        x = p[level.base]
        if x == level.base:
            continue
        t = level.transversal.get(x)
        if t is None:
            return p, i
        p = perms.mult(p, perms.inverse(t))
    return p, len(levels)


def _build_chain(generators, n):
    """Deterministic Schreier-Sims.

    Level i's stabilizer subgroup is generated by the gens of all levels
    >= i; ``complete`` establishes, bottom-up, that every Schreier generator
    sifts to the identity, which makes the orbit product the group order.
    """
    levels: list[_Level] = []

    def gens_below(i):
        return [g for lvl in levels[i:] for g in lvl.gens]

    def rebuild(i):
        level = levels[i]
        gens = gens_below(i)
        trans = {level.base: perms.identity(n)}
        queue = [level.base]
        while queue:
            x = queue.pop(0)
            tx = trans[x]
            for g in gens:
                y = g[x]
                if y not in trans:
                    trans[y] = perms.mult(tx, g)
                    queue.append(y)
        level.transversal = trans

    def add_gen_at(j, p):
        if j == len(levels):
            base = min(k for k in range(n) if p[k] != k)
            levels.append(_Level(base, n))
        levels[j].gens.append(p)

    def complete(i):
        rebuild(i)
        restart = True
        while restart:
            restart = False
            level = levels[i]
            gens = gens_below(i)
            for x in sorted(level.transversal):
                tx = level.transversal[x]
                for g in gens:
                    y = g[x]
                    ty = level.transversal[y]
                    schreier = perms.mult(perms.mult(tx, g), perms.inverse(ty))
                    if perms.is_identity(schreier):
                        continue
                    residue, j = _sift(levels, schreier, i + 1)
                    if perms.is_identity(residue):
                        continue
                    add_gen_at(j, residue)
                    for k in range(min(j, len(levels) - 1), i, -1):
                        complete(k)
                    rebuild(i)
                    restart = True
                    break
                if restart:
                    break

    for g in generators:
        g = tuple(g)
        if not perms.is_identity(g):
            add_gen_at(0, g)
    if levels:
        complete(0)
    return levels


# --- derived series -----------------------------------------------------


def _normal_closure_in(G: PermGroup, seed_gens, ambient_gens):
    """Elements of the smallest ambient-normal subgroup containing seed."""
    gens = [g for g in seed_gens if not perms.is_identity(g)]
    els = kernels.closure(G.degree, gens, cap=G.order)
    changed = True
    while changed:
        changed = False
        have = set(els)
        for k in list(gens):
            for h in ambient_gens:
                c = perms.conjugate(k, h)
                if c not in have:
                    gens.append(c)
                    els = kernels.closure(G.degree, gens, cap=G.order)
                    have = set(els)
                    changed = True
    return els


def derived_subgroup_elements(G: PermGroup, gens):
    comms = []
    for a in gens:
        for b in gens:
            c = perms.commutator(a, b)
            if not perms.is_identity(c):
                comms.append(c)
    if not comms:
        return [G.identity]
    return _normal_closure_in(G, comms, gens)


def derived_series(G: PermGroup):
    """([G, G', G'', ...], metabelian?, |G:G'|), ending at the stable term."""
    cached = G.__dict__.get("_derived_series")
    if cached is None:
        cached = _compute_derived_series(G)
        G.__dict__["_derived_series"] = cached
    return cached


def _compute_derived_series(G: PermGroup):
    series = [G.full_record]
    while series[-1].order > 1:
        rec = series[-1]
        els = derived_subgroup_elements(G, rec.generators)
        if len(els) == rec.order:  # perfect term repeats from here on
            break
        series.append(G.subgroup(els))
    if len(series) >= 3:
        metabelian = series[2].order == 1
    else:
        metabelian = series[-1].order == 1
    derived_order = series[1].order if len(series) > 1 else series[0].order
    return series, metabelian, G.order // derived_order


def derived_record(G: PermGroup) -> SubgroupRecord:
    series, _, _ = derived_series(G)
    return series[1] if len(series) > 1 else series[0]


# --- subgroup census ----------------------------------------------------


def subgroups_up_to_conjugacy(G: PermGroup, cap=DEFAULT_SUBGROUP_CAP):
    """One representative per conjugacy class of subgroups.

    Seeds with the cyclic subgroups of class representatives and extends
    each new class by one outside generator (one per orbit of the subgroup's
    conjugation action), deduplicating via the full conjugate-set index.
    Representatives are canonical: the lexicographically least conjugate.
    """
    if G.order > cap:
        raise CapExceeded(
            f"|G| = {G.order} exceeds the subgroup enumeration cap {cap}")
    degree = G.degree
    elements = G.elements

    reps: list[tuple[perms.Perm, ...]] = []
    rep_gens: list[tuple[perms.Perm, ...]] = []
    conj_sets: list[list[frozenset]] = []
    by_set: dict[frozenset, int] = {}

    def register(els, gens):
        """Record a new class; returns its temporary index."""
        seen = {frozenset(els)}
        for g in elements:
            seen.add(frozenset(kernels.conjugate_elements(els, g)))
        canonical = min(seen, key=lambda s: tuple(sorted(s)))
        canon_els = tuple(sorted(canonical))
        if canon_els != tuple(els):
            gens = _small_generating_set(degree, canon_els)
        idx = len(reps)
        reps.append(canon_els)
        rep_gens.append(tuple(gens))
        conj_sets.append(sorted(seen, key=lambda s: tuple(sorted(s))))
        for s in seen:
            by_set[s] = idx
        return idx

    trivial = (G.identity,)
    register(trivial, ())
    layer = []
    for cls in G.classes[1:]:
        x = cls.representative
        els = kernels.closure(degree, [x], cap=G.order)
        fs = frozenset(els)
        if fs not in by_set:
            layer.append(register(tuple(els), (x,)))

    while layer:
        next_layer = []
        for idx in layer:
            h_els = reps[idx]
            h_gens = rep_gens[idx]
            if len(h_els) == G.order:
                continue
            # one extension candidate per orbit of H conjugating G - H
            seen = set(h_els)
            conj_pairs = [(h, perms.inverse(h)) for h in h_els]
            for g in elements:
                if g in seen:
                    continue
                for h, hinv in conj_pairs:
                    seen.add(perms.conjugate(g, h, hinv))
                new_els = kernels.closure(degree, list(h_gens) + [g],
                                          cap=G.order)
                fs = frozenset(new_els)
                if fs not in by_set:
                    next_layer.append(
                        register(tuple(new_els), tuple(h_gens) + (g,)))
        layer = next_layer

    order_index = sorted(range(len(reps)), key=lambda i: (len(reps[i]), reps[i]))
    records = []
    for i in order_index:
        rec = SubgroupRecord(parent=G, elements=reps[i], order=len(reps[i]),
                             is_normal=len(conj_sets[i]) == 1)
        rec._gens = rep_gens[i]
        rec._all_conjugate_sets = conj_sets[i]
        records.append(rec)

    _mark_maximal(G, records)
    return records


def _mark_maximal(G: PermGroup, records):
    from collections import Counter

    profiles = [Counter(G.class_id_of(p) for p in rec.elements)
                for rec in records]
    for i, rec in enumerate(records):
        if rec.order == G.order:
            rec.is_maximal = False
            continue
        maximal = True
        for j, other in enumerate(records):
            if other.order <= rec.order or other.order == G.order:
                continue
            if other.order % rec.order != 0:
                continue
            if any(profiles[i][c] > profiles[j][c] for c in profiles[i]):
                continue
            if any(cs <= other.element_set
                   for cs in rec._all_conjugate_sets):
                maximal = False
                break
        rec.is_maximal = maximal


def class_fusion(G: PermGroup, H: SubgroupRecord) -> tuple[int, ...]:
    """Map from H's class ids to the parent class ids containing them."""
    if H.parent is not G:
        raise GroupMismatch("subgroup record belongs to a different group")
    return H.fusion()


# --- subgroups containing a normal subgroup ------------------------------


def coset_decomposition(G: PermGroup, N: SubgroupRecord):
    """(coset id per element, coset representatives); identity coset is 0."""
    if not N.is_normal:
        raise ValueError("coset group requires a normal subgroup")
    coset_of = [-1] * G.order
    cosets: list[list[int]] = []
    reps = []
    n_els = N.elements
    for idx, x in enumerate(G.elements):
        if coset_of[idx] >= 0:
            continue
        cid = len(cosets)
        members = []
        for n in n_els:
            j = G.element_index[perms.mult(n, x)]
            coset_of[j] = cid
            members.append(j)
        cosets.append(members)
        reps.append(min(G.elements[j] for j in members))
    return tuple(coset_of), tuple(reps)


def coset_multiplication(G: PermGroup, coset_of, reps):
    m = len(reps)
    table = [[0] * m for _ in range(m)]
    for a in range(m):
        for b in range(m):
            prod = perms.mult(reps[a], reps[b])
            table[a][b] = coset_of[G.element_index[prod]]
    return table


def _all_subgroups_of_table(table):
    """Every subgroup of a small group given by its multiplication table."""
    m = len(table)

    def close(seed):
        have = {0}
        frontier = [0]
        while frontier:
            new = []
            for x in frontier:
                for g in seed:
                    y = table[x][g]
                    if y not in have:
                        have.add(y)
                        new.append(y)
            frontier = new
        return frozenset(have)

    found = {frozenset([0]): ()}
    layer = [frozenset([0])]
    while layer:
        next_layer = []
        for sub in layer:
            gens = found[sub]
            for g in range(m):
                if g in sub:
                    continue
                new = close(gens + (g,))
                if new not in found:
                    found[new] = gens + (g,)
                    next_layer.append(new)
        layer = next_layer
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def subgroups_containing(G: PermGroup, N: SubgroupRecord):
    """All subgroups N <= H <= G, via the subgroup lattice of G/N."""
    coset_of, reps = coset_decomposition(G, N)
    table = coset_multiplication(G, coset_of, reps)
    records = []
    for sub in _all_subgroups_of_table(table):
        members = [G.elements[i] for i in range(G.order) if coset_of[i] in sub]
        records.append(G.subgroup(members))
    return records


def is_cyclic_quotient(G: PermGroup, N: SubgroupRecord) -> bool:
    coset_of, reps = coset_decomposition(G, N)
    table = coset_multiplication(G, coset_of, reps)
    m = len(reps)
    for g in range(m):
        x = g
        size = 1
        while x != 0:
            x = table[x][g]
            size += 1
        if size == m:
            return True
    return m == 1
