"""Class-function algebra.

Class functions are value vectors over the conjugacy classes of a fixed
group, with exact cyclotomic entries.  Restriction and induction are
evaluated class-by-class through the subgroup's fusion map, so every
operation stays exact and costs O(number of classes).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import cyclotomic as cy
from .errors import GroupMismatch, NotACharacter
from .permgroup import PermGroup, SubgroupRecord


@dataclass(frozen=True)
class ClassFunction:
    group: PermGroup
    values: tuple[cy.Cyclotomic, ...]

    def __post_init__(self):
        if len(self.values) != len(self.group.classes):
            raise GroupMismatch("value count differs from class count")

    @property
    def degree_value(self) -> cy.Cyclotomic:
        return self.values[0]

    def degree(self) -> int:
        d = self.values[0].as_integer()
        if d is None:
            raise NotACharacter("degree is not an integer")
        return d

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        _same_group(self, other)
        return ClassFunction(self.group,
                             tuple(a * b for a, b in zip(self.values, other.values)))

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        _same_group(self, other)
        return ClassFunction(self.group,
                             tuple(a + b for a, b in zip(self.values, other.values)))

    def scaled(self, q) -> "ClassFunction":
        q = cy.rational(q)
        return ClassFunction(self.group, tuple(q * v for v in self.values))

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.group, tuple(v.conjugate() for v in self.values))

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def sort_key(self):
        return tuple(v.sort_key() for v in self.values)

    def render(self) -> str:
        return "(" + ", ".join(v.text() for v in self.values) + ")"

    def to_json(self) -> list:
        return [v.to_json() for v in self.values]


def _same_group(a: ClassFunction, b: ClassFunction) -> None:
    if a.group is not b.group:
        raise GroupMismatch("class functions live on different groups")


def trivial_character(G: PermGroup) -> ClassFunction:
    return ClassFunction(G, (cy.ONE,) * len(G.classes))


def regular_character(G: PermGroup) -> ClassFunction:
    values = [cy.rational(G.order)] + [cy.ZERO] * (len(G.classes) - 1)
    return ClassFunction(G, tuple(values))


def inner_product(a: ClassFunction, b: ClassFunction) -> cy.Cyclotomic:
    """[a, b] = (1/|G|) sum over classes of |C| a(C) conj(b(C))."""
    _same_group(a, b)
    G = a.group
    terms = [(Fraction(c.size, G.order), av, bv.conjugate())
             for c, av, bv in zip(G.classes, a.values, b.values)]
    return cy.sum_products(terms)


def norm_is_one(chi: ClassFunction) -> bool:
    return inner_product(chi, chi) == 1


def restrict(chi: ClassFunction, H: SubgroupRecord) -> ClassFunction:
    """Restriction along the class fusion of H into chi's group."""
    if H.parent is not chi.group:
        raise GroupMismatch("subgroup record belongs to a different group")
    fusion = H.fusion()
    return ClassFunction(H.group(), tuple(chi.values[c] for c in fusion))


def induce(theta: ClassFunction, G: PermGroup) -> ClassFunction:
    """Induced class function, evaluated through fusion.

    The value on a class of G with representative g is
    |C_G(g)|/|H| times the sum of |D| theta(D) over the H-classes D fusing
    into the class of g.
    """
    H = theta.group
    if H.degree != G.degree:
        raise GroupMismatch("subgroup acts on a different point set")
    for gen in H.generators:
        if not G.contains(gen):
            raise GroupMismatch("not a subgroup: generator outside the group")
    fused: dict[int, list[int]] = {}
    for hc, cls in enumerate(H.classes):
        fused.setdefault(G.class_id_of(cls.representative), []).append(hc)
    values = []
    for k in range(len(G.classes)):
        pieces = fused.get(k)
        if not pieces:
            values.append(cy.ZERO)
            continue
        cent = Fraction(G.centralizer_order(k), H.order)
        total = cy.sum_products(
            [(cent * H.classes[hc].size, theta.values[hc], cy.ONE)
             for hc in pieces])
        values.append(total)
    return ClassFunction(G, tuple(values))


def decompose(chi: ClassFunction, table) -> tuple[int, ...]:
    """Multiplicities of chi over the table's irreducible rows.

    Raises NotACharacter when any inner product is not a nonnegative
    integer (the input was not a character of this group).
    """
    _same_group(chi, table.rows[0])
    mults = []
    for row in table.rows:
        m = inner_product(chi, row).as_rational()
        if m is None or m.denominator != 1 or m < 0:
            raise NotACharacter(
                f"inner product with an irreducible is {m}, not a "
                "nonnegative integer")
        mults.append(int(m))
    recon = None
    for m, row in zip(mults, table.rows):
        if m:
            part = row.scaled(m)
            recon = part if recon is None else recon + part
    if recon is None:
        recon = ClassFunction(chi.group, (cy.ZERO,) * len(chi.values))
    if recon.values != chi.values:
        raise NotACharacter("multiplicities do not reconstruct the input")
    return tuple(mults)


def constituents(chi: ClassFunction, table) -> tuple[int, ...]:
    """Indices of rows appearing in chi with positive multiplicity."""
    return tuple(i for i, m in enumerate(decompose(chi, table)) if m)


def vanishing_off_subgroup(chi: ClassFunction) -> SubgroupRecord:
    """Subgroup generated by all elements where chi does not vanish.

    Generated by a union of classes, hence always normal; rejects the zero
    function.
    """
    if chi.is_zero():
        raise ValueError("the zero function has no vanishing-off subgroup")
    G = chi.group
    seed = []
    for cls, value in zip(G.classes, chi.values):
        if not value.is_zero():
            seed.extend(G.elements[i] for i in cls.members)
    return G.generated_subgroup(seed)


def linear_characters_with_kernel_containing(table, H: SubgroupRecord):
    """The |G:H| degree-1 rows whose kernel contains H (needs G' <= H)."""
    G = table.group
    if H.parent is not G:
        raise GroupMismatch("subgroup record belongs to a different group")
    from .permgroup import derived_record

    derived = derived_record(G)
    if not derived.element_set <= H.element_set:
        raise ValueError("the derived subgroup is not contained in H")
    met = {G.class_of[G.element_index[p]] for p in H.elements}
    out = []
    for row in table.rows:
        if row.values[0] == 1 and all(row.values[c] == 1 for c in met):
            out.append(row)
    expected = G.order // H.order
    if len(out) != expected:
        raise AssertionError(
            f"found {len(out)} linear characters, expected index {expected}")
    return tuple(out)


@dataclass(frozen=True)
class OrbitData:
    base: ClassFunction
    acting: tuple[ClassFunction, ...]
    orbit: tuple[ClassFunction, ...]
    stabilizer: tuple[ClassFunction, ...]


def orbit_and_stabilizer(chi: ClassFunction, H: SubgroupRecord, table) -> OrbitData:
    """Orbit and stabilizer of chi under multiplication by the linear
    characters trivial on H (requires G' <= H)."""
    acting = linear_characters_with_kernel_containing(table, H)
    orbit = [chi]
    seen = {chi.values}
    stab = []
    for lam in acting:
        prod = lam * chi
        if prod.values == chi.values:
            stab.append(lam)
        if prod.values not in seen:
            seen.add(prod.values)
            orbit.append(prod)
    if len(orbit) * len(stab) != len(acting):
        raise AssertionError("orbit-stabilizer identity failed")
    return OrbitData(base=chi, acting=acting, orbit=tuple(orbit),
                     stabilizer=tuple(stab))
