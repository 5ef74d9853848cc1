from fractions import Fraction

import pytest
from conftest import context, permutation_character_on_cosets

from charkit import classfun
from charkit import cyclotomic as cy
from charkit import parse_group, perms
from charkit.classfun import (ClassFunction, decompose, induce, inner_product,
                              linear_characters_with_kernel_containing,
                              orbit_and_stabilizer, regular_character,
                              restrict, trivial_character,
                              vanishing_off_subgroup)
from charkit.errors import GroupMismatch, NotACharacter

SMALL_CATALOG = ["name:C1", "name:C2", "name:C6", "name:C2xC4", "name:S3",
                 "name:D4", "name:Q8", "name:A4", "name:D6", "name:F21",
                 "name:SL23", "name:F20", "name:ES27", "name:S4", "name:Q16"]


def test_inner_product_basics():
    S3 = context("name:S3")
    one = trivial_character(S3.group)
    assert inner_product(one, one) == 1
    reg = regular_character(S3.group)
    for d, row in zip(S3.table.degrees, S3.table.rows):
        assert inner_product(reg, row) == d
    assert inner_product(S3.table.rows[2], S3.table.rows[2]) == 1
    with pytest.raises(GroupMismatch):
        inner_product(one, trivial_character(context("name:C2").group))


def test_restrict_examples():
    S4 = context("name:S4")
    a4 = S4.derived
    one = trivial_character(S4.group)
    assert all(v == 1 for v in restrict(one, a4).values)
    # a degree-3 row restricts irreducibly to the derived subgroup
    chi3 = S4.table.rows[3]
    res = restrict(chi3, a4)
    assert inner_product(res, res) == 1
    # the Q8 degree-2 row splits into two distinct linears on a normal C4
    Q8 = context("name:Q8")
    c4 = next(r for r in Q8.census if r.order == 4)
    res = restrict(Q8.table.rows[4], c4)
    mults = decompose(res, Q8.subgroup_table(c4))
    assert sorted(mults) == [0, 0, 1, 1]


def test_induce_trivial_gives_permutation_character():
    for spec in ["name:S4", "name:A5"]:
        ctx = context(spec)
        for rec in ctx.census:
            theta = trivial_character(rec.group())
            ind = induce(theta, ctx.group)
            expected = permutation_character_on_cosets(ctx.group, rec)
            assert [v.as_rational() for v in ind.values] == expected


def test_induce_at_full_group_is_identity():
    S4 = context("name:S4")
    for row in S4.table.rows:
        assert induce(row, S4.group).values == row.values


def test_induce_linear_from_index_two():
    S3 = context("name:S3")
    a3 = S3.derived
    sub_table = S3.subgroup_table(a3)
    nontrivial = sub_table.rows[1]
    ind = induce(nontrivial, S3.group)
    assert ind.values == S3.table.rows[2].values  # the degree-2 row


def test_induce_from_d4_gives_degree_three():
    S4 = context("name:S4")
    d4 = next(r for r in S4.census if r.order == 8)
    hits = set()
    for lam in S4.subgroup_table(d4).rows:
        if lam.degree() != 1:
            continue
        ind = induce(lam, S4.group)
        if inner_product(ind, ind) == 1:
            hits.add(S4.table.row_index(ind))
    assert hits == {3, 4}  # both degree-3 rows arise


def test_frobenius_reciprocity_sweep():
    """[theta^G, chi] = [theta, chi_H] for every subgroup of every
    catalog group of order <= 48."""
    for spec in SMALL_CATALOG:
        ctx = context(spec)
        if ctx.group.order > 48:
            continue
        for rec in ctx.census:
            sub_table = ctx.subgroup_table(rec)
            for theta in sub_table.rows:
                ind = induce(theta, ctx.group)
                for chi in ctx.table.rows:
                    lhs = inner_product(ind, chi)
                    rhs = inner_product(theta, restrict(chi, rec))
                    assert lhs == rhs, (spec, rec.order)


def test_degree_multiplies_by_index():
    A5 = context("name:A5")
    for rec in A5.census:
        index = A5.group.order // rec.order
        for theta in A5.subgroup_table(rec).rows:
            assert induce(theta, A5.group).degree() == index * theta.degree()


def test_decompose_examples():
    S3 = context("name:S3")
    assert decompose(regular_character(S3.group), S3.table) == (1, 1, 2)
    S4 = context("name:S4")
    natural = ClassFunction(S4.group, tuple(
        cy.rational(sum(1 for i in range(4) if c.representative[i] == i))
        for c in S4.group.classes))
    assert decompose(natural, S4.table) == (1, 0, 0, 1, 0)
    for i, row in enumerate(S4.table.rows):
        expected = tuple(1 if j == i else 0 for j in range(5))
        assert decompose(row, S4.table) == expected


def test_decompose_rejects_non_characters():
    S3 = context("name:S3")
    bad = ClassFunction(S3.group, (cy.rational(Fraction(1, 2)), cy.ZERO,
                                   cy.ZERO))
    with pytest.raises(NotACharacter):
        decompose(bad, S3.table)


def test_vanishing_off_examples():
    S4 = context("name:S4")
    for row in S4.table.rows[:2]:  # linear characters never vanish
        assert vanishing_off_subgroup(row).order == 24
    assert vanishing_off_subgroup(S4.table.rows[3]).order == 24
    # the degree-2 row of S4 has support exactly on the index-2 subgroup
    assert vanishing_off_subgroup(S4.table.rows[2]).order == 12
    Q8 = context("name:Q8")
    v = vanishing_off_subgroup(Q8.table.rows[4])
    assert v.order == 2 and v.is_normal
    zero = ClassFunction(S4.group, (cy.ZERO,) * 5)
    with pytest.raises(ValueError):
        vanishing_off_subgroup(zero)


@pytest.mark.parametrize("spec", ["name:S4", "name:Q8", "name:A5", "name:F20"])
def test_vanishing_off_is_normal_and_recomputable(spec):
    ctx = context(spec)
    G = ctx.group
    for row in ctx.table.rows:
        v = vanishing_off_subgroup(row)
        assert v.is_normal
        support = [G.elements[i] for cls, val in zip(G.classes, row.values)
                   if not val.is_zero() for i in cls.members]
        again = G.generated_subgroup(support)
        assert again.elements == v.elements


def test_linear_characters_with_kernel_containing():
    S4 = context("name:S4")
    full = S4.group.full_record
    assert len(linear_characters_with_kernel_containing(S4.table, full)) == 1
    a4 = S4.derived
    lams = linear_characters_with_kernel_containing(S4.table, a4)
    assert len(lams) == 2  # trivial and sign
    assert {tuple(v.as_rational() for v in lam.values) for lam in lams} == {
        (1, 1, 1, 1, 1), (1, 1, -1, 1, -1)}
    tiny = S4.group.generated_subgroup([perms.parse_cycles("(1 2)", degree=4)])
    with pytest.raises(ValueError):
        linear_characters_with_kernel_containing(S4.table, tiny)


def test_orbit_and_stabilizer_examples():
    # abelian: translation by all linears is regular
    C6 = context("name:C6")
    orb = orbit_and_stabilizer(C6.table.rows[1], C6.group.trivial_record,
                               C6.table)
    assert len(orb.orbit) == 6 and len(orb.stabilizer) == 1
    # Q8 degree-2: fixed by all four linears
    Q8 = context("name:Q8")
    orb = orbit_and_stabilizer(Q8.table.rows[4], Q8.derived, Q8.table)
    assert len(orb.orbit) == 1 and len(orb.stabilizer) == 4
    # S4 degree-3: orbit of size two, trivial stabilizer
    S4 = context("name:S4")
    orb = orbit_and_stabilizer(S4.table.rows[3], S4.derived, S4.table)
    assert len(orb.orbit) == 2 and len(orb.stabilizer) == 1
    assert {S4.table.row_index(psi) for psi in orb.orbit} == {3, 4}


@pytest.mark.parametrize("spec", SMALL_CATALOG + ["name:A5", "name:S5"])
def test_orbit_stabilizer_identity_and_linear_products(spec):
    ctx = context(spec)
    linears = [row for row in ctx.table.rows if row.degree() == 1]
    for chi in ctx.table.rows:
        for lam in linears:
            prod = lam * chi
            assert inner_product(prod, prod) == 1  # stays irreducible
        orb = orbit_and_stabilizer(chi, ctx.derived, ctx.table)
        assert len(orb.orbit) * len(orb.stabilizer) == len(orb.acting)
        assert orb.orbit[0].values == chi.values


def test_induce_rejects_non_subgroups():
    S4 = context("name:S4")
    C5 = parse_group("name:C5")
    with pytest.raises(GroupMismatch):
        induce(trivial_character(C5), S4.group)
    # same degree but not contained
    H = parse_group("perm:(1 2 3 4)")
    odd = trivial_character(H)
    A4 = context("name:A4")
    with pytest.raises(GroupMismatch):
        induce(odd, A4.group)


def test_restrict_rejects_foreign_records():
    S4 = context("name:S4")
    Q8 = context("name:Q8")
    with pytest.raises(GroupMismatch):
        restrict(trivial_character(S4.group), Q8.derived)
