"""Acceptance suite: one test per exit criterion, each printing a
pass/fail line.  Every quantifier runs exhaustively at its stated
tolerance; the arithmetic is exact, so 'tolerance' is equality except for
the wall-clock bound in criterion 1."""

import time

from conftest import context

from charkit import classfun, parse_group
from charkit.chartab import character_table, verify_table_exact
from charkit.classify import classify_group, is_primitive
from charkit.cli import main
from charkit.verify import DEFAULT_CATALOG, run_check

METABELIAN = ["name:C1", "name:C2", "name:C6", "name:C2xC4", "name:S3",
              "name:D4", "name:D6", "name:Q8", "name:Q16", "name:A4",
              "name:F20", "name:F21", "name:ES27"]


def _report(criterion, message):
    print(f"PASS criterion {criterion}: {message}")


def test_criterion_1_exact_orthogonality_and_speed():
    """Both orthogonality relations and the degree-square sum hold exactly
    for every default-catalog group of order <= 120; each fresh table
    computation stays under 10 seconds."""
    timings = {}
    for spec in DEFAULT_CATALOG:
        G = parse_group(spec)
        assert G.order <= 120
        t0 = time.perf_counter()
        table = character_table(G)
        timings[spec] = time.perf_counter() - t0
        assert timings[spec] < 10.0, f"{spec} took {timings[spec]:.1f}s"
        # re-run the exact invariant suite explicitly (raises on failure)
        verify_table_exact(table)
        assert sum(d * d for d in table.degrees) == G.order
    worst = max(timings.values())
    _report(1, f"exact orthogonality on {len(timings)} tables, "
               f"slowest {worst:.2f}s")


def test_criterion_2_restriction_equivalence_sweep():
    """H V(chi) = G iff chi_H is irreducible, both directions, with trivial
    stabilizer when it holds, for every H between G' and G and every
    irreducible of every catalog group."""
    for spec in DEFAULT_CATALOG:
        ctx = context(spec)
        result = run_check("THM_RESTRICTION_EQUIV", ctx.group, ctx=ctx)
        assert result.status == "pass", result.to_json()
    _report(2, f"equivalence sweep over {len(DEFAULT_CATALOG)} groups, "
               "zero failures")


def test_criterion_3_quasi_primitive_and_primitive_restrictions():
    """Every quasi-primitive (hence every primitive) character restricts
    irreducibly to the derived subgroup, in every catalog group."""
    examined = 0
    for spec in DEFAULT_CATALOG:
        ctx = context(spec)
        for check in ("THM_QUASI_RESTRICT", "COR_PRIM_RESTRICT"):
            result = run_check(check, ctx.group, ctx=ctx)
            assert result.status == "pass", result.to_json()
            examined += result.details["examined"]
    _report(3, f"{examined} restriction checks, zero failures")


def test_criterion_4_divisibility_and_semiregularity():
    """|G:G'| divides the primitive and quasi-primitive counts, and the
    linear-character action on both sets is semiregular with orbits of
    size exactly |G:G'|."""
    for spec in DEFAULT_CATALOG:
        ctx = context(spec)
        result = run_check("THM_DIVISIBILITY", ctx.group, ctx=ctx)
        assert result.status == "pass", result.to_json()
        # independent recomputation of the orbit sizes
        index = ctx.derived_index
        flags = ctx.row_classifications
        for selector in ("primitive", "quasi_primitive"):
            members = [i for i, f in enumerate(flags)
                       if getattr(f, selector)]
            assert len(members) % index == 0
            for i in members:
                orb = classfun.orbit_and_stabilizer(
                    ctx.table.rows[i], ctx.derived, ctx.table)
                assert len(orb.stabilizer) == 1
                assert len(orb.orbit) == index
    _report(4, "divisibility plus semiregular action on all catalog groups")


def test_criterion_5_s4_witness_reproduced():
    """S4 has exactly two degree-3 rows; each is inhomogeneous on the
    normal four-group yet restricts irreducibly to the derived subgroup;
    the classification counts are (2, 2, 4)."""
    ctx = context("name:S4")
    table = ctx.table
    three = [i for i, d in enumerate(table.degrees) if d == 3]
    assert len(three) == 2
    v4 = next(r for r in ctx.census if r.order == 4 and r.is_normal)
    for i in three:
        chi = table.rows[i]
        mults = classfun.decompose(classfun.restrict(chi, v4),
                                   ctx.subgroup_table(v4))
        assert sum(1 for m in mults if m) == 3  # three distinct linears
        assert not ctx.row_classifications[i].quasi_primitive
        res = classfun.restrict(chi, ctx.derived)
        assert classfun.inner_product(res, res) == 1
    report = classify_group(ctx.group, ctx=ctx)
    counts = (report.count_primitive, report.count_quasi_primitive,
              report.count_full_vanishing_off)
    assert counts == (2, 2, 4)
    _report(5, "both degree-3 rows checked; counts (2, 2, 4) reproduced")


def test_criterion_6_metabelian_monomial_witnesses():
    """Every irreducible of every metabelian catalog group has a monomial
    witness with |G:H| = chi(1), and re-inducing each emitted witness
    reproduces the row exactly."""
    total = 0
    for spec in METABELIAN:
        ctx = context(spec)
        assert ctx.metabelian, spec
        result = run_check("COR_METABELIAN", ctx.group, ctx=ctx)
        assert result.status == "pass", result.to_json()
        G = ctx.group
        for w in result.details["witnesses"]:
            chi = ctx.table.rows[w["chi"]]
            assert G.order == w["degree"] * w["subgroupOrder"]
            # independent re-induction from the emitted spec string
            if w["subgroupOrder"] == G.order:
                lam = ctx.table.rows[w["linearIndex"]]
                assert lam.values == chi.values
            else:
                sub = parse_group(w["subgroup"])
                rec = G.subgroup(sub.elements)
                lam = character_table(rec.group()).rows[w["linearIndex"]]
                assert classfun.induce(lam, G).values == chi.values
            total += 1
    _report(6, f"{total} witnesses across {len(METABELIAN)} metabelian "
               "groups, all re-induced exactly")


def test_criterion_7_oracle_equivalence():
    """Maximal-subgroup primitivity equals all-subgroup primitivity for
    every catalog group of order <= 24."""
    checked = 0
    for spec in DEFAULT_CATALOG:
        ctx = context(spec)
        if ctx.group.order > 24:
            continue
        for chi in ctx.table.rows:
            assert is_primitive(ctx, chi) == \
                is_primitive(ctx, chi, use_all_subgroups=True)
            checked += 1
    _report(7, f"{checked} characters cross-checked against the "
               "all-subgroups oracle")


def test_criterion_8_inclusion_chain_with_strictness():
    """pri subset of qua subset of fullV everywhere; Q8 separates the
    chain from the full row set, S4 separates qua from fullV."""
    for spec in DEFAULT_CATALOG:
        ctx = context(spec)
        flags = ctx.row_classifications
        pri = {i for i, f in enumerate(flags) if f.primitive}
        qua = {i for i, f in enumerate(flags) if f.quasi_primitive}
        full = {i for i, f in enumerate(flags) if f.full_vanishing_off}
        assert pri <= qua <= full, spec
    q8 = context("name:Q8")
    q8_full = {i for i, f in enumerate(q8.row_classifications)
               if f.full_vanishing_off}
    assert len(q8_full) == 4 < len(q8.table.rows)  # fullV proper in Irr(G)
    s4 = context("name:S4")
    s4_flags = s4.row_classifications
    s4_qua = {i for i, f in enumerate(s4_flags) if f.quasi_primitive}
    s4_full = {i for i, f in enumerate(s4_flags) if f.full_vanishing_off}
    assert s4_qua < s4_full  # strict
    a5 = context("name:A5")
    a5_pri = {i for i, f in enumerate(a5.row_classifications) if f.primitive}
    a5_qua = {i for i, f in enumerate(a5.row_classifications)
              if f.quasi_primitive}
    assert a5_pri < a5_qua  # strict at the first inclusion too
    _report(8, "chain holds everywhere; strict at Q8, S4 (and A5)")


def test_criterion_9_byte_identical_reports(capsys):
    """Two full verify runs with the same seed produce byte-identical
    JSON reports."""
    argv = ["verify", "--check", "all", "--json", "--seed", "1"]
    assert main(list(argv)) == 0
    first = capsys.readouterr().out
    assert main(list(argv)) == 0
    second = capsys.readouterr().out
    assert first.encode() == second.encode()
    assert len(first.strip().split("\n")) == len(DEFAULT_CATALOG) * 9
    _report(9, f"two runs, {len(first.encode())} bytes each, identical")
