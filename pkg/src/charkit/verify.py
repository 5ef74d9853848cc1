"""Statement-by-statement verification harness.

Each check exhaustively evaluates one quantified character-theoretic
statement over a single group and reports pass/fail/skipped; a failure
always carries a reproducible witness.  run_suite sweeps a catalog of
group specs against a list of checks in a fixed order, so two runs with
the same configuration produce byte-identical reports.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import classfun, perms
from .catalog import parse_group
from .classify import GroupContext, monomial_witness
from .config import Config
from .errors import CapExceeded, CharkitError
from .permgroup import is_cyclic_quotient


@dataclass(frozen=True)
class CheckResult:
    check: str
    group: str
    status: str  # pass | fail | skipped
    reason: str | None = None
    witness: dict | None = None
    details: dict | None = None

    def to_json(self) -> dict:
        data = {"check": self.check, "group": self.group, "status": self.status}
        if self.reason is not None:
            data["reason"] = self.reason
        if self.witness is not None:
            data["witness"] = self.witness
        if self.details is not None:
            data["details"] = self.details
        return data

    def to_json_line(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True,
                          separators=(",", ":"))


def _pass(check, ctx, **details):
    return CheckResult(check, ctx.group.label, "pass",
                       details=details or None)


def _fail(check, ctx, witness):
    return CheckResult(check, ctx.group.label, "fail", witness=witness)


def _skip(check, label, reason):
    return CheckResult(check, label, "skipped", reason=reason)


# --- individual checks ----------------------------------------------------


def _classes_meeting(G, rec):
    return {G.class_of[G.element_index[p]] for p in rec.elements}


def check_lemma_orbit(ctx: GroupContext) -> CheckResult:
    """Induced constituents come in linear-character orbits.

    For every H containing the derived subgroup and every irreducible chi:
    each irreducible constituent xi of the restriction chi_H induces to
    e times the sum over the orbit of chi, that sum vanishes off H, the
    degree identity |G:H| xi(1) = e k chi(1) pins e, and the constituent
    set of xi^G for every xi in Irr(H) is exactly one orbit.
    """
    G = ctx.group
    table = ctx.table
    for rec in ctx.overgroups_of_derived:
        sub_table = ctx.subgroup_table(rec)
        met = _classes_meeting(G, rec)
        index = G.order // rec.order
        for i, chi in enumerate(table.rows):
            orb = classfun.orbit_and_stabilizer(chi, rec, table)
            orbit_sum = orb.orbit[0]
            for psi in orb.orbit[1:]:
                orbit_sum = orbit_sum + psi
            restriction = classfun.restrict(chi, rec)
            mults = classfun.decompose(restriction, sub_table)
            for xi_idx, e in enumerate(mults):
                if not e:
                    continue
                xi = sub_table.rows[xi_idx]
                induced = classfun.induce(xi, G)
                if induced.values != orbit_sum.scaled(e).values:
                    return _fail("LEMMA_ORBIT", ctx, {
                        "H": rec.describe(), "chi": i, "xi": xi_idx,
                        "multiplicity": e,
                        "reason": "induced constituent is not e times the orbit sum"})
                if index * xi.degree() != e * len(orb.orbit) * chi.degree():
                    return _fail("LEMMA_ORBIT", ctx, {
                        "H": rec.describe(), "chi": i, "xi": xi_idx,
                        "reason": "degree identity failed"})
            for k, value in enumerate(orbit_sum.values):
                if k not in met and not value.is_zero():
                    return _fail("LEMMA_ORBIT", ctx, {
                        "H": rec.describe(), "chi": i, "class": k,
                        "reason": "orbit sum does not vanish off H"})
        # corollary: constituents of xi^G form exactly one orbit
        for xi_idx, xi in enumerate(sub_table.rows):
            induced = classfun.induce(xi, G)
            parts = classfun.constituents(induced, table)
            first = table.rows[parts[0]]
            orbit = classfun.orbit_and_stabilizer(first, rec, table).orbit
            orbit_rows = {table.row_index(psi) for psi in orbit}
            if set(parts) != orbit_rows:
                return _fail("LEMMA_ORBIT", ctx, {
                    "H": rec.describe(), "xi": xi_idx,
                    "constituents": sorted(parts),
                    "orbit": sorted(orbit_rows),
                    "reason": "constituent set is not a single orbit"})
    return _pass("LEMMA_ORBIT", ctx,
                 subgroups=len(ctx.overgroups_of_derived),
                 rows=len(table.rows))


def check_restriction_equivalence(ctx: GroupContext) -> CheckResult:
    """H V(chi) = G iff chi_H is irreducible; both directions evaluated
    independently, and the stabilizer is trivial whenever they hold."""
    G = ctx.group
    table = ctx.table
    checked = 0
    for rec in ctx.overgroups_of_derived:
        for i, chi in enumerate(table.rows):
            V = ctx.vanishing_off(chi)
            product = G.generated_subgroup(
                tuple(rec.generators) + tuple(V.generators))
            lhs = product.order == G.order
            restriction = classfun.restrict(chi, rec)
            rhs = classfun.inner_product(restriction, restriction) == 1
            if lhs != rhs:
                return _fail("THM_RESTRICTION_EQUIV", ctx, {
                    "H": rec.describe(), "chi": i,
                    "H_times_V_is_G": lhs, "restriction_irreducible": rhs})
            if lhs:
                stab = classfun.orbit_and_stabilizer(chi, rec, table).stabilizer
                if len(stab) != 1:
                    return _fail("THM_RESTRICTION_EQUIV", ctx, {
                        "H": rec.describe(), "chi": i,
                        "stabilizer_size": len(stab),
                        "reason": "stabilizer is not trivial"})
            checked += 1
    return _pass("THM_RESTRICTION_EQUIV", ctx, pairs=checked)


def check_extend_cyclic(ctx: GroupContext) -> CheckResult:
    """Every invariant irreducible of a normal subgroup with cyclic
    quotient extends to the group (witnessed by an actual table row)."""
    G = ctx.group
    found = 0
    for rec in ctx.normal_subgroups:
        if not is_cyclic_quotient(G, rec):
            continue
        sub_table = ctx.subgroup_table(rec)
        H = rec.group()
        for phi_idx, phi in enumerate(sub_table.rows):
            if not _is_invariant(G, H, phi):
                continue
            found += 1
            if not any(classfun.restrict(chi, rec).values == phi.values
                       for chi in ctx.table.rows):
                return _fail("EXTEND_CYCLIC", ctx, {
                    "H": rec.describe(), "phi": phi_idx,
                    "reason": "no irreducible restricts to the invariant "
                              "character"})
    return _pass("EXTEND_CYCLIC", ctx, invariant_characters=found)


def _is_invariant(G, H, phi) -> bool:
    for g in G.generators:
        ginv = perms.inverse(g)
        for idx, cls in enumerate(H.classes):
            moved = perms.mult(perms.mult(g, cls.representative), ginv)
            if phi.values[H.class_id_of(moved)] != phi.values[idx]:
                return False
    return True


def check_quasi_restrict(ctx: GroupContext) -> CheckResult:
    """Quasi-primitive characters restrict irreducibly to the derived
    subgroup."""
    return _restrict_check(ctx, "THM_QUASI_RESTRICT",
                           lambda row: row.quasi_primitive)


def check_prim_restrict(ctx: GroupContext) -> CheckResult:
    """Primitive characters restrict irreducibly to the derived subgroup."""
    return _restrict_check(ctx, "COR_PRIM_RESTRICT",
                           lambda row: row.primitive)


def _restrict_check(ctx, check_id, selector) -> CheckResult:
    derived = ctx.derived
    examined = 0
    for i, (flags, chi) in enumerate(zip(ctx.row_classifications,
                                         ctx.table.rows)):
        if not selector(flags):
            continue
        examined += 1
        restriction = classfun.restrict(chi, derived)
        if classfun.inner_product(restriction, restriction) != 1:
            return _fail(check_id, ctx, {
                "chi": i, "degree": flags.degree,
                "reason": "restriction to the derived subgroup is reducible"})
    return _pass(check_id, ctx, examined=examined)


def check_metabelian(ctx: GroupContext) -> CheckResult:
    """Metabelian groups: every irreducible is monomial; the emitted
    witness list re-induces exactly (checked here and re-checkable)."""
    if not ctx.metabelian:
        return _skip("COR_METABELIAN", ctx.group.label, "group is not metabelian")
    G = ctx.group
    witnesses = []
    for i, chi in enumerate(ctx.table.rows):
        w = monomial_witness(ctx, chi)
        if w is None:
            return _fail("COR_METABELIAN", ctx, {
                "chi": i, "degree": chi.degree(),
                "reason": "no monomial witness found"})
        rec = ctx.census[w.subgroup_index]
        if rec.order == G.order:
            ok = ctx.table.rows[w.linear_index].values == chi.values
        else:
            lam = ctx.subgroup_table(rec).rows[w.linear_index]
            ok = classfun.induce(lam, G).values == chi.values
        if not ok:
            return _fail("COR_METABELIAN", ctx, {
                "chi": i, "reason": "witness does not re-induce to the row"})
        witnesses.append({"chi": i, "degree": chi.degree(),
                          "subgroup": rec.describe(),
                          "subgroupOrder": rec.order,
                          "linearIndex": w.linear_index})
    return _pass("COR_METABELIAN", ctx, witnesses=witnesses)


def check_divisibility(ctx: GroupContext) -> CheckResult:
    """|G:G'| divides both counts, and the linear-character action on the
    primitive and quasi-primitive sets is semiregular with full orbits
    that stay inside each set."""
    table = ctx.table
    flags = ctx.row_classifications
    index = ctx.derived_index
    pri = {i for i, f in enumerate(flags) if f.primitive}
    qua = {i for i, f in enumerate(flags) if f.quasi_primitive}
    if len(pri) % index or len(qua) % index:
        return _fail("THM_DIVISIBILITY", ctx, {
            "primitive": len(pri), "quasiPrimitive": len(qua),
            "index": index, "reason": "count not divisible by |G:G'|"})
    for name, members in (("primitive", pri), ("quasiPrimitive", qua)):
        for i in sorted(members):
            orb = classfun.orbit_and_stabilizer(table.rows[i], ctx.derived,
                                                table)
            if len(orb.stabilizer) != 1 or len(orb.orbit) != index:
                return _fail("THM_DIVISIBILITY", ctx, {
                    "set": name, "chi": i,
                    "orbit": len(orb.orbit),
                    "stabilizer": len(orb.stabilizer),
                    "reason": "action is not semiregular"})
            orbit_rows = {table.row_index(psi) for psi in orb.orbit}
            if not orbit_rows <= members:
                return _fail("THM_DIVISIBILITY", ctx, {
                    "set": name, "chi": i,
                    "reason": "orbit leaves the set"})
    return _pass("THM_DIVISIBILITY", ctx,
                 primitive=len(pri), quasiPrimitive=len(qua), index=index)


def check_chain(ctx: GroupContext) -> CheckResult:
    """Primitive implies quasi-primitive implies full vanishing-off, as
    computed sets."""
    flags = ctx.row_classifications
    for i, f in enumerate(flags):
        if f.primitive and not f.quasi_primitive:
            return _fail("CHAIN", ctx, {"chi": i, "reason":
                         "primitive but not quasi-primitive"})
        if f.quasi_primitive and not f.full_vanishing_off:
            return _fail("CHAIN", ctx, {"chi": i, "reason":
                         "quasi-primitive without full vanishing-off"})
    return _pass("CHAIN", ctx,
                 primitive=sum(1 for f in flags if f.primitive),
                 quasiPrimitive=sum(1 for f in flags if f.quasi_primitive),
                 fullVanishingOff=sum(1 for f in flags
                                      if f.full_vanishing_off))


_S4_CLASS_SIZES = [1, 3, 6, 6, 8]


def check_s4_remark(ctx: GroupContext) -> CheckResult:
    """The degree-3 rows of S4: not quasi-primitive (three distinct
    constituents on the normal four-group), yet irreducible on the derived
    subgroup."""
    G = ctx.group
    if G.order != 24 or sorted(c.size for c in G.classes) != _S4_CLASS_SIZES:
        return _skip("S4_REMARK", G.label,
                     "group does not match the S4 class signature")
    table = ctx.table
    three_rows = [i for i, d in enumerate(table.degrees) if d == 3]
    if len(three_rows) != 2:
        return _fail("S4_REMARK", ctx, {
            "degreeThreeRows": len(three_rows),
            "reason": "expected exactly two degree-3 rows"})
    # the normal four-group: identity plus the size-3 class of involutions
    four_class = next(c for c in G.classes if c.size == 3 and c.element_order == 2)
    v4 = G.generated_subgroup([G.elements[i] for i in four_class.members])
    if v4.order != 4 or not v4.is_normal:
        return _fail("S4_REMARK", ctx, {
            "order": v4.order, "reason": "four-group closure is wrong"})
    v4_table = ctx.subgroup_table(v4)
    for i in three_rows:
        chi = table.rows[i]
        mults = classfun.decompose(classfun.restrict(chi, v4), v4_table)
        if sum(1 for m in mults if m) != 3:
            return _fail("S4_REMARK", ctx, {
                "chi": i, "constituentsOnV4": sum(1 for m in mults if m),
                "reason": "restriction to the four-group is not three "
                          "distinct linears"})
        if ctx.row_classifications[i].quasi_primitive:
            return _fail("S4_REMARK", ctx, {
                "chi": i, "reason": "degree-3 row is quasi-primitive"})
        restriction = classfun.restrict(chi, ctx.derived)
        if classfun.inner_product(restriction, restriction) != 1:
            return _fail("S4_REMARK", ctx, {
                "chi": i,
                "reason": "restriction to the derived subgroup is reducible"})
    return _pass("S4_REMARK", ctx, degreeThreeRows=three_rows)


CHECKS = {
    "LEMMA_ORBIT": check_lemma_orbit,
    "THM_RESTRICTION_EQUIV": check_restriction_equivalence,
    "EXTEND_CYCLIC": check_extend_cyclic,
    "THM_QUASI_RESTRICT": check_quasi_restrict,
    "COR_PRIM_RESTRICT": check_prim_restrict,
    "COR_METABELIAN": check_metabelian,
    "THM_DIVISIBILITY": check_divisibility,
    "CHAIN": check_chain,
    "S4_REMARK": check_s4_remark,
}

ALL_CHECK_IDS = tuple(CHECKS)

DEFAULT_CATALOG = (
    "name:C1", "name:C2", "name:C6", "name:C2xC4", "name:S3", "name:D4",
    "name:Q8", "name:A4", "name:D6", "name:F21", "name:SL23", "name:F20",
    "name:ES27", "name:S4", "name:Q16", "name:A5", "name:S5",
)


def run_check(check_id: str, G, config: Config = Config(),
              ctx: GroupContext | None = None) -> CheckResult:
    """Run one check against one group; caps turn into skipped results."""
    if check_id not in CHECKS:
        raise ValueError(f"unknown check id {check_id!r}; "
                         f"known: {', '.join(ALL_CHECK_IDS)}")
    if ctx is None:
        ctx = GroupContext(G, config)
    try:
        return CHECKS[check_id](ctx)
    except CapExceeded as exc:
        return _skip(check_id, G.label, str(exc))


def run_suite(catalog, checks=ALL_CHECK_IDS, config: Config = Config(),
              max_order: int | None = None) -> list[CheckResult]:
    """Cartesian sweep of catalog specs against checks, in fixed order."""
    results = []
    for spec in catalog:
        try:
            G = parse_group(spec, element_cap=config.element_cap)
            order = G.order
        except CharkitError as exc:
            for check_id in checks:
                results.append(CheckResult(check_id, spec, "fail",
                                           witness={"error": str(exc)}))
            continue
        if max_order is not None and order > max_order:
            for check_id in checks:
                results.append(_skip(check_id, spec,
                                     f"order {order} exceeds --max-order "
                                     f"{max_order}"))
            continue
        ctx = GroupContext(G, config)
        for check_id in checks:
            results.append(run_check(check_id, G, config, ctx))
    return results
