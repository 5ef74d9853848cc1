"""Classification of irreducible characters.

For each row of a group's character table this decides primitivity (no
proper subgroup induces it), quasi-primitivity (homogeneous restriction to
every normal subgroup), the full vanishing-off condition (the subgroup
generated by the character's support, times the derived subgroup, is the
whole group), and monomiality (a witness pair: subgroup plus linear
character inducing the row).  A GroupContext carries the shared caches —
census, derived data, and one character table per subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import classfun
from .chartab import CharacterTable, character_table
from .classfun import ClassFunction
from .config import Config
from .permgroup import (PermGroup, SubgroupRecord, derived_series,
                        subgroups_containing, subgroups_up_to_conjugacy)


class GroupContext:
    """Immutable per-group caches shared across classification queries."""

    def __init__(self, group: PermGroup, config: Config = Config()):
        self.group = group
        self.config = config
        self._subgroup_tables: dict[frozenset, CharacterTable] = {}
        self._vanishing: dict[tuple, SubgroupRecord] = {}

    @cached_property
    def table(self) -> CharacterTable:
        return character_table(self.group, seed=self.config.seed)

    @cached_property
    def census(self) -> list[SubgroupRecord]:
        return subgroups_up_to_conjugacy(self.group, cap=self.config.subgroup_cap)

    @cached_property
    def derived_data(self):
        return derived_series(self.group)

    @property
    def derived(self) -> SubgroupRecord:
        series, _, _ = self.derived_data
        return series[1] if len(series) > 1 else series[0]

    @property
    def metabelian(self) -> bool:
        return self.derived_data[1]

    @property
    def derived_index(self) -> int:
        return self.derived_data[2]

    @cached_property
    def normal_subgroups(self) -> list[SubgroupRecord]:
        return [rec for rec in self.census if rec.is_normal]

    @cached_property
    def maximal_subgroups(self) -> list[SubgroupRecord]:
        return [rec for rec in self.census if rec.is_maximal]

    @cached_property
    def proper_subgroups(self) -> list[SubgroupRecord]:
        return [rec for rec in self.census if rec.order < self.group.order]

    @cached_property
    def overgroups_of_derived(self) -> list[SubgroupRecord]:
        return subgroups_containing(self.group, self.derived)

    @cached_property
    def row_classifications(self):
        return classify_rows(self)

    def subgroup_table(self, rec: SubgroupRecord) -> CharacterTable:
        if rec.order == self.group.order:
            return self.table
        key = rec.element_set
        if key not in self._subgroup_tables:
            self._subgroup_tables[key] = character_table(
                rec.group(), seed=self.config.seed)
        return self._subgroup_tables[key]

    def vanishing_off(self, chi: ClassFunction) -> SubgroupRecord:
        key = chi.values
        if key not in self._vanishing:
            self._vanishing[key] = classfun.vanishing_off_subgroup(chi)
        return self._vanishing[key]


def is_primitive(ctx: GroupContext, chi: ClassFunction,
                 use_all_subgroups: bool = False) -> bool:
    """True iff no irreducible of a proper subgroup induces chi.

    By transitivity of induction the maximal subgroups suffice; the
    all-subgroups oracle stays available for cross-checking.
    """
    G = ctx.group
    d = chi.degree()
    pool = ctx.proper_subgroups if use_all_subgroups else [
        rec for rec in ctx.maximal_subgroups if rec.order < G.order]
    for rec in pool:
        index = G.order // rec.order
        if d % index:
            continue
        want = d // index
        sub_table = ctx.subgroup_table(rec)
        for sd, theta in zip(sub_table.degrees, sub_table.rows):
            if sd != want:
                continue
            if classfun.induce(theta, G).values == chi.values:
                return False
    return True


def is_quasi_primitive(ctx: GroupContext, chi: ClassFunction) -> bool:
    """True iff the restriction to every normal subgroup is homogeneous
    (exactly one distinct irreducible constituent)."""
    G = ctx.group
    for rec in ctx.normal_subgroups:
        if rec.order in (1, G.order):
            continue
        res = classfun.restrict(chi, rec)
        mults = classfun.decompose(res, ctx.subgroup_table(rec))
        if sum(1 for m in mults if m) > 1:
            return False
    return True


def has_full_vanishing_off(ctx: GroupContext, chi: ClassFunction) -> bool:
    """True iff the vanishing-off subgroup times the derived subgroup is G."""
    G = ctx.group
    V = ctx.vanishing_off(chi)
    product = G.generated_subgroup(
        tuple(V.generators) + tuple(ctx.derived.generators))
    return product.order == G.order


@dataclass(frozen=True)
class MonomialWitness:
    subgroup_index: int  # position in the census
    subgroup_order: int
    linear_index: int    # row in that subgroup's character table

    def to_json(self, ctx: GroupContext | None = None) -> dict:
        data = {
            "subgroupIndex": self.subgroup_index,
            "subgroupOrder": self.subgroup_order,
            "linearIndex": self.linear_index,
        }
        if ctx is not None:
            rec = ctx.census[self.subgroup_index]
            data["subgroupGenerators"] = rec.describe()
        return data


def monomial_witness(ctx: GroupContext, chi: ClassFunction):
    """A pair (subgroup, linear character) inducing chi, or None.

    Only subgroups of index exactly chi(1) can work, so the search is
    restricted to them; a linear character is its own witness on G.
    """
    G = ctx.group
    d = chi.degree()
    for idx, rec in enumerate(ctx.census):
        if G.order != d * rec.order:
            continue
        sub_table = ctx.subgroup_table(rec) if rec.order < G.order else ctx.table
        for row_idx, (sd, theta) in enumerate(
                zip(sub_table.degrees, sub_table.rows)):
            if sd != 1:
                continue
            if rec.order == G.order:
                if theta.values == chi.values:
                    return MonomialWitness(idx, rec.order, row_idx)
                continue
            if classfun.induce(theta, G).values == chi.values:
                return MonomialWitness(idx, rec.order, row_idx)
    return None


@dataclass(frozen=True)
class RowClassification:
    degree: int
    primitive: bool
    quasi_primitive: bool
    full_vanishing_off: bool
    monomial_witness: MonomialWitness | None

    def to_json(self, ctx: GroupContext | None = None) -> dict:
        return {
            "degree": self.degree,
            "primitive": self.primitive,
            "quasiPrimitive": self.quasi_primitive,
            "fullVanishingOff": self.full_vanishing_off,
            "monomialWitness": (None if self.monomial_witness is None
                                else self.monomial_witness.to_json(ctx)),
        }


@dataclass(frozen=True)
class ClassificationReport:
    group: str
    order: int
    derived_index: int
    rows: tuple[RowClassification, ...]
    count_primitive: int
    count_quasi_primitive: int
    count_full_vanishing_off: int

    def to_json(self, ctx: GroupContext | None = None) -> dict:
        return {
            "group": self.group,
            "order": self.order,
            "derivedIndex": self.derived_index,
            "rows": [row.to_json(ctx) for row in self.rows],
            "counts": {
                "pri": self.count_primitive,
                "qua": self.count_quasi_primitive,
                "fullV": self.count_full_vanishing_off,
            },
        }


def classify_rows(ctx: GroupContext) -> tuple[RowClassification, ...]:
    rows = []
    for degree, chi in zip(ctx.table.degrees, ctx.table.rows):
        rows.append(RowClassification(
            degree=degree,
            primitive=is_primitive(ctx, chi),
            quasi_primitive=is_quasi_primitive(ctx, chi),
            full_vanishing_off=has_full_vanishing_off(ctx, chi),
            monomial_witness=monomial_witness(ctx, chi),
        ))
    return tuple(rows)


def classify_group(G: PermGroup, config: Config = Config(),
                   ctx: GroupContext | None = None) -> ClassificationReport:
    """Full per-row classification report, with invariants enforced."""
    if ctx is None:
        ctx = GroupContext(G, config)
    rows = classify_rows(ctx)
    report = ClassificationReport(
        group=G.label,
        order=G.order,
        derived_index=ctx.derived_index,
        rows=rows,
        count_primitive=sum(1 for r in rows if r.primitive),
        count_quasi_primitive=sum(1 for r in rows if r.quasi_primitive),
        count_full_vanishing_off=sum(1 for r in rows if r.full_vanishing_off),
    )
    _enforce_report_invariants(report)
    return report


def _enforce_report_invariants(report: ClassificationReport) -> None:
    for i, row in enumerate(report.rows):
        if row.primitive and not row.quasi_primitive:
            raise AssertionError(f"row {i}: primitive but not quasi-primitive")
        if row.quasi_primitive and not row.full_vanishing_off:
            raise AssertionError(
                f"row {i}: quasi-primitive without full vanishing-off")
        if row.degree == 1:
            if not (row.primitive and row.quasi_primitive
                    and row.full_vanishing_off):
                raise AssertionError(f"linear row {i} missing a flag")
            if row.monomial_witness is None:
                raise AssertionError(f"linear row {i} has no monomial witness")
    index = report.derived_index
    if report.count_primitive % index or report.count_quasi_primitive % index:
        raise AssertionError(
            "primitive/quasi-primitive counts are not divisible by the "
            "abelianization index")
