"""Value-set invariants of a character table.

From a finished table this derives the global value set cv, the degree
set cd, their difference cdc, the non-natural values ncv, per-row value
counts, codegrees, the largest degree, derived length, rationality, the
root-of-unity element classes, and the structural flag block.  All set
orderings are canonical (rationals numerically first, then display
strings), so reports serialize byte-identically across runs.
"""

from __future__ import annotations

from .chartab import CharTable, codegree
from .cyclo import Cyc
from .permcore import StructureFlags, derived_length, structure_flags


class InvariantReport:
    """Invariants of one group's character table."""

    __slots__ = ("order", "class_count", "cv", "cd", "cdc", "ncv",
                 "per_char_cv_sizes", "cod", "b", "dl", "is_rational_group",
                 "root_of_unity_elements", "flags")

    def __init__(self, order: int, class_count: int, cv: tuple[Cyc, ...],
                 cd: tuple[int, ...], cdc: tuple[Cyc, ...], ncv: tuple[Cyc, ...],
                 per_char_cv_sizes: tuple[int, ...], cod: tuple[int, ...],
                 b: int, dl: int | None, is_rational_group: bool,
                 root_of_unity_elements: tuple[int, ...], flags: StructureFlags):
        self.order = order
        self.class_count = class_count
        self.cv = cv
        self.cd = cd
        self.cdc = cdc
        self.ncv = ncv
        self.per_char_cv_sizes = per_char_cv_sizes
        self.cod = cod
        self.b = b
        self.dl = dl
        self.is_rational_group = is_rational_group
        self.root_of_unity_elements = root_of_unity_elements
        self.flags = flags

    def cv_displays(self) -> list[str]:
        return [v.display() for v in self.cv]

    def to_json_dict(self) -> dict:
        f = self.flags
        return {
            "order": self.order,
            "class_count": self.class_count,
            "cv": [v.display() for v in self.cv],
            "cd": list(self.cd),
            "cdc": [v.display() for v in self.cdc],
            "ncv": [v.display() for v in self.ncv],
            "per_char_cv_sizes": list(self.per_char_cv_sizes),
            "cod": list(self.cod),
            "b": self.b,
            "dl": self.dl,
            "is_rational_group": self.is_rational_group,
            "root_of_unity_elements": list(self.root_of_unity_elements),
            "flags": {
                "is_abelian": f.is_abelian,
                "elementary_abelian_p": f.elementary_abelian_p,
                "is_nilpotent": f.is_nilpotent,
                "p_group_p": f.p_group_p,
                "is_extraspecial": f.is_extraspecial,
                "o_p": {str(p): len(s) for p, s in sorted(f.o_p.items())},
                "frobenius": None if f.frobenius is None else {
                    "kernel_size": len(f.frobenius[0]),
                    "complement_size": len(f.frobenius[1]),
                },
            },
        }

    def __repr__(self):
        return (f"InvariantReport(order={self.order}, |cv|={len(self.cv)}, "
                f"|cdc|={len(self.cdc)}, b={self.b})")


def sorted_values(values) -> tuple[Cyc, ...]:
    """Canonical ordering: rationals numerically, then display strings."""
    return tuple(sorted(values, key=lambda v: v.sort_key()))


def per_char_values(table: CharTable, row: int) -> tuple[Cyc, ...]:
    """Distinct values of one row, canonically ordered."""
    return sorted_values(set(table.rows[row].values))


def root_of_unity_elements(table: CharTable) -> tuple[int, ...]:
    """Classes on which every irreducible value has modulus 1."""
    out = []
    one = Cyc.one()
    for i in range(table.classes.n_classes):
        if all(r.values[i].abs_squared() == one for r in table.rows):
            out.append(i)
    return tuple(out)


def report(table: CharTable, max_classes: int = 25) -> InvariantReport:
    """Full invariant report for a verified table.

    max_classes guards the normal-subgroup enumeration that backs the
    structural flags of non-nilpotent groups.
    """
    group = table.group
    cv_set: set[Cyc] = set()
    for r in table.rows:
        cv_set.update(r.values)
    cd_set = {r.degree for r in table.rows}
    cdc_set = {v for v in cv_set if not any(v == d for d in cd_set)}
    ncv_set = {v for v in cv_set if not v.is_positive_natural()}
    per_sizes = tuple(len(set(r.values)) for r in table.rows)
    cods = tuple(codegree(table, i) for i in range(len(table.rows)))
    flags = structure_flags(group, table.classes, max_classes=max_classes)
    return InvariantReport(
        order=group.order,
        class_count=table.classes.n_classes,
        cv=sorted_values(cv_set),
        cd=tuple(sorted(cd_set)),
        cdc=sorted_values(cdc_set),
        ncv=sorted_values(ncv_set),
        per_char_cv_sizes=per_sizes,
        cod=cods,
        b=max(cd_set),
        dl=derived_length(group),
        is_rational_group=all(v.is_rational() for v in cv_set),
        root_of_unity_elements=root_of_unity_elements(table),
        flags=flags,
    )
