"""Executable hypothesis-to-conclusion checks over computed tables.

Each classification claim becomes a checker: decide whether the group
meets the hypothesis, then test the asserted conclusion exactly.  A
verdict never hides a vacuous hypothesis; FAIL means the computed table
contradicts the claim, which on this corpus indicates an engine bug.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import catalog
from .chartab import CharTable, codegree
from .invariants import InvariantReport
from .permcore import (
    PermGroup, _factorize, is_cyclic_subset, normal_subgroups, quotient_group,
    structure_flags,
)

CLAIMS = ("four_values_solvable", "cdc3_solvable", "cdc2_shape",
          "nilpotent_cdc3", "nonnilpotent_cdc3", "two_degrees")


@dataclass(frozen=True)
class Verdict:
    group: str
    claim: str
    hypothesis_met: bool
    conclusion_holds: bool | None  # None exactly when the hypothesis fails
    details: str

    @property
    def status(self) -> str:
        if not self.hypothesis_met:
            return "vacuous"
        return "pass" if self.conclusion_holds else "FAIL"

    def to_json_dict(self) -> dict:
        return {"group": self.group, "claim": self.claim,
                "hypothesis_met": self.hypothesis_met,
                "conclusion_holds": self.conclusion_holds,
                "status": self.status, "details": self.details}


def _met(group: str, claim: str, concl: bool, details: str) -> Verdict:
    return Verdict(group, claim, True, bool(concl), details)


def _vacuous(group: str, claim: str, details: str) -> Verdict:
    return Verdict(group, claim, False, None, details)


def _commuting_subset(group: PermGroup, elems) -> bool:
    items = sorted(elems)
    for a_pos, a in enumerate(items):
        for b in items[a_pos + 1:]:
            if group.mult_index(a, b) != group.mult_index(b, a):
                return False
    return True


def _elementary_abelian_subset(group: PermGroup, elems, p: int) -> bool:
    return all(group.element_order(x) in (1, p) for x in elems) \
        and _commuting_subset(group, elems)


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def check_four_values_solvable(table: CharTable, rep: InvariantReport,
                               label: str) -> Verdict:
    """At most four values on every nonlinear row forces solvability."""
    claim = "four_values_solvable"
    sizes = [s for row, s in zip(table.rows, rep.per_char_cv_sizes)
             if row.degree > 1]
    if any(s > 4 for s in sizes):
        return _vacuous(label, claim,
                        f"a nonlinear row has {max(sizes)} values")
    solvable = rep.dl is not None
    note = "no nonlinear rows" if not sizes else \
        f"nonlinear rows have at most {max(sizes)} values"
    return _met(label, claim, solvable, f"{note}; dl={rep.dl}")


def check_cdc3_solvable(table: CharTable, rep: InvariantReport, label: str,
                        a5a6_free: bool | None = None) -> Verdict:
    """cdc of size at most 3 forces solvability, barring two alternating
    composition factors excluded by a metadata flag."""
    claim = "cdc3_solvable"
    if a5a6_free is None:
        # solvable groups have only cyclic composition factors
        a5a6_free = True if rep.dl is not None else None
    if a5a6_free is None:
        return _vacuous(label, claim, "composition-factor flag undetermined")
    if not (a5a6_free and len(rep.cdc) <= 3):
        return _vacuous(
            label, claim,
            f"|cdc|={len(rep.cdc)}, excluded-factor-free={a5a6_free}")
    return _met(label, claim, rep.dl is not None,
                f"|cdc|={len(rep.cdc)}; dl={rep.dl}")


def cdc2_shape(table: CharTable, rep: InvariantReport) -> str | None:
    """Which cdc-size-2 classification shape the group matches, if any.

    Returns "frobenius_3" for a Frobenius group with elementary abelian
    3-kernel, order-2 complement, and degrees {1,2}; "s4" for the
    symmetric-group-on-4-points fingerprint; None otherwise.
    """
    g = table.group
    frob = rep.flags.frobenius
    if frob is not None:
        kernel, complement = frob
        if len(complement) == 2 and rep.cd == (1, 2) \
                and _elementary_abelian_subset(g, kernel, 3):
            return "frobenius_3"
    if g.order == 24 and rep.dl == 3 \
            and tuple(sorted(table.classes.sizes)) == (1, 3, 6, 6, 8) \
            and table.degrees == (1, 1, 2, 3, 3):
        return "s4"
    return None


def check_cdc2_shape(table: CharTable, rep: InvariantReport,
                     label: str) -> Verdict:
    """For nonabelian groups with few degrees or short derived length,
    cdc has size 2 exactly on the two classified shapes."""
    claim = "cdc2_shape"
    if rep.flags.is_abelian:
        return _vacuous(label, claim, "abelian")
    short = rep.dl is not None and rep.dl <= 3
    if not (len(rep.cd) <= 4 or short):
        return _vacuous(label, claim,
                        f"|cd|={len(rep.cd)} and dl={rep.dl}")
    shape = cdc2_shape(table, rep)
    concl = (len(rep.cdc) == 2) == (shape is not None)
    return _met(label, claim, concl,
                f"|cdc|={len(rep.cdc)}, shape={shape}")


def check_nilpotent_cdc3(table: CharTable, rep: InvariantReport, label: str,
                         max_classes: int = 25) -> Verdict:
    """For nonabelian nilpotent groups, three equivalent descriptions of
    |cdc|=3, and an extraspecial 2-group factor when they hold."""
    claim = "nilpotent_cdc3"
    flags = rep.flags
    if not flags.is_nilpotent or flags.is_abelian:
        return _vacuous(label, claim, "not nilpotent nonabelian")
    g = table.group
    pred_a = len(rep.cdc) == 3
    pred_b = len(rep.cd) == 2 and max(rep.per_char_cv_sizes) <= 3
    pred_c = (len(rep.cd) == 2 and flags.p_group_p == 2
              and all(codegree(table, r) == 2 * row.degree
                      for r, row in enumerate(table.rows) if row.degree > 1))
    if not (pred_a == pred_b == pred_c):
        return _met(label, claim, False,
                    f"predicates disagree: a={pred_a} b={pred_b} c={pred_c}")
    if not pred_a:
        return _met(label, claim, True, "all three predicates false")
    if flags.is_extraspecial:
        return _met(label, claim, True,
                    "all three predicates true; group itself extraspecial")
    for n in normal_subgroups(g, table.classes, max_classes=max_classes):
        if len(n) in (1, g.order):
            continue
        if structure_flags(quotient_group(g, n)).is_extraspecial:
            return _met(label, claim, True,
                        "all three predicates true; extraspecial factor "
                        f"group of order {g.order // len(n)}")
    return _met(label, claim, False, "no extraspecial factor group found")


def check_nonnilpotent_cdc3(table: CharTable, rep: InvariantReport,
                            label: str, max_classes: int = 25) -> Verdict:
    """Non-nilpotent, |cdc|=3, derived length 2: the group is an abelian
    index-2 subgroup (elementary 3-part times its 2-core) with a flip."""
    claim = "nonnilpotent_cdc3"
    flags = rep.flags
    if flags.is_nilpotent:
        return _vacuous(label, claim, "nilpotent")
    if not (len(rep.cdc) == 3 and rep.dl == 2):
        return _vacuous(label, claim, f"|cdc|={len(rep.cdc)}, dl={rep.dl}")
    g = table.group
    o2 = flags.o_p.get(2, frozenset({0}))
    if not _commuting_subset(g, o2):
        return _met(label, claim, False, "2-core is nonabelian")
    half = None
    for n in normal_subgroups(g, table.classes, max_classes=max_classes):
        if 2 * len(n) != g.order or not _commuting_subset(g, n):
            continue
        odd = [x for x in n if g.element_order(x) % 2 == 1]
        two = {x for x in n if _is_power_of(g.element_order(x), 2)}
        if all(g.element_order(x) in (1, 3) for x in odd) and two == set(o2):
            half = n
            break
    if half is None:
        return _met(label, claim, False,
                    "no abelian index-2 subgroup with elementary 3-part "
                    "and matching 2-core")
    sylow2_abelian = any(
        _is_power_of(g.element_order(t), 2)
        and all(g.mult_index(t, x) == g.mult_index(x, t) for x in o2)
        for t in range(g.order) if t not in half)
    if not sylow2_abelian:
        # no corpus group reaches this branch; the claimed shape of the
        # Sylow 2-subgroup is left unasserted
        return _met(label, claim, True,
                    "decomposition holds; Sylow 2-subgroup nonabelian")
    central = all(g.mult_index(t, x) == g.mult_index(x, t)
                  for t in o2 for x in g.generator_indices())
    elementary2 = all(g.element_order(x) in (1, 2) for x in o2)
    q = g if len(o2) == 1 else quotient_group(g, frozenset(o2))
    qflags = structure_flags(q)
    frob_shape = (qflags.frobenius is not None
                  and len(qflags.frobenius[1]) == 2
                  and _elementary_abelian_subset(q, qflags.frobenius[0], 3))
    concl = central and elementary2 and frob_shape
    return _met(label, claim, concl,
                "decomposition holds; abelian Sylow 2-subgroup, direct "
                f"2-part {'confirmed' if concl else 'REFUTED'}")


def check_two_degrees(table: CharTable, rep: InvariantReport, label: str,
                      max_classes: int = 25) -> Verdict:
    """Degree set {1, m}: an abelian normal subgroup of index m exists,
    or m is a prime power and the group is a p-group times an abelian
    group."""
    claim = "two_degrees"
    if len(rep.cd) != 2:
        return _vacuous(label, claim, f"|cd|={len(rep.cd)}")
    g = table.group
    m = rep.cd[1]
    primes = _factorize(m)
    if len(primes) == 1 and rep.flags.is_nilpotent:
        p = next(iter(primes))
        if all(_commuting_subset(g, members)
               for q, members in rep.flags.o_p.items() if q != p):
            return _met(label, claim, True,
                        f"m={m}=prime power; nilpotent with abelian "
                        "coprime part")
    for n in normal_subgroups(g, table.classes, max_classes=max_classes):
        if len(n) * m == g.order and _commuting_subset(g, n):
            return _met(label, claim, True,
                        f"abelian normal subgroup of index {m}")
    return _met(label, claim, False, f"no abelian normal subgroup of index {m}")


def check_group(name: str, seed: int = 0) -> list[Verdict]:
    """All checkers against one catalog entry."""
    ent, g, cd, table, rep = catalog.bundle(name, seed)
    return [
        check_four_values_solvable(table, rep, ent.name),
        check_cdc3_solvable(table, rep, ent.name, ent.a5a6_free),
        check_cdc2_shape(table, rep, ent.name),
        check_nilpotent_cdc3(table, rep, ent.name, ent.max_classes),
        check_nonnilpotent_cdc3(table, rep, ent.name, ent.max_classes),
        check_two_degrees(table, rep, ent.name, ent.max_classes),
    ]


_PREDICATES = re.compile(r"(cdc|ncv)=(\d+)|rows<=(\d+)|rational")


def scan(predicate: str, names: list[str] | None = None,
         seed: int = 0) -> list[str]:
    """Catalog names whose report satisfies the predicate.

    Predicates: cdc=K, ncv=K, rows<=K, rational.
    """
    m = _PREDICATES.fullmatch(predicate)
    if m is None:
        raise ValueError(f"unknown predicate {predicate!r}")
    if names is None:
        names = catalog.names("core")
    hits = []
    for name in names:
        _, _, _, table, rep = catalog.bundle(name, seed)
        if m.group(1) == "cdc":
            ok = len(rep.cdc) == int(m.group(2))
        elif m.group(1) == "ncv":
            ok = len(rep.ncv) == int(m.group(2))
        elif m.group(3) is not None:
            ok = max(rep.per_char_cv_sizes) <= int(m.group(3))
        else:
            ok = rep.is_rational_group
        if ok:
            hits.append(name)
    return sorted(hits)


def scan_checks(seed: int = 0) -> list[Verdict]:
    """Corpus-wide assertions over the core tier."""
    names = catalog.names("core")
    cdc2 = set(scan("cdc=2", names, seed))
    shaped, nonabelian, dl4, nonsolvable_ncv3 = set(), set(), set(), set()
    for name in names:
        _, _, _, table, rep = catalog.bundle(name, seed)
        if not rep.flags.is_abelian:
            nonabelian.add(name)
            if cdc2_shape(table, rep) is not None:
                shaped.add(name)
        if rep.dl == 4 and len(rep.cdc) == 2:
            dl4.add(name)
        if rep.dl is None and len(rep.ncv) == 3:
            nonsolvable_ncv3.add(name)
    out = [
        _met("corpus", "cdc2_classified", (cdc2 & nonabelian) == shaped,
             f"nonabelian cdc-size-2 entries {sorted(cdc2 & nonabelian)} "
             f"vs classified shapes {sorted(shaped)}"),
        _met("corpus", "no_dl4_cdc2", not dl4,
             f"entries with dl=4 and |cdc|=2: {sorted(dl4)}"),
        _met("corpus", "ncv3_nonsolvable_unique",
             nonsolvable_ncv3 == {"sym_5"},
             f"nonsolvable entries with |ncv|=3: {sorted(nonsolvable_ncv3)}"),
    ]
    return out


def verify_names(names: list[str] | None = None, seed: int = 0,
                 include_scans: bool = True) -> list[Verdict]:
    """Run every checker over the given entries (default: core tier)."""
    if names is None:
        names = catalog.names("core")
    verdicts: list[Verdict] = []
    for name in sorted(names):
        verdicts.extend(check_group(name, seed))
    if include_scans:
        verdicts.extend(scan_checks(seed))
    return verdicts


def any_fail(verdicts: list[Verdict]) -> bool:
    return any(v.status == "FAIL" for v in verdicts)
