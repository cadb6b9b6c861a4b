"""Shared oracles and corpus sweeps for the test suite.

The naive_* functions recompute group facts by brute force along code
paths independent of the library's own algorithms, so agreement is
meaningful.  The *_failures sweeps each check one value-set law over a
catalog entry and return human-readable failure strings; an empty list
means the law held.  Both the unit tests and the acceptance gate run
them, so they live here rather than in any single test module.
"""

from __future__ import annotations

import math

from charval import catalog
from charval.chartab import CharTable, character_table
from charval.cyclo import Cyc
from charval.permcore import (
    ClassData,
    PermGroup,
    Permutation,
    center,
    centralizer_size,
    derived_series,
    is_cyclic_subset,
    normal_subgroups,
    quotient_group,
)

ZERO = Cyc.zero()
ONE = Cyc.one()


def exactness_failures(label: str, group: PermGroup, cd: ClassData,
                       table: CharTable) -> list[str]:
    """First/second orthogonality, degree square sum, centralizer match."""
    k = cd.n_classes
    bad = []
    if sum(r.degree ** 2 for r in table.rows) != group.order:
        bad.append(f"{label}: degree squares do not sum to the order")
    order = Cyc.from_rational(group.order)
    for r, row in enumerate(table.rows):
        for s in range(r, k):
            other = table.rows[s]
            inner = Cyc.zero()
            for i in range(k):
                inner = inner + row.values[i] * other.values[i].conjugate() \
                    * cd.sizes[i]
            if inner != (order if r == s else Cyc.zero()):
                bad.append(f"{label}: row orthogonality fails at ({r},{s})")
    for i in range(k):
        for j in range(i, k):
            inner = Cyc.zero()
            for row in table.rows:
                inner = inner + row.values[i] * row.values[j].conjugate()
            expect = Cyc.from_rational(centralizer_size(group, cd.reps[i])) \
                if i == j else Cyc.zero()
            if inner != expect:
                bad.append(f"{label}: column orthogonality fails at ({i},{j})")
    return bad


# ---------------------------------------------------------------------------
# brute-force oracles


def naive_closure(perms: list[Permutation]) -> set[tuple[int, ...]]:
    """Set-based multiplicative closure, no BFS indexing."""
    out = {p.images for p in perms}
    if not perms:
        return out
    out.add(Permutation.identity(perms[0].degree).images)
    while True:
        new = set()
        for a in out:
            pa = Permutation(a, _check=False)
            for b in out:
                c = (pa * Permutation(b, _check=False)).images
                if c not in out:
                    new.add(c)
        if not new:
            return out
        out |= new


def naive_conjugacy_partition(group: PermGroup) -> set[frozenset[int]]:
    """Conjugation orbits using every element as conjugator."""
    seen: set[int] = set()
    parts: set[frozenset[int]] = set()
    for i in range(group.order):
        if i in seen:
            continue
        orbit = {group.conjugate_index(i, g) for g in range(group.order)}
        seen |= orbit
        parts.add(frozenset(orbit))
    return parts


def naive_normal_sets(group: PermGroup, cd: ClassData) -> set[frozenset[int]]:
    """All normal subgroups by exhaustive class-union search.

    Walks every subset of nonidentity classes (keep class counts small),
    keeping the unions whose size divides the order and that are closed
    under multiplication.
    """
    k = cd.n_classes
    assert k <= 14, "oracle is exponential in the class count"
    out: set[frozenset[int]] = set()
    for mask in range(1 << (k - 1)):
        members = {0}
        for j in range(k - 1):
            if mask >> j & 1:
                members.update(cd.classes[j + 1])
        if group.order % len(members):
            continue
        if all(group.mult_index(a, b) in members
               for a in members for b in members):
            out.add(frozenset(members))
    return out


def naive_derived_elements(group: PermGroup) -> frozenset[int]:
    """Closure of all pairwise commutators."""
    comms = [Permutation(group.elements[group.commutator_index(i, j)].images)
             for i in range(group.order) for j in range(group.order)]
    images = naive_closure(comms)
    return frozenset(group.element_index(Permutation(t, _check=False))
                     for t in images)


def cycle_type_of(perm: Permutation) -> tuple[int, ...]:
    """Cycle type as a partition of the degree, fixed points included."""
    lens = sorted((len(c) for c in perm.cycles()), reverse=True)
    fixed = perm.degree - sum(lens)
    return tuple(lens) + (1,) * fixed


def ext_square_value(n: int, rho) -> int:
    """Value at cycle type rho of the exterior square of the standard
    character of the symmetric group on n points, from fixed points only.

    With f1 fixed points and f2 two-cycles the value is
    (f1 - 1)(f1 - 2)/2 - f2, since the squared standard character counts
    ordered fixed pairs and the trace on symmetric pairs removes f(g^2).
    """
    parts = list(rho)
    assert sum(parts) == n
    f1 = parts.count(1)
    f2 = parts.count(2)
    return (f1 - 1) * (f1 - 2) // 2 - f2


def class_union(cd: ClassData, class_indices) -> frozenset[int]:
    out: set[int] = set()
    for ci in class_indices:
        out.update(cd.classes[ci])
    return frozenset(out)


def row_value_set(table: CharTable, r: int) -> set[Cyc]:
    return set(table.rows[r].values)


def proper_normals(name: str) -> list[frozenset[int]]:
    ent, g, cd, table, rep = catalog.bundle(name)
    return [n for n in normal_subgroups(g, cd, max_classes=ent.max_classes)
            if 1 < len(n) < g.order]


# ---------------------------------------------------------------------------
# value-set law sweeps (empty list = law held)


def quotient_value_failures(name: str) -> list[str]:
    """cv and ncv never grow when passing to a quotient."""
    ent, g, cd, table, rep = catalog.bundle(name)
    cv_g, ncv_g = set(rep.cv), set(rep.ncv)
    bad = []
    for nsub in proper_normals(name):
        q = quotient_group(g, nsub)
        qt = character_table(q, max_classes=ent.max_classes)
        q_cv: set[Cyc] = set()
        q_ncv: set[Cyc] = set()
        for row in qt.rows:
            q_cv.update(row.values)
            q_ncv.update(v for v in row.values if not v.is_positive_natural())
        if not q_cv <= cv_g:
            bad.append(f"{name}/N (|N|={len(nsub)}): quotient cv grew")
        if not q_ncv <= ncv_g:
            bad.append(f"{name}/N (|N|={len(nsub)}): quotient ncv grew")
    return bad


def zero_value_failures(name: str) -> list[str]:
    """Nonabelian groups take the value zero."""
    ent, g, cd, table, rep = catalog.bundle(name)
    if rep.flags.is_abelian:
        return []
    if ZERO not in set(rep.ncv):
        return [f"{name}: nonabelian but 0 is not a value"]
    return []


def rational_row_failures(name: str) -> list[str]:
    """All-rational nonlinear rows contain a negative value."""
    _, g, cd, table, rep = catalog.bundle(name)
    bad = []
    for r, row in enumerate(table.rows):
        if row.degree == 1:
            continue
        vals = set(row.values)
        if all(v.is_rational() for v in vals):
            if not any(v.as_fraction() < 0 for v in vals):
                bad.append(f"{name} row {r}: rational row with no negative")
    return bad


def product_value_failures(product_name: str, left_name: str,
                           right_name: str) -> list[str]:
    """cv of a direct product contains all pairwise products of factor
    values (and hence the factor values themselves)."""
    _, _, _, _, rep_p = catalog.bundle(product_name)
    _, _, _, _, rep_l = catalog.bundle(left_name)
    _, _, _, _, rep_r = catalog.bundle(right_name)
    cv_p = set(rep_p.cv)
    bad = []
    for a in rep_l.cv:
        for b in rep_r.cv:
            for v in (a, b, a * b):
                if v not in cv_p:
                    bad.append(f"{product_name}: missing factor product "
                               f"{v.display()}")
    return bad


def galois_row_failures(name: str) -> list[str]:
    """Row value sets are closed under the Galois action, and every
    irrational value has a distinct irrational companion in its row."""
    _, g, cd, table, rep = catalog.bundle(name)
    m = 1
    for o in cd.element_orders:
        m = math.lcm(m, o)
    bad = []
    for r, row in enumerate(table.rows):
        vals = set(row.values)
        for v in range(2, m):
            if math.gcd(v, m) != 1:
                continue
            if {x.galois(v) for x in vals} != vals:
                bad.append(f"{name} row {r}: values not Galois-stable (v={v})")
                break
        for x in vals:
            if x.is_rational():
                continue
            if not any(y != x and not y.is_rational() for y in vals):
                bad.append(f"{name} row {r}: lone irrational value "
                           f"{x.display()}")
    return bad


def center_kernel_failures(name: str) -> list[str]:
    """Z(chi)/ker(chi) is the center of G/ker(chi) and is cyclic."""
    ent, g, cd, table, rep = catalog.bundle(name)
    bad = []
    for r, row in enumerate(table.rows):
        ker = class_union(cd, row.kernel)
        zchi = class_union(cd, row.center_z)
        if len(ker) == g.order:
            continue  # principal row: everything collapses
        if len(ker) == 1:  # faithful row: the quotient is G itself
            zg = center(g)
            if zchi != zg:
                bad.append(f"{name} row {r}: Z(chi) differs from Z(G)")
            if not is_cyclic_subset(g, zg):
                bad.append(f"{name} row {r}: Z(G) not cyclic at faithful row")
            continue
        q = quotient_group(g, ker)
        zq = center(q)
        if len(zchi) != len(zq) * len(ker):
            bad.append(f"{name} row {r}: |Z(chi)| != |Z(G/ker)|*|ker|")
        if not is_cyclic_subset(q, zq):
            bad.append(f"{name} row {r}: Z(G/ker) not cyclic")
    return bad


def conjugate_symmetry_failures(name: str) -> list[str]:
    """Values on inverse classes are complex conjugates."""
    _, g, cd, table, rep = catalog.bundle(name)
    bad = []
    for r, row in enumerate(table.rows):
        for i in range(cd.n_classes):
            if row.values[cd.inverse_class[i]] != row.values[i].conjugate():
                bad.append(f"{name} row {r} class {i}: conjugate mismatch")
    return bad


def p_element_failures(name: str) -> list[str]:
    """Divisibility constraints at prime-power-order elements.

    For g of order p**k and rational a = |chi(g)|^2: p divides
    chi(1)^2 - a; in particular chi(g) = 0 forces p | chi(1), and
    |chi(g)| = 1 forces gcd(chi(1), ord(g)) = 1.
    """
    _, g, cd, table, rep = catalog.bundle(name)
    bad = []
    for i in range(1, cd.n_classes):
        o = cd.element_orders[i]
        p = min(k for k in range(2, o + 1) if o % k == 0)
        t = o
        while t % p == 0:
            t //= p
        if t != 1:
            continue  # order has a second prime factor
        for r, row in enumerate(table.rows):
            val = row.values[i]
            a2 = val.abs_squared()
            if not a2.is_rational():
                continue
            a = a2.as_fraction()
            if a.denominator != 1:
                bad.append(f"{name} row {r} class {i}: |value|^2 not integral")
                continue
            if (row.degree ** 2 - a.numerator) % p:
                bad.append(f"{name} row {r} class {i}: p={p} does not divide "
                           f"deg^2 - |value|^2")
            if val.is_zero() and row.degree % p:
                bad.append(f"{name} row {r} class {i}: zero value, p∤degree")
            if a.numerator == 1 and math.gcd(row.degree, o) != 1:
                bad.append(f"{name} row {r} class {i}: unit value, "
                           f"gcd(degree, order) > 1")
    return bad


def nilpotent_rotation_failures(name: str) -> list[str]:
    """Nonlinear rows of nonabelian nilpotent groups contain a rotated
    degree pair chi(1)*eps and its conjugate, eps a nontrivial root of
    unity."""
    _, g, cd, table, rep = catalog.bundle(name)
    if rep.flags.is_abelian or not rep.flags.is_nilpotent:
        return []
    bad = []
    d_sq = {}
    for r, row in enumerate(table.rows):
        if row.degree == 1:
            continue
        deg = Cyc.from_rational(row.degree)
        target = d_sq.setdefault(row.degree,
                                 Cyc.from_rational(row.degree ** 2))
        rotated = [v for v in set(row.values)
                   if v != deg and v.abs_squared() == target]
        if not rotated:
            bad.append(f"{name} row {r}: no rotated degree value")
            continue
        if not all(v.conjugate() in rotated for v in rotated):
            bad.append(f"{name} row {r}: rotated values not conjugate-closed")
    return bad


def nilpotent_ncv_bound_failures(name: str) -> list[str]:
    """Value-count floors for nonabelian nilpotent groups."""
    _, g, cd, table, rep = catalog.bundle(name)
    if rep.flags.is_abelian or not rep.flags.is_nilpotent:
        return []
    bad = []
    if len(rep.ncv) < 3:
        bad.append(f"{name}: nilpotent nonabelian with |ncv| < 3")
    if rep.flags.p_group_p != 2 and len(rep.ncv) < 5:
        bad.append(f"{name}: nilpotent non-2-group with |ncv| < 5")
    if len(rep.cd) >= 3 and len(rep.cdc) < 4:
        bad.append(f"{name}: |cd| >= 3 but |cdc| < 4")
    return bad


def p_group_modulus_failures(name: str) -> list[str]:
    """Nonlinear rows of p-groups never take values of modulus one."""
    _, g, cd, table, rep = catalog.bundle(name)
    if rep.flags.p_group_p is None or rep.flags.is_abelian:
        return []
    bad = []
    for r, row in enumerate(table.rows):
        if row.degree == 1:
            continue
        if any(v.abs_squared() == ONE for v in row.values):
            bad.append(f"{name} row {r}: modulus-one value in a p-group")
    return bad


def all_commute(group: PermGroup, elems) -> bool:
    items = sorted(elems)
    return all(group.mult_index(a, b) == group.mult_index(b, a)
               for pos, a in enumerate(items) for b in items[pos + 1:])


def unit_element_structure_failures(name: str) -> list[str]:
    """Nonabelian groups with an all-modulus-one column have an abelian
    derived subgroup meeting the center trivially."""
    ent, g, cd, table, rep = catalog.bundle(name)
    if rep.flags.is_abelian or not rep.root_of_unity_elements:
        return []
    bad = []
    deriv = derived_series(g)[1]
    if not all_commute(g, deriv):
        bad.append(f"{name}: derived subgroup not abelian")
    if deriv & center(g) != {0}:
        bad.append(f"{name}: derived subgroup meets the center")
    return bad
