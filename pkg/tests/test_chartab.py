"""Exact character tables: prime choice, class algebra, orthogonality."""

import json

import pytest

from charval import catalog
from charval.chartab import (
    CharTable,
    TooManyClasses,
    character_table,
    choose_dixon_prime,
    class_mult_coeffs,
    codegree,
)
from charval.cyclo import Cyc, zeta
from charval.permcore import (
    conjugacy_classes,
    direct_product,
    normal_subgroups,
)
from tests import helpers as H


@pytest.mark.parametrize("name,prime", [
    ("trivial", 3), ("cyclic_6", 7), ("sym_4", 13), ("alt_5", 31),
    ("sym_5", 61), ("alt_6", 61), ("sg_136_12", 137),
])
def test_dixon_prime_choices(name, prime):
    _, g, cd, table, _ = catalog.bundle(name)
    assert choose_dixon_prime(g, cd) == prime
    assert table.dixon_prime == prime


def test_class_mult_coeffs_identity_and_counting():
    _, g, cd, _, _ = catalog.bundle("sym_3")
    a = class_mult_coeffs(cd)
    k = cd.n_classes
    for j in range(k):
        for m in range(k):
            assert a[0][j][m] == (1 if j == m else 0)
            assert a[j][0][m] == (1 if j == m else 0)
    for i in range(k):
        for j in range(k):
            assert a[i][j] == a[j][i]  # class sums commute
            assert sum(a[i][j][m] * cd.sizes[m] for m in range(k)) == \
                cd.sizes[i] * cd.sizes[j]
    transposition = next(i for i in range(k) if cd.element_orders[i] == 2)
    assert a[transposition][transposition][0] == 3


@pytest.mark.parametrize("name", ["sym_3", "sym_4", "q8", "sg_21_1",
                                  "alt_5", "sg_27_3", "frob_3k_2_2"])
def test_orthogonality_against_brute_centralizers(name):
    failures = exactness_failures(name)
    assert not failures, failures


def exactness_failures(name: str) -> list[str]:
    _, g, cd, table, _ = catalog.bundle(name)
    return H.exactness_failures(name, g, cd, table)


def test_identity_column_carries_degrees():
    for name in ("sym_4", "alt_5", "sg_27_4"):
        _, g, cd, table, _ = catalog.bundle(name)
        for row in table.rows:
            assert row.values[0] == Cyc.from_rational(row.degree)
            assert g.order % row.degree == 0  # degrees divide the order


def test_row_count_equals_class_count():
    for name in ("sym_4", "sg_21_1", "cyclic_9"):
        _, _, cd, table, _ = catalog.bundle(name)
        assert len(table.rows) == cd.n_classes
        assert table.degrees == tuple(r.degree for r in table.rows)


def test_sym_3_table_is_the_textbook_one():
    _, g, cd, table, _ = catalog.bundle("sym_3")
    one, mone = Cyc.one(), Cyc.from_rational(-1)
    two, zero = Cyc.from_rational(2), Cyc.zero()
    # classes: identity, transpositions, 3-cycles
    assert cd.sizes == (1, 3, 2)
    values = {tuple(r.values) for r in table.rows}
    assert values == {(one, one, one),
                      (one, mone, one),
                      (two, zero, mone)}


def test_alt_5_golden_period_values():
    _, g, cd, table, _ = catalog.bundle("alt_5")
    golden = Cyc.zero() - zeta(5, 2) - zeta(5, 3)   # (1+sqrt5)/2
    partner = Cyc.one() + zeta(5, 2) + zeta(5, 3)   # (1-sqrt5)/2
    deg3_values = set()
    for row in table.rows:
        if row.degree == 3:
            deg3_values.update(row.values)
    assert golden in deg3_values and partner in deg3_values
    assert golden + partner == Cyc.one()
    assert golden * partner == Cyc.from_rational(-1)


def test_conjugate_rows_pair_off():
    _, g, cd, table, _ = catalog.bundle("sg_21_1")
    rows = {tuple(r.values) for r in table.rows}
    for row in table.rows:
        assert tuple(v.conjugate() for v in row.values) in rows


def test_kernels_are_normal_subgroups():
    for name in ("sym_4", "dihedral_8", "frob_3k_2_2"):
        ent, g, cd, table, _ = catalog.bundle(name)
        normals = set(normal_subgroups(g, cd, max_classes=ent.max_classes))
        for row in table.rows:
            assert H.class_union(cd, row.kernel) in normals, name


def test_center_of_faithful_row_is_group_center():
    _, g, cd, table, _ = catalog.bundle("dihedral_8")
    faithful = next(r for r in table.rows
                    if r.degree == 2 and len(H.class_union(cd, r.kernel)) == 1)
    assert len(H.class_union(cd, faithful.center_z)) == 2


def test_codegree_examples():
    _, g, cd, table, _ = catalog.bundle("dihedral_8")
    faithful = next(i for i, r in enumerate(table.rows)
                    if r.degree == 2 and len(H.class_union(cd, r.kernel)) == 1)
    assert codegree(table, faithful) == 4
    _, g, cd, table, _ = catalog.bundle("cyclic_6")
    cods = sorted(codegree(table, i) for i in range(len(table.rows)))
    assert cods == [1, 2, 3, 3, 6, 6]  # |image| of each linear character
    _, g, cd, table, _ = catalog.bundle("sym_4")
    assert [codegree(table, i) for i in range(5)] == [2, 1, 3, 8, 8]


def test_table_is_seed_independent():
    for name in ("sym_4", "sg_27_3"):
        ent, g, cd, t0, _ = catalog.bundle(name, seed=0)
        t1 = character_table(catalog.build(name), seed=987,
                             max_classes=ent.max_classes)
        assert json.dumps(t0.to_json_dict()) == json.dumps(t1.to_json_dict())


def test_class_count_guard():
    big = direct_product(catalog.build("cyclic_12"), catalog.build("cyclic_3"))
    with pytest.raises(TooManyClasses):
        character_table(big, max_classes=25)
    assert character_table(big, max_classes=40).degrees == (1,) * 36


def test_abelian_tables_are_fourier_matrices():
    """Every value of an abelian table is a root of unity and the column
    of a generator separates the characters pairwise."""
    for n, name in ((6, "cyclic_6"), (9, "cyclic_9")):
        _, g, cd, table, _ = catalog.bundle(name)
        gen_col = next(i for i in range(cd.n_classes)
                       if cd.element_orders[i] == n)
        column = [r.values[gen_col] for r in table.rows]
        assert len(set(column)) == n  # pairwise distinct
        for row in table.rows:
            assert all(v.is_root_of_unity() for v in row.values)
