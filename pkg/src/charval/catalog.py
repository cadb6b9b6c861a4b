"""Named constructions for the group corpus, with frozen expectations.

Each entry couples a deterministic builder with the structural and
value-set facts the corpus pins for that group (order, degree sets,
four-value row claims, Frobenius shape, socle, and so on).  Builders are
verified on construction: an order or relation mismatch raises instead
of returning the wrong group.  GAP SmallGroup identifiers appear in
source labels as provenance only; entries are pinned by the checked
claims, not by library lookup.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .chartab import CharTable, character_table
from .invariants import InvariantReport, report
from .permcore import (
    ClassData, PermGroup, Permutation, center, conjugacy_classes,
    derived_series, direct_product, is_cyclic_subset,
    minimal_normal_subgroups, normal_subgroups, quotient_group,
    socle_from_normals, socle_of_nilpotent, structure_flags,
    subgroup_closure,
)


class UnknownName(KeyError):
    """No catalog entry with that name."""


class ConstructionMismatch(RuntimeError):
    """A builder produced a group violating its frozen facts."""


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    order: int
    source: str
    tier: str = "core"  # core | large | optional
    builder: Callable[[], PermGroup] = None
    max_classes: int = 25       # guard for normal-subgroup enumeration
    table_guard: int = 60       # guard for table construction
    a5a6_free: bool = True      # no alternating composition factor A5/A6
    expected: dict = field(default_factory=dict)


# --- permutation builders ---

def _cyclic(n: int) -> PermGroup:
    if n == 1:
        return PermGroup.from_generators([Permutation((0,))], degree=1, bound=2)
    gen = Permutation(tuple((x + 1) % n for x in range(n)))
    return PermGroup.from_generators([gen], bound=n + 1)


def _elem_abelian(p: int, k: int) -> PermGroup:
    gens = []
    d = p * k
    for blk in range(k):
        images = list(range(d))
        for x in range(p):
            images[blk * p + x] = blk * p + (x + 1) % p
        gens.append(Permutation(tuple(images)))
    return PermGroup.from_generators(gens, bound=p ** k + 1)


def _dihedral(order: int) -> PermGroup:
    t = order // 2
    rot = Permutation(tuple((x + 1) % t for x in range(t)))
    flip = Permutation(tuple((-x) % t for x in range(t)))
    return PermGroup.from_generators([rot, flip], bound=order + 1)


def _symmetric(n: int) -> PermGroup:
    gens = [Permutation(tuple([1, 0] + list(range(2, n)))),
            Permutation(tuple(list(range(1, n)) + [0]))]
    bound = 1
    for i in range(2, n + 1):
        bound *= i
    return PermGroup.from_generators(gens, bound=bound + 1)


def _alternating(n: int) -> PermGroup:
    three = Permutation(tuple([1, 2, 0] + list(range(3, n))))
    if n % 2:
        big = Permutation(tuple(list(range(1, n)) + [0]))
    else:
        big = Permutation(tuple([0] + list(range(2, n)) + [1]))
    bound = 1
    for i in range(2, n + 1):
        bound *= i
    return PermGroup.from_generators([three, big], bound=bound // 2 + 1)


def _quaternion8() -> PermGroup:
    # regular action on {1,-1,i,-i,j,-j,k,-k}: left mult by i and j
    i_img = (2, 3, 1, 0, 6, 7, 5, 4)
    j_img = (4, 5, 7, 6, 1, 0, 2, 3)
    g = PermGroup.from_generators([Permutation(i_img), Permutation(j_img)], bound=9)
    n2 = sum(1 for x in range(g.order) if g.element_order(x) == 2)
    if g.order != 8 or n2 != 1:
        raise ConstructionMismatch("quaternion recipe broke its relations")
    return g


def _affine_prime(p: int, mult: int, order: int) -> PermGroup:
    add = Permutation(tuple((x + 1) % p for x in range(p)))
    mul = Permutation(tuple((mult * x) % p for x in range(p)))
    return PermGroup.from_generators([add, mul], bound=order + 1)


def _vector_points(p: int, k: int) -> list[tuple[int, ...]]:
    pts = [()]
    for _ in range(k):
        pts = [v + (c,) for v in pts for c in range(p)]
    return pts


def _vector_perm(p: int, pts: list, index: dict, fn) -> Permutation:
    return Permutation(tuple(index[fn(v)] for v in pts))


def _translations(p: int, k: int, pts: list, index: dict) -> list[Permutation]:
    gens = []
    for axis in range(k):
        def shift(v, axis=axis):
            return tuple((c + 1) % p if i == axis else c for i, c in enumerate(v))
        gens.append(_vector_perm(p, pts, index, shift))
    return gens


def _frob_3k_2(k: int) -> PermGroup:
    pts = _vector_points(3, k)
    index = {v: i for i, v in enumerate(pts)}
    gens = _translations(3, k, pts, index)
    gens.append(_vector_perm(3, pts, index,
                             lambda v: tuple((-c) % 3 for c in v)))
    return PermGroup.from_generators(gens, bound=2 * 3 ** k + 1)


_GAMMA_PRIME_ROOT = {3: 2, 5: 2, 7: 3}


def _gamma(q: int) -> PermGroup:
    """Full one-dimensional affine group of the field with q elements."""
    if q in _GAMMA_PRIME_ROOT:
        return _affine_prime(q, _GAMMA_PRIME_ROOT[q], q * (q - 1))
    if q == 4:   # F2[y]/(y^2+y+1), multiply by y
        p, k, mul = 2, 2, lambda v: (v[1], (v[0] + v[1]) % 2)
    elif q == 8:  # F2[y]/(y^3+y+1), multiply by y
        p, k, mul = 2, 3, lambda v: (v[2], (v[0] + v[2]) % 2, v[1])
    elif q == 9:  # F3[y]/(y^2+1), multiply by y+1 (order 8)
        p, k, mul = 3, 2, lambda v: ((v[0] - v[1]) % 3, (v[0] + v[1]) % 3)
    else:
        raise UnknownName(f"no field table for gamma({q})")
    pts = _vector_points(p, k)
    index = {v: i for i, v in enumerate(pts)}
    gens = _translations(p, k, pts, index)
    gens.append(_vector_perm(p, pts, index, mul))
    return PermGroup.from_generators(gens, bound=q * (q - 1) + 1)


def _heisenberg3() -> PermGroup:
    # unitriangular 3x3 over F3 acting on column vectors
    pts = _vector_points(3, 3)
    index = {v: i for i, v in enumerate(pts)}
    x = _vector_perm(3, pts, index, lambda v: ((v[0] + v[1]) % 3, v[1], v[2]))
    y = _vector_perm(3, pts, index, lambda v: (v[0], (v[1] + v[2]) % 3, v[2]))
    return PermGroup.from_generators([x, y], bound=28)


def _sg_27_4() -> PermGroup:
    return _affine_prime(9, 4, 27)


def _sg_36_9() -> PermGroup:
    pts = _vector_points(3, 2)
    index = {v: i for i, v in enumerate(pts)}
    gens = _translations(3, 2, pts, index)
    gens.append(_vector_perm(3, pts, index,
                             lambda v: ((-v[1]) % 3, v[0])))
    return PermGroup.from_generators(gens, bound=37)


def _dih_vector(p: int, k: int, order: int) -> PermGroup:
    pts = _vector_points(p, k)
    index = {v: i for i, v in enumerate(pts)}
    gens = _translations(p, k, pts, index)
    gens.append(_vector_perm(p, pts, index,
                             lambda v: tuple((-c) % p for c in v)))
    return PermGroup.from_generators(gens, bound=order + 1)


def _sg_80_49() -> PermGroup:
    # F2[y]/(y^4+y+1) translations, multiplication by y^3 (order 5)
    pts = _vector_points(2, 4)
    index = {v: i for i, v in enumerate(pts)}
    gens = _translations(2, 4, pts, index)

    def mul_y(v):
        return (v[3], (v[0] + v[3]) % 2, v[1], v[2])

    def mul_y3(v):
        return mul_y(mul_y(mul_y(v)))

    gens.append(_vector_perm(2, pts, index, mul_y3))
    return PermGroup.from_generators(gens, bound=81)


def _sg_81_3() -> PermGroup:
    # C3^2 : C9, the C9 acting through order-3 unipotent [[1,1],[0,1]];
    # a disjoint 9-cycle block carries the top generator's full order
    pts = _vector_points(3, 2)
    index = {v: i for i, v in enumerate(pts)}
    t1 = Permutation(tuple(index[((v[0] + 1) % 3, v[1])] for v in pts)
                     + tuple(range(9, 18)))
    t2 = Permutation(tuple(index[(v[0], (v[1] + 1) % 3)] for v in pts)
                     + tuple(range(9, 18)))
    sigma = Permutation(tuple(index[((v[0] + v[1]) % 3, v[1])] for v in pts)
                        + tuple(9 + (x + 1) % 9 for x in range(9)))
    g = PermGroup.from_generators([t1, t2, sigma], bound=82)
    if g.element_order(g.element_index(sigma)) != 9:
        raise ConstructionMismatch("top generator lost its order")
    return g


def _sg_81_4() -> PermGroup:
    # C9 : C9 with b a b^-1 = a^4, right-regular on element pairs
    pts = [(i, j) for i in range(9) for j in range(9)]
    index = {v: i for i, v in enumerate(pts)}

    def rmul(g2):
        i2, j2 = g2
        return Permutation(tuple(
            index[((i1 + pow(4, j1, 9) * i2) % 9, (j1 + j2) % 9)]
            for (i1, j1) in pts))

    a, b = rmul((1, 0)), rmul((0, 1))
    g = PermGroup.from_generators([a, b], bound=82)
    ia, ib = g.element_index(a), g.element_index(b)
    conj = g.conjugate_index(ia, g.inverse_index(ib))  # b a b^-1
    if conj != g.element_index(rmul((4, 0))):
        raise ConstructionMismatch("twist relation b a b^-1 = a^4 failed")
    return g


def _sg_147_4() -> PermGroup:
    # C7^2 : C3 via the fixed-point-free scalar 2I
    pts = _vector_points(7, 2)
    index = {v: i for i, v in enumerate(pts)}
    gens = _translations(7, 2, pts, index)
    gens.append(_vector_perm(7, pts, index,
                             lambda v: tuple((2 * c) % 7 for c in v)))
    return PermGroup.from_generators(gens, bound=148)


def _central_product_32(second_factor: Callable[[], PermGroup]) -> PermGroup:
    d8 = _dihedral(8)
    other = second_factor()
    prod = direct_product(d8, other)
    z_parts = []
    for factor, offset, deg in ((d8, 0, d8.degree), (other, d8.degree, other.degree)):
        zs = [i for i in center(factor) if factor.element_order(i) == 2]
        if len(zs) != 1:
            raise ConstructionMismatch("factor center is not of order 2")
        z_parts.append(factor.elements[zs[0]].images)
    diag = Permutation(z_parts[0] + tuple(x + d8.degree for x in z_parts[1]))
    n = subgroup_closure(prod, [prod.element_index(diag)])
    if len(n) != 2:
        raise ConstructionMismatch("diagonal central subgroup has wrong size")
    return quotient_group(prod, n)


def _builder_direct(*parts: Callable[[], PermGroup]) -> Callable[[], PermGroup]:
    def build() -> PermGroup:
        g = parts[0]()
        for nxt in parts[1:]:
            g = direct_product(g, nxt())
        return g
    return build


# --- registry ---

_REGISTRY: dict[str, CatalogEntry] = {}


def _add(entry: CatalogEntry) -> None:
    assert entry.name not in _REGISTRY
    _REGISTRY[entry.name] = entry


def _register_all() -> None:
    _add(CatalogEntry("trivial", 1, "C1", builder=lambda: _cyclic(1),
                      expected={"degrees": (1,)}))
    for n in (2, 3, 4, 5, 6, 7, 8, 9, 12):
        _add(CatalogEntry(f"cyclic_{n}", n, f"C{n}",
                          builder=(lambda n=n: _cyclic(n)),
                          expected={"degrees": (1,) * n,
                                    **({"cdc_size": 1} if n == 2 else {})}))
    _add(CatalogEntry("elab_2_2", 4, "C2 x C2", builder=lambda: _elem_abelian(2, 2),
                      expected={"degrees": (1,) * 4, "cdc_size": 1}))
    _add(CatalogEntry("elab_2_3", 8, "C2 x C2 x C2", builder=lambda: _elem_abelian(2, 3),
                      expected={"degrees": (1,) * 8, "cdc_size": 1}))
    _add(CatalogEntry("elab_3_2", 9, "C3 x C3", builder=lambda: _elem_abelian(3, 2),
                      expected={"degrees": (1,) * 9}))
    for order in (8, 10, 12, 14, 18, 22):
        exp: dict = {}
        if order == 8:
            exp = {"cv": {"1", "-1", "2", "-2", "0"}, "extraspecial": True}
        elif order == 10:
            exp = {"four_value_nonlinear": True, "derived_size": 5,
                   "frobenius": (5, 2), "ncv_size": 4,
                   "exists_normal_with_2group_quotient": True,
                   "exists_normal_with_frobenius_cyclic_quotient": True}
        elif order == 12:
            exp = {"cdc_size": 3, "dl": 2}
        _add(CatalogEntry(f"dihedral_{order}", order,
                          f"D{order} (points = Z_{order // 2})",
                          builder=(lambda order=order: _dihedral(order)),
                          expected=exp))
    _add(CatalogEntry("q8", 8, "quaternion group, regular action",
                      builder=_quaternion8,
                      expected={"cv": {"1", "-1", "2", "-2", "0"},
                                "extraspecial": True}))
    _add(CatalogEntry("sym_3", 6, "S3", builder=lambda: _symmetric(3),
                      expected={"cv": {"1", "-1", "0", "2"}, "cdc_size": 2,
                                "frobenius": (3, 2)}))
    _add(CatalogEntry("sym_4", 24, "S4", builder=lambda: _symmetric(4),
                      expected={"cv": {"1", "2", "3", "0", "-1"}, "cdc_size": 2,
                                "rational": True, "row_cv_max": 4, "dl": 3,
                                "degrees": (1, 1, 2, 3, 3)}))
    _add(CatalogEntry("sym_5", 120, "S5", builder=lambda: _symmetric(5),
                      a5a6_free=False,
                      expected={"rational": True, "ncv": {"0", "-1", "-2"},
                                "dl": None}))
    _add(CatalogEntry("sym_6", 720, "S6", builder=lambda: _symmetric(6),
                      a5a6_free=False, expected={"rational": True, "dl": None}))
    _add(CatalogEntry("alt_4", 12, "A4", builder=lambda: _alternating(4),
                      expected={"degrees": (1, 1, 1, 3), "dl": 2,
                                "frobenius": (4, 3)}))
    _add(CatalogEntry("alt_5", 60, "A5", builder=lambda: _alternating(5),
                      a5a6_free=False,
                      expected={"degrees": (1, 3, 3, 4, 5), "rational": False,
                                "has_row_with_cv_size": 5, "dl": None}))
    _add(CatalogEntry("alt_6", 360, "A6", builder=lambda: _alternating(6),
                      a5a6_free=False,
                      expected={"degrees": (1, 5, 5, 8, 8, 9, 10),
                                "rational": False, "dl": None}))
    # A7 is not one of the two excluded alternating factors
    _add(CatalogEntry("sym_7", 5040, "S7", tier="large",
                      builder=lambda: _symmetric(7),
                      expected={"rational": True, "dl": None}))
    _add(CatalogEntry("alt_7", 2520, "A7", tier="large",
                      builder=lambda: _alternating(7),
                      expected={"rational": False, "dl": None}))
    for k in (1, 2, 3):
        _add(CatalogEntry(f"frob_3k_2_{k}", 2 * 3 ** k,
                          f"C3^{k} : C2 (inversion on translations)",
                          builder=(lambda k=k: _frob_3k_2(k)),
                          expected={"cdc_size": 2, "cd": (1, 2),
                                    "frobenius": (3 ** k, 2)}))
    for q in (3, 4, 5, 7, 8, 9):
        _add(CatalogEntry(f"gamma_{q}", q * (q - 1), f"AGL(1,{q})",
                          builder=(lambda q=q: _gamma(q)),
                          expected={"frobenius": (q, q - 1),
                                    "complement_cyclic": True,
                                    "nonlinear_row_values":
                                        {str(q - 1), "-1", "0"}}))
    _add(CatalogEntry("c2xs3", 12, "C2 x S3",
                      builder=_builder_direct(lambda: _cyclic(2),
                                              lambda: _symmetric(3)),
                      expected={"cdc_size": 3, "dl": 2}))
    _add(CatalogEntry("d8xc2", 16, "D8 x C2",
                      builder=_builder_direct(lambda: _dihedral(8),
                                              lambda: _cyclic(2)),
                      expected={"cdc_size": 3, "cd": (1, 2)}))
    _add(CatalogEntry("q8xc2", 16, "Q8 x C2",
                      builder=_builder_direct(_quaternion8, lambda: _cyclic(2)),
                      expected={"cdc_size": 3, "cd": (1, 2)}))
    _add(CatalogEntry("d8xc2xc2", 32, "D8 x C2 x C2",
                      builder=_builder_direct(lambda: _dihedral(8),
                                              lambda: _cyclic(2),
                                              lambda: _cyclic(2)),
                      expected={"cdc_size": 3, "cd": (1, 2)}))
    _add(CatalogEntry("sg_21_1", 21, "SmallGroup(21,1): C7 : C3, x -> 2x",
                      builder=lambda: _affine_prime(7, 2, 21),
                      expected={"cd": (1, 3), "four_value_nonlinear": True,
                                "nonlinear_count": 2}))
    _add(CatalogEntry("sg_27_3", 27, "SmallGroup(27,3): Heisenberg mod 3",
                      builder=_heisenberg3,
                      expected={"four_value_nonlinear": True, "socle": 3,
                                "unique_minimal_normal": 3,
                                "extraspecial": True}))
    _add(CatalogEntry("sg_27_4", 27, "SmallGroup(27,4): C9 : C3, x -> 4x",
                      builder=_sg_27_4,
                      expected={"four_value_nonlinear": True, "socle": 3,
                                "unique_minimal_normal": 3,
                                "nonlinear_count": 2, "cd": (1, 3)}))
    _add(CatalogEntry("sg_36_9", 36, "SmallGroup(36,9): C3^2 : C4",
                      builder=_sg_36_9,
                      expected={"four_value_nonlinear": True,
                                "unique_minimal_normal": 9,
                                "nonlinear_count": 2,
                                "nonlinear_degrees": (4, 4)}))
    _add(CatalogEntry("sg_50_4", 50, "SmallGroup(50,4): C5^2 : C2 (inversion)",
                      builder=lambda: _dih_vector(5, 2, 50),
                      expected={"four_value_nonlinear": True,
                                "deg2_rows": 12, "normal_count": 9,
                                "quotient_d10_count": 6,
                                "frobenius": (25, 2)}))
    _add(CatalogEntry("sg_55_1", 55, "SmallGroup(55,1): C11 : C5, x -> 3x",
                      builder=lambda: _affine_prime(11, 3, 55),
                      expected={"four_value_nonlinear": True, "cd": (1, 5)}))
    _add(CatalogEntry("sg_78_1", 78, "SmallGroup(78,1): C13 : C6, x -> 4x",
                      builder=lambda: _affine_prime(13, 4, 78),
                      expected={"four_value_nonlinear": True, "cd": (1, 6)}))
    _add(CatalogEntry("sg_80_49", 80, "SmallGroup(80,49): C2^4 : C5",
                      builder=_sg_80_49,
                      expected={"four_value_nonlinear": True, "socle": 16,
                                "unique_minimal_normal": 16, "cd": (1, 5)}))
    _add(CatalogEntry("sg_81_3", 81, "SmallGroup(81,3): C3^2 : C9",
                      builder=_sg_81_3, max_classes=35,
                      expected={"four_value_nonlinear": True, "socle": 9,
                                "socle_elementary_p": 3}))
    _add(CatalogEntry("sg_81_4", 81, "SmallGroup(81,4): C9 : C9",
                      builder=_sg_81_4, max_classes=35,
                      expected={"four_value_nonlinear": True, "socle": 9,
                                "socle_elementary_p": 3}))
    _add(CatalogEntry("sg_81_12", 81, "SmallGroup(81,12): C3 x Heisenberg",
                      builder=_builder_direct(lambda: _cyclic(3), _heisenberg3),
                      max_classes=35,
                      expected={"four_value_nonlinear": True, "socle": 9,
                                "socle_elementary_p": 3}))
    _add(CatalogEntry("sg_81_13", 81, "SmallGroup(81,13): C3 x (C9 : C3)",
                      builder=_builder_direct(lambda: _cyclic(3), _sg_27_4),
                      max_classes=35,
                      expected={"four_value_nonlinear": True, "socle": 9,
                                "socle_elementary_p": 3}))
    _add(CatalogEntry("sg_136_12", 136, "SmallGroup(136,12): C17 : C8, x -> 2x",
                      builder=lambda: _affine_prime(17, 2, 136),
                      expected={"four_value_nonlinear": True, "cd": (1, 8),
                                "exists_normal_with_2group_quotient": True}))
    _add(CatalogEntry("sg_147_4", 147, "SmallGroup(147,4): C7^2 : C3 (scalar 2)",
                      builder=_sg_147_4,
                      expected={"four_value_nonlinear": True, "socle": 49,
                                "socle_elementary_p": 7, "cd": (1, 3)}))
    _add(CatalogEntry("sg_250_14", 250, "SmallGroup(250,14): C5^3 : C2 (inversion)",
                      tier="optional", builder=lambda: _dih_vector(5, 3, 250),
                      max_classes=70, table_guard=70,
                      expected={"four_value_nonlinear": True, "cd": (1, 2),
                                "deg2_rows": 62,
                                "exists_normal_with_frobenius_cyclic_quotient": True}))
    _add(CatalogEntry("extraspecial_32_plus", 32,
                      "D8 * D8 (central product)", tier="optional",
                      builder=lambda: _central_product_32(lambda: _dihedral(8)),
                      expected={"extraspecial": True, "cd": (1, 4),
                                "cv": {"1", "-1", "4", "-4", "0"},
                                "involutions": 19}))
    _add(CatalogEntry("extraspecial_32_minus", 32,
                      "D8 * Q8 (central product)", tier="optional",
                      builder=lambda: _central_product_32(_quaternion8),
                      expected={"extraspecial": True, "cd": (1, 4),
                                "cv": {"1", "-1", "4", "-4", "0"},
                                "involutions": 11}))


_register_all()

_ALIASES = {
    "c1": "trivial", "s3": "sym_3", "s4": "sym_4", "s5": "sym_5",
    "s6": "sym_6", "s7": "sym_7", "a4": "alt_4", "a5": "alt_5",
    "a6": "alt_6", "a7": "alt_7", "he3": "sg_27_3", "v4": "elab_2_2",
}
for _n in (2, 3, 4, 5, 6, 7, 8, 9, 12):
    _ALIASES[f"c{_n}"] = f"cyclic_{_n}"
for _n in (8, 10, 12, 14, 18, 22):
    _ALIASES[f"d{_n}"] = f"dihedral_{_n}"


def resolve_name(name: str, param: int | None = None) -> str:
    if param is not None:
        name = f"{name}_{param}"
    name = _ALIASES.get(name, name)
    if name not in _REGISTRY:
        raise UnknownName(f"no catalog entry named {name!r}")
    return name


def entry(name: str, param: int | None = None) -> CatalogEntry:
    return _REGISTRY[resolve_name(name, param)]


def names(tier: str | None = None) -> list[str]:
    """Entry names, sorted by (order, name); optionally one tier only."""
    out = [e for e in _REGISTRY.values() if tier is None or e.tier == tier]
    out.sort(key=lambda e: (e.order, e.name))
    return [e.name for e in out]


def build(name: str, param: int | None = None) -> PermGroup:
    """Construct a catalog group; the declared order is enforced."""
    ent = entry(name, param)
    g = ent.builder()
    if g.order != ent.order:
        raise ConstructionMismatch(
            f"{ent.name}: built order {g.order}, declared {ent.order}")
    return g


@lru_cache(maxsize=None)
def _bundle_cached(resolved: str, seed: int) -> tuple[
        CatalogEntry, PermGroup, ClassData, CharTable, InvariantReport]:
    ent = _REGISTRY[resolved]
    g = build(resolved)
    cd = conjugacy_classes(g)
    table = character_table(g, cd, seed=seed, max_classes=ent.table_guard)
    rep = report(table, max_classes=ent.max_classes)
    return ent, g, cd, table, rep


def bundle(name: str, seed: int = 0) -> tuple[CatalogEntry, PermGroup, ClassData,
                                              CharTable, InvariantReport]:
    """Entry, group, classes, table, and report — cached per (name, seed)."""
    return _bundle_cached(resolve_name(name), seed)


def clear_caches() -> None:
    _bundle_cached.cache_clear()


def check_expected(name: str, seed: int = 0) -> list[str]:
    """Evaluate the entry's frozen claims; returns mismatch descriptions."""
    ent, g, cd, table, rep = bundle(resolve_name(name), seed)
    bad: list[str] = []
    exp = ent.expected

    def fail(key, got):
        bad.append(f"{ent.name}: {key} expected {exp[key]!r}, got {got!r}")

    if "degrees" in exp and table.degrees != exp["degrees"]:
        fail("degrees", table.degrees)
    if "cd" in exp and rep.cd != exp["cd"]:
        fail("cd", rep.cd)
    if "cv" in exp and set(rep.cv_displays()) != exp["cv"]:
        fail("cv", set(rep.cv_displays()))
    if "ncv" in exp and {v.display() for v in rep.ncv} != exp["ncv"]:
        fail("ncv", {v.display() for v in rep.ncv})
    if "cdc_size" in exp and len(rep.cdc) != exp["cdc_size"]:
        fail("cdc_size", len(rep.cdc))
    if "ncv_size" in exp and len(rep.ncv) != exp["ncv_size"]:
        fail("ncv_size", len(rep.ncv))
    if "dl" in exp and rep.dl != exp["dl"]:
        fail("dl", rep.dl)
    if "rational" in exp and rep.is_rational_group != exp["rational"]:
        fail("rational", rep.is_rational_group)
    if "row_cv_max" in exp and max(rep.per_char_cv_sizes) > exp["row_cv_max"]:
        fail("row_cv_max", max(rep.per_char_cv_sizes))
    if "has_row_with_cv_size" in exp and \
            exp["has_row_with_cv_size"] not in rep.per_char_cv_sizes:
        fail("has_row_with_cv_size", rep.per_char_cv_sizes)
    if "four_value_nonlinear" in exp:
        sizes = [s for r, s in zip(table.rows, rep.per_char_cv_sizes)
                 if r.degree > 1]
        ok = bool(sizes) and all(s == 4 for s in sizes)
        if ok != exp["four_value_nonlinear"]:
            fail("four_value_nonlinear", sizes)
    if "nonlinear_count" in exp:
        got = sum(1 for r in table.rows if r.degree > 1)
        if got != exp["nonlinear_count"]:
            fail("nonlinear_count", got)
    if "nonlinear_degrees" in exp:
        got = tuple(sorted(r.degree for r in table.rows if r.degree > 1))
        if got != exp["nonlinear_degrees"]:
            fail("nonlinear_degrees", got)
    if "deg2_rows" in exp:
        got = sum(1 for r in table.rows if r.degree == 2)
        if got != exp["deg2_rows"]:
            fail("deg2_rows", got)
    if "nonlinear_row_values" in exp:
        for r in table.rows:
            if r.degree > 1:
                got = {v.display() for v in set(r.values)}
                if got != exp["nonlinear_row_values"]:
                    fail("nonlinear_row_values", got)
    if "extraspecial" in exp and rep.flags.is_extraspecial != exp["extraspecial"]:
        fail("extraspecial", rep.flags.is_extraspecial)
    if "involutions" in exp:
        got = sum(1 for i in range(g.order) if g.element_order(i) == 2)
        if got != exp["involutions"]:
            fail("involutions", got)
    if "frobenius" in exp:
        frob = rep.flags.frobenius
        got = None if frob is None else (len(frob[0]), len(frob[1]))
        if got != exp["frobenius"]:
            fail("frobenius", got)
    if "complement_cyclic" in exp:
        frob = rep.flags.frobenius
        got = frob is not None and is_cyclic_subset(g, frob[1])
        if got != exp["complement_cyclic"]:
            fail("complement_cyclic", got)
    if "derived_size" in exp:
        series = derived_series(g)
        got = len(series[1]) if len(series) > 1 else 1
        if got != exp["derived_size"]:
            fail("derived_size", got)
    normals = None
    wants_normals = bool({"unique_minimal_normal", "normal_count",
                          "quotient_d10_count",
                          "exists_normal_with_2group_quotient",
                          "exists_normal_with_frobenius_cyclic_quotient"}
                         & exp.keys()) \
        or ("socle" in exp and not rep.flags.is_nilpotent)
    if wants_normals:
        normals = normal_subgroups(g, cd, max_classes=ent.max_classes)
    if "socle" in exp:
        soc = socle_of_nilpotent(g) if rep.flags.is_nilpotent \
            else socle_from_normals(g, normals)
        if len(soc) != exp["socle"]:
            fail("socle", len(soc))
        if "socle_elementary_p" in exp:
            p = exp["socle_elementary_p"]
            ok = all(g.element_order(i) in (1, p) for i in soc)
            if not ok:
                fail("socle_elementary_p", sorted({g.element_order(i) for i in soc}))
    if "unique_minimal_normal" in exp:
        minimals = minimal_normal_subgroups(normals)
        if len(minimals) != 1 or len(minimals[0]) != exp["unique_minimal_normal"]:
            fail("unique_minimal_normal", sorted(len(m) for m in minimals))
    if "normal_count" in exp and len(normals) != exp["normal_count"]:
        fail("normal_count", len(normals))
    if "quotient_d10_count" in exp:
        got = 0
        for n_set in normals:
            if g.order // len(n_set) == 10:
                q = quotient_group(g, n_set)
                flags_q = structure_flags(q)
                if not flags_q.is_abelian:
                    got += 1
        if got != exp["quotient_d10_count"]:
            fail("quotient_d10_count", got)
    if "exists_normal_with_2group_quotient" in exp:
        got = any(len(n_set) < g.order and
                  _is_power_of_2(g.order // len(n_set)) for n_set in normals)
        if got != exp["exists_normal_with_2group_quotient"]:
            fail("exists_normal_with_2group_quotient", got)
    if "exists_normal_with_frobenius_cyclic_quotient" in exp:
        got = False
        for n_set in normals:
            if len(n_set) == g.order:
                continue
            q = g if len(n_set) == 1 else quotient_group(g, n_set)
            try:
                flags_q = structure_flags(q, max_classes=ent.max_classes)
            except Exception:
                continue
            if flags_q.frobenius is not None and \
                    is_cyclic_subset(q, flags_q.frobenius[1]):
                got = True
                break
        if got != exp["exists_normal_with_frobenius_cyclic_quotient"]:
            fail("exists_normal_with_frobenius_cyclic_quotient", got)
    return bad


def _is_power_of_2(n: int) -> bool:
    return n >= 2 and (n & (n - 1)) == 0
