"""Finite permutation groups with full element enumeration.

Groups here are small (order bounded, default 2500), so the element list
is materialized by breadth-first closure over the generators and all
structural questions (classes, normal subgroups, quotients, derived
series) are answered by exact enumeration.  Element order is canonical:
BFS from the identity with the generator list in the given order, which
makes every downstream computation deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


class RepeatedPoint(ValueError):
    """A point occurs twice in cycle notation."""


class PointOutOfRange(ValueError):
    """A point in cycle notation is outside 1..degree."""


class OrderBoundExceeded(RuntimeError):
    """Generator closure grew past the configured order bound."""


class NotNormal(ValueError):
    """Quotient requested by a subset that is not a normal subgroup."""


class TooManyClasses(RuntimeError):
    """Class count exceeds the guard for normal-subgroup enumeration."""


class ParseError(ValueError):
    """Group-file syntax error, with 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class Permutation:
    """A permutation of {0, ..., degree-1} stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images, _check: bool = True):
        images = tuple(images)
        if _check:
            if sorted(images) != list(range(len(images))):
                raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        self.images = images

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(tuple(range(degree)), _check=False)

    def __mul__(self, other: "Permutation") -> "Permutation":
        # Composition "apply self, then other".
        oi = other.images
        return Permutation(tuple(oi[x] for x in self.images), _check=False)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv), _check=False)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each rotated to start at its least point,
        sorted by that point."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return tuple(out)

    def cycle_string(self) -> str:
        """1-based disjoint cycle notation; identity is "()"."""
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cyc)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self.cycle_string()})"


def perm_from_cycles(cycles, degree: int) -> Permutation:
    """Build a permutation from 0-based cycles, validating points.

    Args:
      cycles: iterable of point sequences, e.g. [(0, 1, 2), (3, 4)].
      degree: number of points.

    Raises:
      PointOutOfRange: a point is not in 0..degree-1.
      RepeatedPoint: a point occurs twice (within or across cycles).
    """
    images = list(range(degree))
    seen: set[int] = set()
    for cyc in cycles:
        cyc = list(cyc)
        for p in cyc:
            if not 0 <= p < degree:
                raise PointOutOfRange(f"point {p + 1} outside 1..{degree}")
            if p in seen:
                raise RepeatedPoint(f"point {p + 1} repeated")
            seen.add(p)
        for i, p in enumerate(cyc):
            images[p] = cyc[(i + 1) % len(cyc)]
    return Permutation(tuple(images), _check=False)


def parse_cycle_text(text: str, degree: int) -> Permutation:
    """Parse 1-based cycle notation like "(1 2 3)(4 5)"; "()" is the identity.

    Raises ValueError (or RepeatedPoint / PointOutOfRange) on bad input;
    positions are reported by parse_group_file, which tracks lines.
    """
    cycles: list[list[int]] = []
    i = 0
    s = text.strip()
    while i < len(s):
        if s[i] != "(":
            raise ValueError(f"expected '(' at column {i + 1}")
        j = s.index(")", i + 1) if ")" in s[i + 1:] else -1
        if j < 0:
            raise ValueError(f"unclosed cycle at column {i + 1}")
        body = s[i + 1:j].replace(",", " ").split()
        cyc = []
        for tok in body:
            if not tok.isdigit():
                raise ValueError(f"bad point {tok!r}")
            cyc.append(int(tok) - 1)
        if cyc:
            cycles.append(cyc)
        i = j + 1
        while i < len(s) and s[i] == " ":
            i += 1
    return perm_from_cycles(cycles, degree)


def parse_group_file(text: str, bound: int = 2500) -> "PermGroup":
    """Parse the group-description format.

    Line 1: ``degree N``.  Each further nonblank line: one generator in
    1-based cycle notation.  ``#`` starts a comment; blank lines ignored.
    """
    degree = None
    gens: list[Permutation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree" or not parts[1].isdigit():
                raise ParseError("expected 'degree N'", lineno, 1)
            degree = int(parts[1])
            if degree < 1:
                raise ParseError("degree must be at least 1", lineno, len("degree "))
            continue
        try:
            gens.append(parse_cycle_text(line, degree))
        except (RepeatedPoint, PointOutOfRange, ValueError) as exc:
            col = raw.index(line[0]) + 1 if line else 1
            raise ParseError(str(exc), lineno, col) from exc
    if degree is None:
        raise ParseError("missing 'degree N' header", 1, 1)
    if not gens:
        gens = [Permutation.identity(degree)]
    return PermGroup.from_generators(gens, degree=degree, bound=bound)


class PermGroup:
    """A fully enumerated permutation group.

    elements[0] is the identity; the rest follow BFS order over the
    generators, which is the canonical element order used everywhere.
    """

    __slots__ = ("degree", "generators", "elements", "order", "_index", "_inv", "_orders")

    def __init__(self, degree, generators, elements, index):
        self.degree = degree
        self.generators = generators
        self.elements = elements
        self.order = len(elements)
        self._index = index
        self._inv = None
        self._orders = None

    @classmethod
    def from_generators(cls, generators, degree: int | None = None, bound: int = 2500) -> "PermGroup":
        """Breadth-first closure of the generators from the identity.

        Args:
          generators: permutations, all of the same degree.
          degree: optional; inferred from the generators.
          bound: raise OrderBoundExceeded when the closure passes this.
        """
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("need generators or an explicit degree")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError("mixed degrees among generators")
        ident = Permutation.identity(degree)
        elements = [ident]
        index = {ident.images: 0}
        gen_images = [g.images for g in gens]
        pos = 0
        while pos < len(elements):
            cur = elements[pos].images
            pos += 1
            for gi in gen_images:
                nxt = tuple(gi[x] for x in cur)
                if nxt not in index:
                    if len(elements) >= bound:
                        raise OrderBoundExceeded(
                            f"group order exceeds bound {bound}")
                    index[nxt] = len(elements)
                    elements.append(Permutation(nxt, _check=False))
        return cls(degree, tuple(gens), tuple(elements), index)

    def element_index(self, perm: Permutation) -> int:
        try:
            return self._index[perm.images]
        except KeyError:
            raise KeyError(f"{perm!r} is not in the group") from None

    def mult_index(self, i: int, j: int) -> int:
        a = self.elements[i].images
        b = self.elements[j].images
        return self._index[tuple(b[x] for x in a)]

    def inverse_index(self, i: int) -> int:
        if self._inv is None:
            inv = []
            for e in self.elements:
                inv.append(self._index[e.inverse().images])
            self._inv = inv
        return self._inv[i]

    def element_order(self, i: int) -> int:
        if self._orders is None:
            self._orders = [e.order() for e in self.elements]
        return self._orders[i]

    def generator_indices(self) -> tuple[int, ...]:
        return tuple(self._index[g.images] for g in self.generators)

    def commutator_index(self, i: int, j: int) -> int:
        # [i, j] = i^-1 j^-1 i j
        t = self.mult_index(self.inverse_index(i), self.inverse_index(j))
        return self.mult_index(self.mult_index(t, i), j)

    def conjugate_index(self, i: int, g: int) -> int:
        # i^g = g^-1 i g
        return self.mult_index(self.mult_index(self.inverse_index(g), i), g)

    def __repr__(self):
        return f"PermGroup(order={self.order}, degree={self.degree})"


class ClassData:
    """Conjugacy classes in canonical order.

    Classes are sorted by (element order of representative, class size,
    image tuple of the representative); the identity class is index 0.
    The representative of a class is its least element index.
    """

    __slots__ = ("group", "classes", "reps", "sizes", "element_orders",
                 "elt_class", "inverse_class", "_power_cache")

    def __init__(self, group: PermGroup):
        self.group = group
        n = group.order
        assigned = [-1] * n
        raw: list[list[int]] = []
        gen_idx = group.generator_indices()
        for seed in range(n):
            if assigned[seed] != -1:
                continue
            cls_id = len(raw)
            orbit = [seed]
            assigned[seed] = cls_id
            frontier = [seed]
            while frontier:
                x = frontier.pop()
                for g in gen_idx:
                    y = group.conjugate_index(x, g)
                    if assigned[y] == -1:
                        assigned[y] = cls_id
                        orbit.append(y)
                        frontier.append(y)
            raw.append(sorted(orbit))
        order_key = lambda cls: (group.element_order(cls[0]), len(cls),
                                 group.elements[cls[0]].images)
        raw.sort(key=order_key)
        self.classes = tuple(tuple(c) for c in raw)
        self.reps = tuple(c[0] for c in self.classes)
        self.sizes = tuple(len(c) for c in self.classes)
        self.element_orders = tuple(group.element_order(r) for r in self.reps)
        elt_class = [0] * n
        for ci, cls in enumerate(self.classes):
            for x in cls:
                elt_class[x] = ci
        self.elt_class = tuple(elt_class)
        self.inverse_class = tuple(
            self.elt_class[group.inverse_index(r)] for r in self.reps)
        self._power_cache: dict[tuple[int, int], int] = {}

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    def power_class(self, i: int, t: int) -> int:
        """Class index of rep(i)**t."""
        m = self.element_orders[i]
        t %= m
        key = (i, t)
        hit = self._power_cache.get(key)
        if hit is None:
            p = self.group.elements[self.reps[i]] ** t
            hit = self.elt_class[self.group.element_index(p)]
            self._power_cache[key] = hit
        return hit


def conjugacy_classes(group: PermGroup) -> ClassData:
    return ClassData(group)


def centralizer_size(group: PermGroup, i: int) -> int:
    """Order of the centralizer of elements[i], by brute-force scan."""
    target = group.elements[i].images
    count = 0
    for e in group.elements:
        ei = e.images
        if all(ei[target[x]] == target[ei[x]] for x in range(group.degree)):
            count += 1
    return count


def center(group: PermGroup) -> frozenset[int]:
    gen_idx = group.generator_indices()
    out = set()
    for i in range(group.order):
        if all(group.conjugate_index(i, g) == i for g in gen_idx):
            out.add(i)
    return frozenset(out)


def subgroup_closure(group: PermGroup, seeds) -> frozenset[int]:
    """Closure of element indices under multiplication (subgroup generated)."""
    members = {0}
    frontier = [0]
    gens = sorted({s for s in seeds if s != 0})
    for s in gens:
        members.add(s)
        frontier.append(s)
    while frontier:
        x = frontier.pop()
        for g in gens:
            for y in (group.mult_index(x, g), group.mult_index(g, x)):
                if y not in members:
                    members.add(y)
                    frontier.append(y)
    return frozenset(members)


def small_generating_set(group: PermGroup, subset: frozenset[int]) -> list[int]:
    """Greedy small generating set for a known subgroup (ascending scan)."""
    gens: list[int] = []
    cur: frozenset[int] = frozenset({0})
    for i in sorted(subset):
        if i not in cur:
            gens.append(i)
            cur = subgroup_closure(group, gens)
            if len(cur) == len(subset):
                break
    return gens


def _normal_closure_in(group: PermGroup, ambient_gens: list[int], seeds: set[int]) -> frozenset[int]:
    # Smallest subgroup containing seeds and closed under conjugation by the
    # subgroup generated by ambient_gens.
    current = subgroup_closure(group, seeds)
    while True:
        extra = set()
        for t in ambient_gens:
            for x in current:
                y = group.conjugate_index(x, t)
                if y not in current:
                    extra.add(y)
        if not extra:
            return current
        current = subgroup_closure(group, set(current) | extra)


def derived_series(group: PermGroup) -> list[frozenset[int]]:
    """[G, G', G'', ...] down to stabilization (last term perfect or trivial)."""
    term = frozenset(range(group.order))
    gens = list(group.generator_indices())
    series = [term]
    while True:
        comms = {group.commutator_index(a, b) for a in gens for b in gens}
        nxt = _normal_closure_in(group, gens, comms)
        if nxt == term:
            break
        series.append(nxt)
        term = nxt
        if len(term) == 1:
            break
        gens = small_generating_set(group, term)
    return series


def derived_length(group: PermGroup) -> int | None:
    """Number of strict steps to the trivial subgroup; None if nonsolvable."""
    series = derived_series(group)
    if len(series[-1]) != 1:
        return None
    return len(series) - 1


def is_nilpotent(group: PermGroup) -> bool:
    """Upper central series reaches the whole group."""
    gen_idx = group.generator_indices()
    z: frozenset[int] = frozenset({0})
    while True:
        if len(z) == group.order:
            return True
        nxt = frozenset(
            i for i in range(group.order)
            if all(group.commutator_index(i, g) in z for g in gen_idx))
        if len(nxt) == len(z):
            return False
        z = nxt


def exponent(group: PermGroup) -> int:
    return math.lcm(*(group.element_order(i) for i in range(group.order)))


def is_cyclic_subset(group: PermGroup, subset) -> bool:
    subset = list(subset)
    return max(group.element_order(i) for i in subset) == len(subset)


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def normal_subgroups(group: PermGroup, classes: ClassData | None = None,
                     max_classes: int = 25) -> tuple[frozenset[int], ...]:
    """All normal subgroups, as element-index sets.

    Normal subgroups are exactly the class-closed unions containing the
    identity class that are product-closed.  The search branches on the
    lowest undecided class and saturates partial unions under class
    products, pruning when saturation touches an excluded class; each
    normal subgroup is reached exactly once.

    Raises TooManyClasses when the class count exceeds max_classes.
    """
    cd = classes if classes is not None else conjugacy_classes(group)
    k = cd.n_classes
    if k > max_classes:
        raise TooManyClasses(f"{k} classes exceeds guard {max_classes}")
    pm = [[0] * k for _ in range(k)]
    for i in range(k):
        rep = cd.reps[i]
        row = pm[i]
        for j in range(k):
            mask = 0
            for y in cd.classes[j]:
                mask |= 1 << cd.elt_class[group.mult_index(rep, y)]
            row[j] = mask
    sat_cache: dict[int, int] = {}

    def saturate(mask: int) -> int:
        hit = sat_cache.get(mask)
        if hit is not None:
            return hit
        start = mask
        work = [b for b in range(k) if (mask >> b) & 1]
        while work:
            i = work.pop()
            m = mask
            b = 0
            while m:
                if m & 1:
                    new = (pm[i][b] | pm[b][i]) & ~mask
                    if new:
                        mask |= new
                        nb = new
                        c = 0
                        while nb:
                            if nb & 1:
                                work.append(c)
                            nb >>= 1
                            c += 1
                m >>= 1
                b += 1
        sat_cache[start] = mask
        return mask

    full = (1 << k) - 1
    found: list[int] = []

    def dfs(inc: int, exc: int) -> None:
        inc = saturate(inc)
        if inc & exc:
            return
        und = full & ~inc & ~exc
        if not und:
            found.append(inc)
            return
        c = (und & -und).bit_length() - 1
        dfs(inc | (1 << c), exc)
        dfs(inc, exc | (1 << c))

    dfs(1, 0)
    subs = []
    for mask in found:
        members: list[int] = []
        for b in range(k):
            if (mask >> b) & 1:
                members.extend(cd.classes[b])
        subs.append(frozenset(members))
    subs.sort(key=lambda s: (len(s), sorted(s)))
    return tuple(subs)


def quotient_group(group: PermGroup, subset) -> PermGroup:
    """G/N as a permutation group on the right cosets Ng.

    Cosets are numbered in order of their least element; coset 0 is N.
    Right multiplication x -> xg on right cosets makes the projection a
    homomorphism under the "apply left factor first" composition.

    Raises NotNormal if the subset is not a normal subgroup.
    """
    n_set = frozenset(subset)
    if 0 not in n_set:
        raise NotNormal("subset does not contain the identity")
    if group.order % len(n_set):
        raise NotNormal("subset size does not divide the group order")
    gen_idx = group.generator_indices()
    for g in gen_idx:
        for x in n_set:
            if group.conjugate_index(x, g) not in n_set:
                raise NotNormal("subset is not closed under conjugation")
    coset_of = [-1] * group.order
    coset_reps: list[int] = []
    for i in range(group.order):
        if coset_of[i] != -1:
            continue
        cid = len(coset_reps)
        for n in n_set:
            m = group.mult_index(n, i)
            if coset_of[m] != -1:
                raise NotNormal("subset is not a subgroup (cosets overlap)")
            coset_of[m] = cid
        coset_reps.append(i)
    n_cosets = len(coset_reps)
    if n_cosets * len(n_set) != group.order:
        raise NotNormal("subset is not a subgroup")
    q_gens = []
    for g in gen_idx:
        images = tuple(coset_of[group.mult_index(rep, g)] for rep in coset_reps)
        q_gens.append(Permutation(images, _check=False))
    quotient = PermGroup.from_generators(q_gens, degree=n_cosets, bound=group.order + 1)
    if quotient.order != group.order // len(n_set):
        raise NotNormal("coset action order mismatch")
    return quotient


def direct_product(left: PermGroup, right: PermGroup, bound: int | None = None) -> PermGroup:
    """H x K acting on the disjoint union of the two point sets."""
    d = left.degree + right.degree
    gens = []
    for g in left.generators:
        gens.append(Permutation(g.images + tuple(range(left.degree, d)), _check=False))
    for g in right.generators:
        gens.append(Permutation(tuple(range(left.degree)) +
                                tuple(x + left.degree for x in g.images), _check=False))
    target = left.order * right.order
    product = PermGroup.from_generators(gens, degree=d, bound=bound or target + 1)
    assert product.order == target
    return product


@dataclass(frozen=True)
class StructureFlags:
    """Structural facts read off the subgroup/class data."""

    is_abelian: bool
    elementary_abelian_p: int | None
    is_nilpotent: bool
    p_group_p: int | None
    is_extraspecial: bool
    o_p: dict[int, frozenset[int]]
    frobenius: tuple[frozenset[int], frozenset[int]] | None


def o_p_subgroups(group: PermGroup, nilpotent: bool,
                  normals: tuple[frozenset[int], ...] | None) -> dict[int, frozenset[int]]:
    out: dict[int, frozenset[int]] = {}
    for p in _factorize(group.order):
        if nilpotent:
            members = frozenset(
                i for i in range(group.order)
                if _is_p_power(group.element_order(i), p))
            out[p] = members
            continue
        best: frozenset[int] = frozenset({0})
        p_normals = [n for n in normals if _is_p_power(len(n), p)]
        for n in p_normals:
            if len(n) > len(best):
                best = n
        for n in p_normals:
            assert n <= best, "normal p-subgroups not nested under the largest"
        out[p] = best
    return out


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def frobenius_decomposition(group: PermGroup,
                            normals: tuple[frozenset[int], ...],
                            ) -> tuple[frozenset[int], frozenset[int]] | None:
    """(kernel, complement) if G is Frobenius with that kernel, else None.

    A proper nontrivial normal subgroup N is a Frobenius kernel iff
    C_G(n) <= N for every nonidentity n in N; the complement is then a
    subgroup of order |G|/|N| meeting N trivially.  Complements are
    2-generated, so closure over 1- and 2-element subsets of the
    candidate pool finds one.
    """
    for n_set in sorted(normals, key=len, reverse=True):
        if len(n_set) in (1, group.order):
            continue
        if not _kernel_centralizer_condition(group, n_set):
            continue
        h = group.order // len(n_set)
        comp = _find_complement(group, n_set, h)
        if comp is not None:
            return n_set, comp
    return None


def _kernel_centralizer_condition(group: PermGroup, n_set: frozenset[int]) -> bool:
    outside = [g for g in range(group.order) if g not in n_set]
    for n in n_set:
        if n == 0:
            continue
        for g in outside:
            if group.conjugate_index(n, g) == n:
                return False
    return True


def _find_complement(group: PermGroup, n_set: frozenset[int], h: int) -> frozenset[int] | None:
    pool = [i for i in range(1, group.order)
            if i not in n_set and h % group.element_order(i) == 0]

    def try_closure(seeds: list[int]) -> frozenset[int] | None:
        members = {0}
        frontier = list(seeds)
        for s in seeds:
            members.add(s)
        while frontier:
            x = frontier.pop()
            for g in seeds:
                for y in (group.mult_index(x, g), group.mult_index(g, x)):
                    if y not in members:
                        if len(members) >= h or (y in n_set and y != 0):
                            return None
                        members.add(y)
                        frontier.append(y)
        return frozenset(members) if len(members) == h else None

    for a in pool:
        if group.element_order(a) == h:
            got = try_closure([a])
            if got is not None:
                return got
    for ai, a in enumerate(pool):
        for b in pool[ai + 1:]:
            got = try_closure([a, b])
            if got is not None:
                return got
    return None


def structure_flags(group: PermGroup, classes: ClassData | None = None,
                    max_classes: int = 25) -> StructureFlags:
    """Compute the structural flag set.

    Nilpotent groups avoid normal-subgroup enumeration entirely: O_p is
    the set of p-power-order elements and no nilpotent group is
    Frobenius.  Non-nilpotent groups enumerate normal subgroups (guarded
    by max_classes).
    """
    gen_idx = group.generator_indices()
    abelian = all(group.commutator_index(a, b) == 0
                  for a in gen_idx for b in gen_idx)
    factors = _factorize(group.order)
    p_group_p = next(iter(factors)) if len(factors) == 1 else None
    if group.order == 1:
        p_group_p = None
    elem_p = None
    if abelian and p_group_p is not None:
        if all(group.element_order(i) == p_group_p for i in range(1, group.order)):
            elem_p = p_group_p
    nilpotent = True if abelian else is_nilpotent(group)
    extraspecial = False
    if p_group_p is not None and not abelian:
        z = center(group)
        if len(z) == p_group_p:
            series = derived_series(group)
            derived = series[1] if len(series) > 1 else frozenset({0})
            if derived == z:
                p = p_group_p
                central_quotient_elem_ab = all(
                    _power_index(group, i, p) in z for i in range(group.order))
                extraspecial = central_quotient_elem_ab
    normals = None
    if not nilpotent:
        normals = normal_subgroups(group, classes, max_classes=max_classes)
    o_p = o_p_subgroups(group, nilpotent, normals)
    frob = None
    if not nilpotent:
        frob = frobenius_decomposition(group, normals)
    return StructureFlags(
        is_abelian=abelian,
        elementary_abelian_p=elem_p,
        is_nilpotent=nilpotent,
        p_group_p=p_group_p,
        is_extraspecial=extraspecial,
        o_p=o_p,
        frobenius=frob,
    )


def _power_index(group: PermGroup, i: int, t: int) -> int:
    p = group.elements[i] ** t
    return group.element_index(p)


def socle_of_nilpotent(group: PermGroup) -> frozenset[int]:
    """Product of the minimal normal subgroups of a nilpotent group.

    Minimal normals of a nilpotent group are central of prime order, so
    the socle is generated by the prime-order elements of the center.
    """
    z = center(group)
    seeds = {i for i in z if i and _is_prime(group.element_order(i))}
    if not seeds:
        return frozenset({0})
    return subgroup_closure(group, seeds)


def minimal_normal_subgroups(normals: tuple[frozenset[int], ...]) -> list[frozenset[int]]:
    nontrivial = [n for n in normals if len(n) > 1]
    out = []
    for n in nontrivial:
        if not any(m < n for m in nontrivial):
            out.append(n)
    return out


def socle_from_normals(group: PermGroup,
                       normals: tuple[frozenset[int], ...]) -> frozenset[int]:
    minimals = minimal_normal_subgroups(normals)
    seeds: set[int] = set()
    for m in minimals:
        seeds |= m
    if not seeds:
        return frozenset({0})
    return subgroup_closure(group, seeds)


@lru_cache(maxsize=None)
def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True
