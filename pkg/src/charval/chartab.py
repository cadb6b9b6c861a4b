"""Exact character tables by eigenvector splitting over a finite field.

The table of a group with k classes is recovered from the common
eigenvectors of the class-multiplication matrices over F_p, where p = 1
(mod exponent) and p > 2*sqrt(|G|).  Central characters, degrees, and
values are computed mod p, then every value is lifted exactly to a
cyclotomic integer through root-of-unity multiplicities.  The finished
table must pass both orthogonality relations exactly; failure raises
instead of returning a wrong table.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .cyclo import Cyc
from .permcore import ClassData, PermGroup, TooManyClasses, conjugacy_classes


class EigensplitFailure(RuntimeError):
    """Common-eigenspace refinement broke an internal invariant."""


class OrthogonalityFailure(RuntimeError):
    """A finished table failed its exact self-verification."""


class NonIntegralCodegree(RuntimeError):
    """|G : ker| / degree failed to be an integer."""


class PrimeSearchExhausted(RuntimeError):
    """No usable prime below the search cap."""


_PRIME_CAP = 10 ** 7


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def choose_dixon_prime(group: PermGroup, classes: ClassData | None = None) -> int:
    """Smallest prime p = 1 (mod exponent) with p > 2*sqrt(|G|), strictly."""
    cd = classes if classes is not None else conjugacy_classes(group)
    e = math.lcm(*cd.element_orders)
    p = e + 1
    while p <= _PRIME_CAP:
        if p * p > 4 * group.order and _is_prime(p):
            return p
        p += e
    raise PrimeSearchExhausted(f"no prime = 1 mod {e} below {_PRIME_CAP}")


def class_mult_coeffs(classes: ClassData) -> list[list[list[int]]]:
    """Structure constants a[i][j][k] of the class algebra.

    a[i][j][k] counts pairs (x, y) with x in C_i, y in C_j and xy equal
    to one fixed representative of C_k; the count is independent of the
    representative.
    """
    group = classes.group
    k = classes.n_classes
    out = [[[0] * k for _ in range(k)] for _ in range(k)]
    for i in range(k):
        counts = _rep_product_counts(group, classes, i)
        size_i = classes.sizes[i]
        for j in range(k):
            row = counts[j]
            for t in range(k):
                if row[t]:
                    num = row[t] * size_i
                    assert num % classes.sizes[t] == 0
                    out[i][j][t] = num // classes.sizes[t]
    return out


def _rep_product_counts(group: PermGroup, classes: ClassData, i: int) -> list[list[int]]:
    # counts[j][t] = #{y in C_j : rep_i * y in C_t}
    k = classes.n_classes
    counts = [[0] * k for _ in range(k)]
    rep = classes.reps[i]
    elt_class = classes.elt_class
    for y in range(group.order):
        counts[elt_class[y]][elt_class[group.mult_index(rep, y)]] += 1
    return counts


def _class_matrix(group: PermGroup, classes: ClassData, i: int, p: int) -> list[list[int]]:
    counts = _rep_product_counts(group, classes, i)
    k = classes.n_classes
    size_i = classes.sizes[i]
    mat = [[0] * k for _ in range(k)]
    for j in range(k):
        for t in range(k):
            if counts[j][t]:
                num = counts[j][t] * size_i
                assert num % classes.sizes[t] == 0
                mat[j][t] = (num // classes.sizes[t]) % p
    return mat


# --- polynomial arithmetic over F_p (ascending coefficient lists) ---

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        av = a[i] if i < len(a) else 0
        bv = b[i] if i < len(b) else 0
        out[i] = (av - bv) % p
    return _ptrim(out)


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        if av:
            for j, bv in enumerate(b):
                out[i + j] = (out[i + j] + av * bv) % p
    return _ptrim(out)


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = a[:]
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mv in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * mv) % p
        _ptrim(a)
    return a


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = a[:], b[:]
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _ppowmod(base: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _pdiv_exact(a: list[int], b: list[int], p: int) -> list[int]:
    a = a[:]
    dm = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * (len(a) - dm)
    while len(a) - 1 >= dm and a:
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        q[shift] = coef
        for i, bv in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bv) % p
        _ptrim(a)
    assert not a, "division was not exact"
    return _ptrim(q)


def _charpoly(mat: list[list[int]], p: int) -> list[int]:
    """Characteristic polynomial mod p via Hessenberg reduction."""
    d = len(mat)
    h = [row[:] for row in mat]
    for col in range(d - 2):
        piv = None
        for r in range(col + 1, d):
            if h[r][col]:
                piv = r
                break
        if piv is None:
            continue
        if piv != col + 1:
            h[piv], h[col + 1] = h[col + 1], h[piv]
            for r in range(d):
                h[r][piv], h[r][col + 1] = h[r][col + 1], h[r][piv]
        inv = pow(h[col + 1][col], p - 2, p)
        for r in range(col + 2, d):
            factor = h[r][col] * inv % p
            if factor:
                hr, hc = h[r], h[col + 1]
                for c in range(d):
                    hr[c] = (hr[c] - factor * hc[c]) % p
                for rr in range(d):
                    h[rr][col + 1] = (h[rr][col + 1] + factor * h[rr][r]) % p
    # p_m = charpoly of leading m x m block, by last-column expansion
    polys = [[1]]
    for m in range(1, d + 1):
        term = _pmul(polys[m - 1], [(-h[m - 1][m - 1]) % p, 1], p)
        prod = 1
        for s in range(1, m):
            prod = prod * h[m - s][m - s - 1] % p
            if prod == 0:
                break
            coef = h[m - 1 - s][m - 1] * prod % p
            if coef:
                term = _psub(term, [coef * c % p for c in polys[m - 1 - s]], p)
        polys.append(term)
    return polys[d]


def _distinct_roots(f: list[int], p: int, rng: random.Random) -> list[int]:
    """All roots in F_p of f, ascending (via gcd with x^p - x, then splitting)."""
    xp = _ppowmod([0, 1], p, f, p)
    g = _pgcd(_psub(xp, [0, 1], p), f, p)
    roots: list[int] = []
    _split_linear(g, p, rng, roots)
    roots.sort()
    return roots


def _split_linear(g: list[int], p: int, rng: random.Random, out: list[int]) -> None:
    d = len(g) - 1
    if d <= 0:
        return
    if d == 1:
        out.append((-g[0]) % p)
        return
    while True:
        a = rng.randrange(p)
        t = _ppowmod([a, 1], (p - 1) // 2, g, p)
        h = _pgcd(_psub(t, [1], p), g, p)
        if 0 < len(h) - 1 < d:
            _split_linear(h, p, rng, out)
            _split_linear(_pdiv_exact(g, h, p), p, rng, out)
            return


# --- F_p linear algebra ---

def _mat_vec(mat: list[list[int]], vec: list[int], p: int) -> list[int]:
    out = []
    for row in mat:
        s = 0
        for a, b in zip(row, vec):
            if a and b:
                s += a * b
        out.append(s % p)
    return out


def _nullspace(mat: list[list[int]], p: int) -> list[list[int]]:
    """Basis of the right nullspace, deterministic (free vars ascending)."""
    d = len(mat)
    a = [row[:] for row in mat]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(d):
        piv = None
        for rr in range(r, d):
            if a[rr][c]:
                piv = rr
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], p - 2, p)
        a[r] = [x * inv % p for x in a[r]]
        for rr in range(d):
            if rr != r and a[rr][c]:
                f = a[rr][c]
                a[rr] = [(x - f * y) % p for x, y in zip(a[rr], a[r])]
        pivots.append((r, c))
        r += 1
        if r == d:
            break
    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(d):
        if free in pivot_cols:
            continue
        v = [0] * d
        v[free] = 1
        for rr, cc in pivots:
            v[cc] = (-a[rr][free]) % p
        basis.append(v)
    return basis


def _pivot_columns(rows: list[list[int]], p: int) -> list[int]:
    m = [row[:] for row in rows]
    n_rows = len(m)
    n_cols = len(m[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        piv = None
        for rr in range(r, n_rows):
            if m[rr][c]:
                piv = rr
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [x * inv % p for x in m[r]]
        for rr in range(n_rows):
            if rr != r and m[rr][c]:
                f = m[rr][c]
                m[rr] = [(x - f * y) % p for x, y in zip(m[rr], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return pivots


def _invert(mat: list[list[int]], p: int) -> list[list[int]]:
    d = len(mat)
    a = [row[:] + [1 if i == j else 0 for j in range(d)] for i, row in enumerate(mat)]
    for c in range(d):
        piv = None
        for r in range(c, d):
            if a[r][c]:
                piv = r
                break
        if piv is None:
            raise EigensplitFailure("pivot submatrix is singular")
        a[c], a[piv] = a[piv], a[c]
        inv = pow(a[c][c], p - 2, p)
        a[c] = [x * inv % p for x in a[c]]
        for r in range(d):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[c])]
    return [row[d:] for row in a]


def _split_subspace(basis: list[list[int]], mat: list[list[int]], p: int,
                    rng: random.Random) -> list[list[list[int]]]:
    """Split an invariant subspace into eigenspaces of mat restricted to it.

    basis: list of d independent vectors of length k.  Returns the list
    of eigenspace bases, eigenvalues ascending.
    """
    d = len(basis)
    images = [_mat_vec(mat, v, p) for v in basis]
    piv = _pivot_columns(basis, p)
    if len(piv) != d:
        raise EigensplitFailure("subspace basis is dependent")
    q = [[basis[s][c] for c in piv] for s in range(d)]
    q_inv = _invert(q, p)
    # coords[t][s]: coefficient of basis[s] in images[t]
    coords = []
    for w in images:
        wp = [w[c] for c in piv]
        coef = [0] * d
        for s in range(d):
            acc = 0
            for t in range(d):
                acc += wp[t] * q_inv[t][s]
            coef[s] = acc % p
        # exact invariance check over all k coordinates
        k = len(w)
        for c in range(k):
            acc = 0
            for s in range(d):
                if coef[s]:
                    acc += coef[s] * basis[s][c]
            if acc % p != w[c]:
                raise EigensplitFailure("subspace not invariant under class matrix")
        coords.append(coef)
    # restriction matrix R[s][t] = coefficient of basis[s] in image of basis[t]
    rmat = [[coords[t][s] for t in range(d)] for s in range(d)]
    roots = _distinct_roots(_charpoly(rmat, p), p, rng)
    pieces = []
    total = 0
    for lam in roots:
        shifted = [[(rmat[i][j] - (lam if i == j else 0)) % p for j in range(d)]
                   for i in range(d)]
        null = _nullspace(shifted, p)
        if not null:
            raise EigensplitFailure("eigenvalue without eigenvector")
        piece = []
        for cvec in null:
            vec = [0] * len(basis[0])
            for s in range(d):
                if cvec[s]:
                    bs = basis[s]
                    cs = cvec[s]
                    for c in range(len(vec)):
                        vec[c] = (vec[c] + cs * bs[c]) % p
            piece.append(vec)
        total += len(piece)
        pieces.append(piece)
    if total != d:
        raise EigensplitFailure("restriction is not semisimple")
    return pieces


def _sqrt_mod(n: int, p: int) -> int:
    """A square root of n mod p (Tonelli-Shanks); raises if none exists."""
    n %= p
    if n == 0:
        return 0
    if pow(n, (p - 1) // 2, p) != 1:
        raise EigensplitFailure("degree squared is not a quadratic residue")
    if p % 4 == 3:
        return pow(n, (p + 1) // 4, p)
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        t2 = t
        i = 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def _primitive_root(p: int) -> int:
    fac = []
    n = p - 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            fac.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        fac.append(n)
    g = 2
    while True:
        if all(pow(g, (p - 1) // q, p) != 1 for q in fac):
            return g
        g += 1


class Character:
    """One irreducible character: exact values indexed by class."""

    __slots__ = ("values", "degree", "kernel", "center_z")

    def __init__(self, values: tuple[Cyc, ...], degree: int,
                 kernel: frozenset[int], center_z: frozenset[int]):
        self.values = values
        self.degree = degree
        self.kernel = kernel
        self.center_z = center_z

    def __repr__(self):
        return f"Character(degree={self.degree})"


class CharTable:
    """Finished, self-verified character table."""

    __slots__ = ("group", "classes", "rows", "dixon_prime")

    def __init__(self, group: PermGroup, classes: ClassData,
                 rows: tuple[Character, ...], dixon_prime: int):
        self.group = group
        self.classes = classes
        self.rows = rows
        self.dixon_prime = dixon_prime

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(r.degree for r in self.rows)

    def to_json_dict(self) -> dict:
        cd = self.classes
        return {
            "order": self.group.order,
            "class_count": cd.n_classes,
            "dixon_prime": self.dixon_prime,
            "classes": [
                {
                    "size": cd.sizes[i],
                    "element_order": cd.element_orders[i],
                    "representative": self.group.elements[cd.reps[i]].cycle_string(),
                }
                for i in range(cd.n_classes)
            ],
            "rows": [
                {
                    "degree": r.degree,
                    "values": [v.display() for v in r.values],
                }
                for r in self.rows
            ],
        }


def character_table(group: PermGroup, classes: ClassData | None = None,
                    seed: int = 0, max_classes: int = 60) -> CharTable:
    """Compute the full irreducible character table, exactly.

    Args:
      group: fully enumerated permutation group.
      classes: precomputed class data (recomputed if omitted).
      seed: PRNG seed for the equal-degree splitting steps; any seed
        yields the same table, only the internal search path differs.
      max_classes: guard on the class count.

    Raises:
      TooManyClasses: class count exceeds the guard.
      EigensplitFailure, OrthogonalityFailure: internal invariant broken
        (never expected on a correct build).
    """
    cd = classes if classes is not None else conjugacy_classes(group)
    k = cd.n_classes
    if k > max_classes:
        raise TooManyClasses(f"{k} classes exceeds guard {max_classes}")
    p = choose_dixon_prime(group, cd)
    rng = random.Random(seed)

    subspaces: list[list[list[int]]] = [[[1 if i == j else 0 for j in range(k)]
                                         for i in range(k)]]
    for i in range(1, k):
        if all(len(s) == 1 for s in subspaces):
            break
        mat = _class_matrix(group, cd, i, p)
        refined: list[list[list[int]]] = []
        for s in subspaces:
            if len(s) == 1:
                refined.append(s)
            else:
                refined.extend(_split_subspace(s, mat, p, rng))
        subspaces = refined
    if any(len(s) != 1 for s in subspaces):
        raise EigensplitFailure("class matrices left a subspace unsplit")

    omegas = []
    for s in subspaces:
        v = s[0]
        if v[0] == 0:
            raise EigensplitFailure("eigenvector vanishes at the identity class")
        inv0 = pow(v[0], p - 2, p)
        omegas.append([x * inv0 % p for x in v])

    order = group.order
    inv_sizes = [pow(sz, p - 2, p) for sz in cd.sizes]
    e = math.lcm(*cd.element_orders)
    w = pow(_primitive_root(p), (p - 1) // e, p)
    w_inv = pow(w, p - 2, p)

    rows = []
    for omega in omegas:
        s_val = 0
        for i in range(k):
            s_val += omega[i] * omega[cd.inverse_class[i]] % p * inv_sizes[i]
        s_val %= p
        if s_val == 0:
            raise EigensplitFailure("degree denominator vanished mod p")
        d_sq = order % p * pow(s_val, p - 2, p) % p
        root = _sqrt_mod(d_sq, p)
        d = min(root, p - root)
        if d == 0 or d * d > order:
            raise EigensplitFailure("lifted degree out of range")
        theta = [d * omega[i] % p * inv_sizes[i] % p for i in range(k)]
        values = _lift_row(theta, d, cd, p, e, w_inv)
        degree_val = values[0]
        if not (degree_val.is_integer() and degree_val.as_int() == d):
            raise EigensplitFailure("identity value disagrees with degree")
        kernel = frozenset(i for i in range(k) if values[i] == d)
        d_sq_exact = Cyc.from_rational(Fraction(d * d))
        center_z = frozenset(i for i in range(k)
                             if values[i].abs_squared() == d_sq_exact)
        rows.append(Character(tuple(values), d, kernel, center_z))

    rows.sort(key=lambda r: (r.degree, tuple(v.display() for v in r.values)))
    table = CharTable(group, cd, tuple(rows), p)
    _self_verify(table)
    return table


def _lift_row(theta: list[int], d: int, cd: ClassData, p: int, e: int,
              w_inv: int) -> list[Cyc]:
    k = cd.n_classes
    values: list[Cyc] = [Cyc.zero()] * k
    for i in range(k):
        m = cd.element_orders[i]
        if m == 1:
            values[i] = Cyc.from_rational(Fraction(theta[i]))
            continue
        theta_pow = [theta[cd.power_class(i, t)] for t in range(m)]
        m_inv = pow(m, p - 2, p)
        wm_inv = pow(w_inv, e // m, p)
        mus: dict[int, Fraction] = {}
        for j in range(m):
            wj = pow(wm_inv, j, p)
            acc = 0
            term = 1
            for t in range(m):
                acc += theta_pow[t] * term
                term = term * wj % p
            mu = acc % p * m_inv % p
            assert 2 * mu < p, "multiplicity lift out of range"
            if mu:
                mus[j] = Fraction(mu)
        values[i] = Cyc.from_exponents(m, mus) if mus else Cyc.zero()
    return values


def _self_verify(table: CharTable) -> None:
    cd = table.classes
    k = cd.n_classes
    order = table.group.order
    rows = table.rows
    degs = [r.degree for r in rows]
    if sum(d * d for d in degs) != order:
        raise OrthogonalityFailure("degree squares do not sum to the order")
    for d in degs:
        if order % d:
            raise OrthogonalityFailure("degree does not divide the order")
    conj_rows = []
    for r in rows:
        conj = [r.values[cd.inverse_class[i]] for i in range(k)]
        for i in range(k):
            if conj[i] != r.values[i].conjugate():
                raise OrthogonalityFailure("inverse classes are not conjugates")
        conj_rows.append(conj)
    for a in range(len(rows)):
        va = rows[a].values
        for b in range(a, len(rows)):
            cb = conj_rows[b]
            acc = Cyc.zero()
            for i in range(k):
                acc = acc + (va[i] * cb[i])._scaled(Fraction(cd.sizes[i]))
            expected = order if a == b else 0
            if acc != expected:
                raise OrthogonalityFailure("first orthogonality failed")
    for i in range(k):
        for j in range(i, k):
            acc = Cyc.zero()
            for r_idx in range(len(rows)):
                acc = acc + rows[r_idx].values[i] * conj_rows[r_idx][j]
            expected = order // cd.sizes[i] if i == j else 0
            if acc != expected:
                raise OrthogonalityFailure("second orthogonality failed")


def codegree(table: CharTable, row: int) -> int:
    """|G : ker chi| / chi(1) as an exact integer."""
    r = table.rows[row]
    cd = table.classes
    ker_size = sum(cd.sizes[i] for i in r.kernel)
    if table.group.order % ker_size:
        raise NonIntegralCodegree("kernel size does not divide the order")
    index = table.group.order // ker_size
    if index % r.degree:
        raise NonIntegralCodegree(f"{index} not divisible by degree {r.degree}")
    return index // r.degree
