"""Exact character tables of permutation groups (Burnside-Dixon).

The central characters omega_chi(C) = |C| chi(g) / chi(1) are the common
eigenvectors of the class multiplication matrices.  We find them over a
prime field GF(p) with p = 1 (mod exponent) and p > 2*sqrt(|G|), recover
chi(1) from the degree formula, then lift each value chi(g) to an exact
cyclotomic integer by counting eigenvalue multiplicities of g with a
discrete Fourier transform over the powers of g.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
import numpy as np
from sympy import isprime, primitive_root

from ..cyclotomic import CyclotomicValue
from ..errors import ResourceLimitError, VerificationError
from .perm import PermGroup, inverse, mul, perm_order

DEFAULT_MAX_CLASSES = 200


# -- conjugacy classes ---------------------------------------------------------

@dataclass
class ConjugacyClasses:
    group: PermGroup
    members: list[list[int]]  # element indices, class by class
    class_of: list[int]  # element index -> class index
    reps: list[tuple[int, ...]]
    orders: list[int]

    @property
    def sizes(self) -> list[int]:
        return [len(m) for m in self.members]

    def __len__(self) -> int:
        return len(self.members)

    def classify(self, x) -> int:
        return self.class_of[self.group.index[tuple(x)]]


def conjugacy_classes(G: PermGroup) -> ConjugacyClasses:
    """Orbits of G acting on itself by conjugation.

    Classes are ordered by (element order, size, smallest element); the
    identity class comes first and the representative is the smallest
    element of its class.
    """
    elts = G.elements
    idx = G.index
    ginvs = [inverse(g) for g in G.gens]
    unassigned = -1
    class_of = [unassigned] * len(elts)
    orbits = []
    for start in range(len(elts)):
        if class_of[start] != unassigned:
            continue
        cid = len(orbits)
        class_of[start] = cid
        orbit = [start]
        k = 0
        while k < len(orbit):
            x = elts[orbit[k]]
            k += 1
            for g, gi in zip(G.gens, ginvs):
                y = idx[mul(mul(g, x), gi)]
                if class_of[y] == unassigned:
                    class_of[y] = cid
                    orbit.append(y)
        orbits.append(orbit)
    keyed = []
    for orbit in orbits:
        rep = min(elts[i] for i in orbit)
        keyed.append((perm_order(rep), len(orbit), rep, orbit))
    keyed.sort(key=lambda t: t[:3])
    members = [sorted(t[3]) for t in keyed]
    new_class_of = [0] * len(elts)
    for cid, m in enumerate(members):
        for i in m:
            new_class_of[i] = cid
    return ConjugacyClasses(G, members, new_class_of, [t[2] for t in keyed], [t[0] for t in keyed])


# -- linear algebra over GF(p) ---------------------------------------------------

def _rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    rows = [r[:] for r in rows]
    pivots = []
    lead = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(lead, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            continue
        rows[lead], rows[piv] = rows[piv], rows[lead]
        inv = pow(rows[lead][col], -1, p)
        rows[lead] = [(v * inv) % p for v in rows[lead]]
        for i in range(len(rows)):
            if i != lead and rows[i][col] % p:
                f = rows[i][col]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[lead])]
        pivots.append(col)
        lead += 1
        if lead == len(rows):
            break
    return rows[:lead], pivots


def _nullspace(mat: list[list[int]], p: int) -> list[list[int]]:
    n = len(mat[0]) if mat else 0
    red, pivots = _rref(mat, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = (-row[f]) % p
        basis.append(v)
    return basis


def _minpoly_of_vector(R: list[list[int]], v: list[int], p: int) -> list[int]:
    """Monic annihilating polynomial of v under R (low-to-high coefficients)."""
    s = len(R)
    basis: list[tuple[list[int], list[int], int]] = []  # (vector, combo, pivot)
    cur = v[:]
    for power in range(s + 1):
        combo = [0] * (s + 1)
        combo[power] = 1
        w = cur
        for bv, bc, pc in basis:
            f = w[pc]
            if f:
                w = [(x - f * y) % p for x, y in zip(w, bv)]
                combo = [(x - f * y) % p for x, y in zip(combo, bc)]
        nz = next((i for i, x in enumerate(w) if x), None)
        if nz is None:
            return combo[: power + 1]
        inv = pow(w[nz], -1, p)
        basis.append(([(x * inv) % p for x in w], [(x * inv) % p for x in combo], nz))
        cur = [sum(x * y for x, y in zip(row, cur)) % p for row in R]
    raise ArithmeticError("Krylov sequence did not terminate")


def _roots_mod_p(poly: list[int], p: int) -> list[int]:
    roots = []
    for x in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % p
        if acc == 0:
            roots.append(x)
    return roots


def _split_common_eigenvectors(mats: list[list[list[int]]], p: int, rng: random.Random,
                               max_tries: int = 60) -> list[list[int]]:
    """Common 1-dimensional eigenspaces of commuting diagonalizable matrices."""
    r = len(mats[0])
    todo = [([[int(i == j) for j in range(r)] for i in range(r)], list(range(r)))]
    found = []
    while todo:
        B, piv = todo.pop()
        s = len(B)
        if s == 1:
            found.append(B[0])
            continue
        for _ in range(max_tries):
            coeffs = [rng.randrange(p) for _ in mats]
            C = [[0] * r for _ in range(r)]
            for c, M in zip(coeffs, mats):
                if c:
                    for l in piv:
                        Cl, Ml = C[l], M[l]
                        for k in range(r):
                            if Ml[k]:
                                Cl[k] += c * Ml[k]
            # restricted action on span(B): coordinates are read off at the pivots
            R = [[sum(C[l][k] * B[m][k] for k in range(r)) % p for m in range(s)] for l in piv]
            v = [rng.randrange(p) for _ in range(s)]
            roots = _roots_mod_p(_minpoly_of_vector(R, v, p), p)
            if len(roots) < 2:
                continue
            pieces = []
            for x in roots:
                shifted = [[(R[i][j] - (x if i == j else 0)) % p for j in range(s)] for i in range(s)]
                vecs = [[sum(yc * B[m][k] for m, yc in enumerate(yv)) % p for k in range(r)]
                        for yv in _nullspace(shifted, p)]
                pieces.append(vecs)
            if sum(len(pc) for pc in pieces) != s:
                continue
            for vecs in pieces:
                red, pv = _rref(vecs, p)
                todo.append((red, pv))
            break
        else:
            raise VerificationError(f"could not split a {s}-dimensional common eigenspace mod {p}")
    return found


# -- the table -------------------------------------------------------------------

def dixon_prime(order: int, exponent: int) -> int:
    p = 2 * math.isqrt(order) + 1
    p += (1 - p) % exponent  # p = 1 mod exponent
    while not (isprime(p) and p > 2 * math.sqrt(order)):
        p += exponent
    return p


@dataclass
class GroupCharacterTable:
    group_name: str
    order: int
    classes: ConjugacyClasses
    values: list[list[CyclotomicValue]]  # rows = characters, columns = classes
    exponent: int
    power_maps: list[list[int]]  # power_maps[j][k] = class of rep_j ** k, k < order_j
    prime: int

    @property
    def class_sizes(self) -> list[int]:
        return self.classes.sizes

    @property
    def degrees(self) -> list[int]:
        return [int(row[0].as_rational()) for row in self.values]

    def __len__(self) -> int:
        return len(self.values)

    def is_zero(self, i: int, j: int) -> bool:
        return self.values[i][j].is_zero()

    def row_norm(self, i: int) -> CyclotomicValue:
        """sum_j |C_j| chi_i(g_j) conj(chi_j(g_j)); equals |G| for an irreducible."""
        total = CyclotomicValue(self.exponent)
        for size, v in zip(self.class_sizes, self.values[i]):
            total = total + (v * v.conj()).lift(self.exponent) * size
        return total

    def inner(self, i: int, k: int) -> CyclotomicValue:
        total = CyclotomicValue(self.exponent)
        for size, a, b in zip(self.class_sizes, self.values[i], self.values[k]):
            total = total + (a * b.conj()).lift(self.exponent) * size
        return total

    def column_inner(self, j: int, k: int) -> CyclotomicValue:
        total = CyclotomicValue(self.exponent)
        for row in self.values:
            total = total + (row[j] * row[k].conj()).lift(self.exponent)
        return total

    def check(self) -> None:
        """Raise VerificationError unless the basic table identities hold exactly."""
        if sum(self.class_sizes) != self.order:
            raise VerificationError("class sizes do not sum to |G|")
        if sum(d * d for d in self.degrees) != self.order:
            raise VerificationError("sum of squared degrees differs from |G|")
        for i in range(len(self)):
            if self.row_norm(i) != self.order:
                raise VerificationError(f"row {i} is not a unit vector")

    def class_labels(self) -> list[str]:
        return [f"{o}{chr(ord('a') + k) if k < 26 else k}" for o, k in _order_suffixes(self.classes.orders)]

    def to_json(self) -> dict:
        return {
            "group": self.group_name,
            "order": self.order,
            "labels": {"characters": [f"X{i + 1}" for i in range(len(self))],
                       "classes": self.class_labels()},
            "class_sizes": self.class_sizes,
            "class_representatives": [list(r) for r in self.classes.reps],
            "entries": [[_entry_json(v) for v in row] for row in self.values],
        }

    def to_csv(self) -> str:
        import csv
        import io

        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["character"] + self.class_labels())
        for i, row in enumerate(self.values):
            w.writerow([f"X{i + 1}"] + [_entry_text(v) for v in row])
        return buf.getvalue()


def _order_suffixes(orders):
    seen: dict[int, int] = {}
    for o in orders:
        k = seen.get(o, 0)
        seen[o] = k + 1
        yield o, k


def _entry_json(v: CyclotomicValue):
    q = v.as_rational()
    if q is not None:
        return str(q)
    return v.to_json()


def _entry_text(v: CyclotomicValue) -> str:
    q = v.as_rational()
    if q is not None:
        return str(q)
    e = v.conductor
    return " + ".join(f"{a}*E({e})^{j}" if j else str(a) for j, a in enumerate(v.reduced()) if a)


def _structure_constants(G: PermGroup, cc: ConjugacyClasses) -> np.ndarray:
    """a[i, j, k] = #{x in C_i : x^-1 z_k in C_j} for a fixed z_k in C_k."""
    r = len(cc)
    d = G.degree
    E = np.array(G.elements, dtype=np.int32).reshape(len(G.elements), d)
    Einv = np.empty_like(E)
    rows = np.arange(len(E))[:, None]
    Einv[rows, E] = np.arange(d, dtype=np.int32)[None, :]
    lookup = {E[i].tobytes(): i for i in range(len(E))}
    cls = np.array(cc.class_of, dtype=np.int64)
    a = np.zeros((r, r, r), dtype=np.int64)
    width = d * 4
    for k, z in enumerate(cc.reps):
        prod = np.ascontiguousarray(Einv[:, np.array(z, dtype=np.int64)]) if d else Einv
        buf = prod.tobytes()
        ys = np.fromiter((lookup[buf[t * width:(t + 1) * width]] for t in range(len(E))),
                         dtype=np.int64, count=len(E))
        flat = cls * r + cls[ys]
        a[:, :, k] = np.bincount(flat, minlength=r * r).reshape(r, r)
    return a


def character_table(G: PermGroup, max_classes: int = DEFAULT_MAX_CLASSES,
                    seed: int = 0) -> GroupCharacterTable:
    cc = conjugacy_classes(G)
    r = len(cc)
    if r > max_classes:
        raise ResourceLimitError(f"class count of {G.name}:", r, max_classes)
    order = G.order
    exponent = math.lcm(*cc.orders)
    p = dixon_prime(order, exponent)
    sizes = cc.sizes

    power_maps = []
    for rep, o in zip(cc.reps, cc.orders):
        pm, x = [], G.identity
        for _ in range(o):
            pm.append(cc.classify(x))
            x = mul(x, rep)
        power_maps.append(pm)
    inv_class = [pm[-1] if len(pm) > 1 else pm[0] for pm in power_maps]

    a = _structure_constants(G, cc)
    mats = [[[int(a[i, j, k]) % p for k in range(r)] for j in range(r)] for i in range(r)]
    rng = random.Random(seed)
    omegas = _split_common_eigenvectors(mats, p, rng) if r > 1 else [[1]]
    if len(omegas) != r:
        raise VerificationError(f"found {len(omegas)} characters for {r} classes")

    z = pow(primitive_root(p), (p - 1) // exponent, p)
    rows = []
    for w in omegas:
        w0 = w[0]
        if w0 == 0:
            raise VerificationError("central character vanishes at the identity")
        inv0 = pow(w0, -1, p)
        w = [(x * inv0) % p for x in w]
        s = sum(w[j] * w[inv_class[j]] * pow(sizes[j], -1, p) for j in range(r)) % p
        d2 = order * pow(s, -1, p) % p
        deg = next((d for d in range(1, math.isqrt(order) + 1) if d * d % p == d2), None)
        if deg is None:
            raise VerificationError("no integer degree matches the central character")
        chi_mod = [w[j] * deg * pow(sizes[j], -1, p) % p for j in range(r)]
        row = []
        for j in range(r):
            o = cc.orders[j]
            zo_inv = pow(z, -(exponent // o), p)
            o_inv = pow(o, -1, p)
            pm = power_maps[j]
            mult = []
            for l in range(o):
                step = pow(zo_inv, l, p)
                acc, zk = 0, 1
                for k in range(o):
                    acc += chi_mod[pm[k]] * zk
                    zk = zk * step % p
                mult.append(acc * o_inv % p)
            if any(m > deg for m in mult) or sum(mult) != deg:
                raise VerificationError(f"eigenvalue multiplicities {mult} inconsistent with degree {deg}")
            row.append(CyclotomicValue(o, mult))
        rows.append(row)

    def sort_key(row):
        trivial = all(v == 1 for v in row)
        return (int(row[0].as_rational()), not trivial,
                [tuple(v.lift(exponent).reduced()) for v in row])

    rows.sort(key=sort_key)
    return GroupCharacterTable(G.name, order, cc, rows, exponent, power_maps, p)
