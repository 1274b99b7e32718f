"""Coboundary solving and H^2 enumeration by exact integer linear algebra.

The coboundary operator on normalized cochains is an integer matrix once
tuples are flattened in a fixed order.  Smith normal form of that matrix
decides, over the divisible coefficients Q/Z, whether a target cochain is a
coboundary: writing U*A*V = D, a target b lies in the image exactly when
(U*b) vanishes in Q/Z on every row whose invariant factor is zero, and then
x = V*y with y_i = (U*b)_i / d_i is a witness (the division is exact in Q/Z
because Q/Z is divisible).

Everything is cached per (group, degree) since the classifier reuses the
same factorizations across many solves.
"""

from __future__ import annotations

import hashlib
import json
import os
from math import gcd
from typing import List, Optional, Tuple

from .cochains import Cochain, coboundary, combine, nonidentity_tuples, zero_cochain
from .errors import DegreeMismatch, InternalInvariantBroken
from .groups import Group
from .qz import QZ, ZERO

__all__ = [
    "CoboundaryMatrix",
    "SNF",
    "smith_normal_form",
    "coboundary_matrix",
    "solve_coboundary",
    "image_obstruction",
    "is_cohomologous",
    "h2_order",
    "h2_representatives",
]

CACHE_ENV = "MODCAT_SNF_CACHE"


class CoboundaryMatrix:
    """Integer matrix of d^n: rows are (n+1)-tuples, columns are n-tuples.

    Tuples run over non-identity elements in lexicographic order; entries are
    the signed incidence coefficients, with terms that hit the identity
    dropped (normalization).
    """

    __slots__ = ("group", "degree", "rows", "cols", "entries")

    def __init__(self, group: Group, degree: int):
        self.group = group
        self.degree = degree
        self.rows = list(nonidentity_tuples(group, degree + 1))
        self.cols = list(nonidentity_tuples(group, degree))
        col_index = {t: i for i, t in enumerate(self.cols)}
        e, table = group.identity, group.table
        n = degree
        entries = []
        for args in self.rows:
            row = [0] * len(self.cols)
            row[col_index[args[1:]]] += 1
            sign = 1
            for i in range(n):
                sign = -sign
                merged = args[:i] + (table[args[i]][args[i + 1]],) + args[i + 2:]
                if e not in merged:
                    row[col_index[merged]] += sign
            row[col_index[args[:n]]] += -sign  # (-1)^{n+1}
            entries.append(row)
        self.entries = entries

    def apply(self, f: Cochain) -> List[QZ]:
        """Matrix times the flattened cochain; must agree with coboundary()."""
        vec = [f.value(t) for t in self.cols]
        nz = [(j, v) for j, v in enumerate(vec) if v]
        out = []
        for row in self.entries:
            acc = ZERO
            for j, v in nz:
                c = row[j]
                if c:
                    acc = acc + c * v
            out.append(acc)
        return out


class SNF:
    """U * A * V = D with U, V unimodular and diagonal d_i | d_{i+1}.

    ``diag`` lists the diagonal of D (nonzero invariant factors first, then
    zeros).  U or V may be None when the factorization was computed without
    tracking that side.
    """

    __slots__ = ("nrows", "ncols", "diag", "U", "V")

    def __init__(self, nrows, ncols, diag, U, V):
        self.nrows = nrows
        self.ncols = ncols
        self.diag = diag
        self.U = U
        self.V = V


def _xgcd(a: int, b: int) -> Tuple[int, int, int]:
    x, nx, y, ny, g, ng = 1, 0, 0, 1, a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def smith_normal_form(A: List[List[int]], nrows: int, ncols: int,
                      need_U: bool = True, need_V: bool = True) -> SNF:
    """Exact integer Smith normal form with optional transform tracking."""
    D = [list(row) for row in A]
    U = [[int(i == j) for j in range(nrows)] for i in range(nrows)] if need_U else None
    V = [[int(i == j) for j in range(ncols)] for i in range(ncols)] if need_V else None

    def swap_rows(i1, i2):
        if i1 == i2:
            return
        D[i1], D[i2] = D[i2], D[i1]
        if U is not None:
            U[i1], U[i2] = U[i2], U[i1]

    def swap_cols(j1, j2):
        if j1 == j2:
            return
        for row in D:
            row[j1], row[j2] = row[j2], row[j1]
        if V is not None:
            for row in V:
                row[j1], row[j2] = row[j2], row[j1]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        rd, rs = D[dst], D[src]
        for j in range(ncols):
            if rs[j]:
                rd[j] += q * rs[j]
        if U is not None:
            ud, us = U[dst], U[src]
            for j in range(nrows):
                if us[j]:
                    ud[j] += q * us[j]

    def add_col(dst, src, q):
        for row in D:
            if row[src]:
                row[dst] += q * row[src]
        if V is not None:
            for row in V:
                if row[src]:
                    row[dst] += q * row[src]

    def combine_rows(i1, i2, j):
        # make D[i1][j] = gcd, D[i2][j] = 0, via a unimodular 2x2 transform
        a, b = D[i1][j], D[i2][j]
        if b == 0:
            return
        if a and b % a == 0:
            add_row(i2, i1, -(b // a))
            return
        if a == 0:
            swap_rows(i1, i2)
            return
        x, y, g = _xgcd(a, b)
        mbg, ag = -b // g, a // g
        r1, r2 = D[i1], D[i2]
        for jj in range(ncols):
            aa, bb = r1[jj], r2[jj]
            if aa or bb:
                r1[jj] = x * aa + y * bb
                r2[jj] = mbg * aa + ag * bb
        if U is not None:
            u1, u2 = U[i1], U[i2]
            for jj in range(nrows):
                aa, bb = u1[jj], u2[jj]
                if aa or bb:
                    u1[jj] = x * aa + y * bb
                    u2[jj] = mbg * aa + ag * bb

    def combine_cols(j1, j2, i):
        a, b = D[i][j1], D[i][j2]
        if b == 0:
            return
        if a and b % a == 0:
            add_col(j2, j1, -(b // a))
            return
        if a == 0:
            swap_cols(j1, j2)
            return
        x, y, g = _xgcd(a, b)
        mbg, ag = -b // g, a // g
        for row in D:
            aa, bb = row[j1], row[j2]
            if aa or bb:
                row[j1] = x * aa + y * bb
                row[j2] = mbg * aa + ag * bb
        if V is not None:
            for row in V:
                aa, bb = row[j1], row[j2]
                if aa or bb:
                    row[j1] = x * aa + y * bb
                    row[j2] = mbg * aa + ag * bb

    def find_pivot(k):
        best = None
        for i in range(k, nrows):
            row = D[i]
            for j in range(k, ncols):
                v = row[j]
                if v:
                    if v == 1 or v == -1:
                        return i, j
                    if best is None or abs(v) < abs(D[best[0]][best[1]]):
                        best = (i, j)
        return best

    rank = 0
    for k in range(min(nrows, ncols)):
        piv = find_pivot(k)
        if piv is None:
            break
        swap_rows(k, piv[0])
        swap_cols(k, piv[1])
        while True:
            for i in range(k + 1, nrows):
                if D[i][k]:
                    combine_rows(k, i, k)
            if all(D[k][j] == 0 for j in range(k + 1, ncols)):
                break
            for j in range(k + 1, ncols):
                if D[k][j]:
                    combine_cols(k, j, k)
            if all(D[i][k] == 0 for i in range(k + 1, nrows)):
                break
        rank = k + 1

    for i in range(rank):
        if D[i][i] < 0:
            for j in range(ncols):
                D[i][j] = -D[i][j]
            if U is not None:
                for j in range(nrows):
                    U[i][j] = -U[i][j]

    # enforce d_i | d_{i+1} by repeated 2x2 fixes
    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            a, b = D[i][i], D[i + 1][i + 1]
            if b % a:
                add_col(i, i + 1, 1)          # block [[a, 0], [b, b]]
                combine_rows(i, i + 1, i)     # diag gcd, fill at (i, i+1)
                if D[i][i + 1]:
                    add_col(i + 1, i, -(D[i][i + 1] // D[i][i]))
                if D[i][i] < 0 or D[i + 1][i + 1] < 0:
                    for (r, neg) in ((i, D[i][i] < 0), (i + 1, D[i + 1][i + 1] < 0)):
                        if neg:
                            for j in range(ncols):
                                D[r][j] = -D[r][j]
                            if U is not None:
                                for j in range(nrows):
                                    U[r][j] = -U[r][j]
                changed = True

    diag = [D[i][i] for i in range(min(nrows, ncols))]
    return SNF(nrows, ncols, diag, U, V)


def _group_key(group: Group) -> str:
    h = hashlib.sha256()
    h.update(repr((group.table, group.names)).encode())
    return h.hexdigest()


def _disk_cache_path(group: Group, degree: int) -> Optional[str]:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    os.makedirs(root, exist_ok=True)
    return os.path.join(root, f"snf-{_group_key(group)}-d{degree}.json")


def coboundary_matrix(group: Group, degree: int) -> CoboundaryMatrix:
    """The (cached) matrix of d^degree on this group."""
    key = ("dmat", degree)
    mat = group._cache.get(key)
    if mat is None:
        mat = CoboundaryMatrix(group, degree)
        group._cache[key] = mat
    return mat


def _snf_for(group: Group, degree: int, need_U: bool, need_V: bool) -> SNF:
    key = ("snf", degree)
    got = group._cache.get(key)
    if got is not None and (got.U is not None or not need_U) \
            and (got.V is not None or not need_V):
        return got

    path = _disk_cache_path(group, degree)
    if got is None and path and os.path.exists(path):
        with open(path) as fh:
            data = json.load(fh)
        got = SNF(data["nrows"], data["ncols"], data["diag"],
                  data.get("U"), data.get("V"))
        if (got.U is not None or not need_U) and (got.V is not None or not need_V):
            group._cache[key] = got
            return got

    mat = coboundary_matrix(group, degree)
    snf = smith_normal_form(mat.entries, len(mat.rows), len(mat.cols),
                            need_U=need_U or (got is not None and got.U is not None),
                            need_V=need_V or (got is not None and got.V is not None))
    group._cache[key] = snf
    if path:
        payload = {"nrows": snf.nrows, "ncols": snf.ncols, "diag": snf.diag,
                   "U": snf.U, "V": snf.V}
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(payload, fh)
        os.replace(tmp, path)
    return snf


def _solve(target: Cochain):
    """Shared solver core: (witness or None, violating row index or None)."""
    n = target.degree
    if n not in (2, 3):
        raise DegreeMismatch("coboundary solving supports target degrees 2 and 3")
    group = target.group
    if target.is_zero():
        return zero_cochain(group, n - 1), None

    mat = coboundary_matrix(group, n - 1)
    snf = _snf_for(group, n - 1, need_U=True, need_V=True)
    nz = [(k, target.value(t)) for k, t in enumerate(mat.rows) if target.value(t)]
    U, V, diag = snf.U, snf.V, snf.diag

    def ub(i):
        acc = ZERO
        row = U[i]
        for k, v in nz:
            c = row[k]
            if c:
                acc = acc + c * v
        return acc

    # obstruction rows first: any row past the nonzero invariant factors
    for i in range(snf.nrows):
        d = diag[i] if i < len(diag) else 0
        if d == 0 and ub(i):
            return None, i

    y = []
    for i in range(len(diag)):
        if diag[i] == 0:
            y.append(ZERO)
            continue
        u = ub(i)
        y.append(QZ(u.num, u.den * diag[i]))

    vals = {}
    ynz = [(i, v) for i, v in enumerate(y) if v]
    for j, col_tuple in enumerate(mat.cols):
        acc = ZERO
        row = V[j]
        for i, v in ynz:
            c = row[i]
            if c:
                acc = acc + c * v
        if acc:
            vals[col_tuple] = acc
    witness = Cochain(group, n - 1, vals)
    if coboundary(witness) != target:
        raise InternalInvariantBroken("coboundary witness failed verification")
    return witness, None


def solve_coboundary(target: Cochain) -> Optional[Cochain]:
    """A cochain f with df = target, or None when the class is nontrivial.

    Witnesses are re-verified through coboundary() before being returned.
    """
    witness, _ = _solve(target)
    return witness


def warm_degree2_solver(group: Group) -> None:
    """Precompute the factorization behind degree-2 solves on this group.

    Construction of the shared caches is single-threaded by contract; call
    this before handing the group to concurrent readers.
    """
    if group.order > 1:
        _snf_for(group, 1, need_U=True, need_V=True)


def image_obstruction(target: Cochain) -> Optional[int]:
    """Index of a row certifying target is not a coboundary (None if it is)."""
    _, row = _solve(target)
    return row


def is_cohomologous(a: Cochain, b: Cochain) -> Optional[Cochain]:
    """Witness f with df = a - b, or None when the classes differ."""
    return solve_coboundary(combine(a, b, (1, -1)))


def h2_order(group: Group) -> int:
    """Order of the second cohomology group with Q/Z coefficients.

    Equals the torsion order of the cokernel of the degree-3 boundary map,
    read off the invariant factors of the degree-2 coboundary matrix.
    """
    if group.order == 1:
        return 1
    snf2 = _snf_for(group, 2, need_U=False, need_V=True)
    out = 1
    for d in snf2.diag:
        if d > 1:
            out *= d
    return out


def h2_representatives(group: Group) -> List[Cochain]:
    """One normalized 2-cocycle per class of H^2(group, Q/Z).

    The zero cochain comes first; the list is complete (its length is checked
    against the invariant-factor order) and pairwise non-cohomologous (checked
    with solve_coboundary on differences).

    Every class has a representative with values in (1/M)Z/Z for M = |group|,
    so candidates are drawn from the solution lattice of the degree-2
    coboundary matrix mod M.  Candidates are separated by their pairing with
    the zero-invariant-factor rows of the degree-1 factorization, which
    detects cohomology over Q/Z exactly.
    """
    if group.order == 1:
        return [zero_cochain(group, 2)]
    M = group.order
    mat1 = coboundary_matrix(group, 1)
    pairs = mat1.rows  # == coboundary_matrix(group, 2).cols
    P = len(pairs)
    snf1 = _snf_for(group, 1, need_U=True, need_V=False)
    snf2 = _snf_for(group, 2, need_U=False, need_V=True)
    zero_rows = [i for i in range(P)
                 if i >= len(snf1.diag) or snf1.diag[i] == 0]
    U1 = snf1.U

    def signature(vec):
        out = []
        nz = [(k, v) for k, v in enumerate(vec) if v]
        for i in zero_rows:
            row = U1[i]
            acc = ZERO
            for k, v in nz:
                c = row[k]
                if c:
                    acc = acc + c * v
            out.append(acc)
        return tuple(out)

    # generators of the lattice of 2-cocycles with denominator dividing M
    generators = []
    V2 = snf2.V
    for j in range(P):
        d = snf2.diag[j] if j < len(snf2.diag) else 0
        g = gcd(d, M)
        if g == 1:
            continue
        vec = tuple(QZ(V2[p][j], g) for p in range(P))
        generators.append(vec)

    zero_vec = tuple(ZERO for _ in range(P))
    seen = {signature(zero_vec): zero_vec}
    frontier = [zero_vec]
    gen_sigs = [signature(g) for g in generators]
    sig_of = {zero_vec: signature(zero_vec)}
    while frontier:
        new = []
        for vec in frontier:
            vsig = sig_of[vec]
            for gvec, gsig in zip(generators, gen_sigs):
                nsig = tuple(a + b for a, b in zip(vsig, gsig))
                if nsig not in seen:
                    nvec = tuple(a + b for a, b in zip(vec, gvec))
                    seen[nsig] = nvec
                    sig_of[nvec] = nsig
                    new.append(nvec)
        frontier = new

    expected = h2_order(group)
    if len(seen) != expected:
        raise InternalInvariantBroken(
            f"found {len(seen)} cohomology classes, invariant factors give {expected}")

    reps = []
    for vec in seen.values():
        vals = {pairs[p]: v for p, v in enumerate(vec) if v}
        c = Cochain(group, 2, vals)
        if not coboundary(c).is_zero():
            raise InternalInvariantBroken("candidate representative is not a cocycle")
        reps.append(c)
    reps.sort(key=lambda c: (not c.is_zero(),) + c.value_sequence())

    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            if is_cohomologous(reps[i], reps[j]) is not None:
                raise InternalInvariantBroken(
                    "distinct representatives are cohomologous")
    return reps
