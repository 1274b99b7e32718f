"""Independent brute-force oracles used by the test suite.

Everything here deliberately avoids the production solver paths: subgroup
enumeration by raw subset filtering, coboundary solving by exhaustive search
over bounded denominators, homology orders from a kernel-basis computation,
and a no-twist classifier for the trivial-cocycle reduction.
"""

from itertools import combinations, product

from modcat import (Cochain, QZ, coboundary, is_cohomologous,
                    nonidentity_tuples, smith_normal_form)
from modcat.cohomology import coboundary_matrix


def brute_subgroups(G):
    """All subgroups by filtering every subset; feasible for |G| <= 8."""
    elems = list(G.elements())
    out = []
    for r in range(1, G.order + 1):
        for subset in combinations(elems, r):
            s = set(subset)
            if G.identity not in s:
                continue
            if any(G.inverse[a] not in s for a in s):
                continue
            if any(G.table[a][b] not in s for a in s for b in s):
                continue
            out.append(tuple(sorted(s)))
    return sorted(out, key=lambda m: (len(m), m))


def brute_coboundary_witness(target, den):
    """Search all 1-cochains with values k/den for one whose coboundary is target.

    The search runs on integer vectors against a first-principles incidence
    of df(a, b) = f(b) - f(ab) + f(a); a Cochain is built only for the hit,
    and the hit is re-verified through the production coboundary.
    """
    G = target.group
    e = G.identity
    slots = [x for x in G.elements() if x != e]
    pos = {x: i for i, x in enumerate(slots)}
    rows = []
    for a in slots:
        for b in slots:
            ab = G.table[a][b]
            row = {pos[b]: 1}
            if ab != e:
                row[pos[ab]] = row.get(pos[ab], 0) - 1
            row[pos[a]] = row.get(pos[a], 0) + 1
            try:
                t = target.value((a, b)).scaled_num(den)
            except ValueError:
                return None  # target value not expressible over 1/den
            rows.append((tuple((j, c) for j, c in sorted(row.items()) if c), t))
    rows = [(r, t) for r, t in rows if r or t % den]
    for choice in product(range(den), repeat=len(slots)):
        for r, t in rows:
            if (sum(c * choice[j] for j, c in r) - t) % den:
                break
        else:
            vals = {(x,): QZ(k, den) for x, k in zip(slots, choice) if k % den}
            f = Cochain(G, 1, vals)
            assert coboundary(f) == target
            return f
    return None


def enumerate_2cocycles_int(G, den):
    """All 2-cochains with values k/den whose coboundary vanishes.

    Returns (pairs, vectors): the identity-free pair tuples in lexicographic
    order and one integer vector (numerators over den) per cocycle.  Built on
    a first-principles incidence of the degree-2 coboundary with early
    pruning, so it stays fast even at den**len(pairs) candidate scale.
    """
    e = G.identity
    elems = [a for a in G.elements() if a != e]
    pairs = [(a, b) for a in elems for b in elems]
    pair_idx = {p: i for i, p in enumerate(pairs)}
    sparse_rows = []
    for a in elems:
        for b in elems:
            for c in elems:
                row = {}

                def bump(key, s):
                    if key is not None:
                        row[key] = row.get(key, 0) + s

                bump(pair_idx[(b, c)], 1)
                ab, bc = G.table[a][b], G.table[b][c]
                bump(pair_idx[(ab, c)] if ab != e else None, -1)
                bump(pair_idx[(a, bc)] if bc != e else None, 1)
                bump(pair_idx[(a, b)], -1)
                row = tuple((j, cf) for j, cf in sorted(row.items()) if cf)
                if row:
                    sparse_rows.append(row)
    out = []
    for vec in product(range(den), repeat=len(pairs)):
        for row in sparse_rows:
            if sum(cf * vec[j] for j, cf in row) % den:
                break
        else:
            out.append(vec)
    return pairs, out


def random_cochain(G, degree, rng, den=None):
    """A random normalized cochain with denominators dividing den."""
    den = den or 2 * G.order
    vals = {}
    for args in nonidentity_tuples(G, degree):
        vals[args] = QZ(rng.randrange(den), den)
    return Cochain(G, degree, vals)


def h2_order_homology(G):
    """|H_2| via an explicit kernel basis, independent of the production shortcut.

    Chain complex boundary maps are the transposes of the coboundary matrices.
    H_2 = ker(boundary_2) / im(boundary_3): compute an integer kernel basis K,
    express the image columns in K-coordinates by exact division through the
    Smith form of K, and multiply the invariant factors of that coordinate
    matrix.
    """
    if G.order == 1:
        return 1
    D1 = coboundary_matrix(G, 1)
    D2 = coboundary_matrix(G, 2)
    P, S, T = len(D1.rows), len(D1.cols), len(D2.rows)

    b2 = [[D1.entries[p][s] for p in range(P)] for s in range(S)]  # S x P
    snf_b2 = smith_normal_form(b2, S, P, need_U=False, need_V=True)
    rank_b2 = sum(1 for d in snf_b2.diag if d)
    kernel = [[snf_b2.V[p][j] for j in range(rank_b2, P)] for p in range(P)]
    k = P - rank_b2

    snf_k = smith_normal_form(kernel, P, k, need_U=True, need_V=True)
    diag_k, Uk, Vk = snf_k.diag, snf_k.U, snf_k.V
    assert all(diag_k[i] for i in range(k)), "kernel basis must have full rank"

    Y = []  # k x T, columns of boundary_3 in kernel coordinates
    for t in range(T):
        col = [D2.entries[t][p] for p in range(P)]  # boundary_3 column
        w = [sum(Uk[i][p] * col[p] for p in range(P)) for i in range(P)]
        assert all(w[i] == 0 for i in range(k, P)), "column outside the kernel"
        y = [None] * k
        for i in range(k):
            assert w[i] % diag_k[i] == 0, "inexact division in kernel solve"
            y[i] = w[i] // diag_k[i]
        Y.append([sum(Vk[i][j] * y[j] for j in range(k)) for i in range(k)])
    Ymat = [[Y[t][i] for t in range(T)] for i in range(k)]
    snf_y = smith_normal_form(Ymat, k, T, need_U=False, need_V=False)
    order = 1
    for i in range(k):
        d = snf_y.diag[i] if i < len(snf_y.diag) else 0
        assert d != 0, "second homology of a finite group must be finite"
        order *= d
    return order


def brute_trivial_omega_classes(cat, pairs):
    """Partition pairs of a trivial-cocycle category by plain conjugation.

    a = (H, psi) and b = (L, xi) merge exactly when some g maps L onto H with
    psi(g . g^{-1}) cohomologous to xi.  No twist terms anywhere.
    """
    from modcat import conjugate_cochain, conjugate_subgroup

    G = cat.group
    assert cat.omega.is_zero()
    n = len(pairs)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            a, b = pairs[i], pairs[j]
            if a.H.order != b.H.order:
                continue
            for g in G.elements():
                if conjugate_subgroup(G, b.H, g).members != a.H.members:
                    continue
                moved = conjugate_cochain(a.psi, g)
                if is_cohomologous(moved, b.psi) is not None:
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[max(ri, rj)] = min(ri, rj)
                    break
    blocks = {}
    for i in range(n):
        blocks.setdefault(find(i), []).append(i)
    return sorted(sorted(v) for v in blocks.values())


def bareiss_det(A):
    """Fraction-free determinant of a square integer matrix."""
    n = len(A)
    if n == 0:
        return 1
    M = [row[:] for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]
