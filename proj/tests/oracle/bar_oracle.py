#!/usr/bin/env python3
"""Independent brute-force oracle for relative Hochschild and cyclic homology.

Works on the normalized relative bar complex A (x) Abar^{(x) r} modulo the
K-commutator subspace, realized as an explicit quotient V_r / W_r of the full
tensor space (no per-component subquotients, no small complex).  Ranks over a
cyclotomic field are obtained by realifying every entry into its rational
multiplication matrix, so all arithmetic is exact over Q.

Usage:  bar_oracle.py [--max-hh N] [--max-hc N] [--json] [fixture ...]
"""

import argparse
import itertools
import json
import sys
from fractions import Fraction


# ---------------------------------------------------------------- fields


def cyclotomic_poly(d):
    """Integer coefficients (low to high) of Phi_d by exact division."""
    num = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            num = poly_div_exact(num, cyclotomic_poly(e))
    return num


def poly_div_exact(a, b):
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1] // b[-1]
        q[k] = c
        for j, bj in enumerate(b):
            a[k + j] -= c * bj
    assert all(v == 0 for v in a), "inexact division"
    return q


class Field:
    def __init__(self, d):
        self.d = d
        self.phi = cyclotomic_poly(d) if d > 2 else None
        self.deg = len(self.phi) - 1 if self.phi else 1

    def zero(self):
        return (Fraction(0),) * self.deg

    def one(self):
        return (Fraction(1),) + (Fraction(0),) * (self.deg - 1)

    def const(self, q):
        return (Fraction(q),) + (Fraction(0),) * (self.deg - 1)

    def zeta_pow(self, k):
        """zeta_d^k."""
        if self.d == 1:
            return self.one()
        if self.d == 2:
            return self.const(-1 if k % 2 else 1)
        k %= self.d
        v = [Fraction(0)] * (k + 1)
        v[k] = Fraction(1)
        return self.reduce(v)

    def reduce(self, v):
        v = list(v)
        if self.phi is None:
            return (sum(v, Fraction(0)),) if len(v) > 1 else tuple(v)
        n = self.deg
        for k in range(len(v) - 1, n - 1, -1):
            c = v[k]
            if c:
                for j in range(n + 1):
                    v[k - n + j] -= c * self.phi[j]
        v = v[:n] + [Fraction(0)] * max(0, n - len(v))
        return tuple(v)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        if self.deg == 1:
            return (a[0] * b[0],)
        out = [Fraction(0)] * (2 * self.deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return self.reduce(out)

    def is_zero(self, a):
        return all(x == 0 for x in a)

    def realify(self, a):
        """Matrix (list of rows) of multiplication by a on the power basis."""
        cols = []
        for j in range(self.deg):
            e = [Fraction(0)] * self.deg
            e[j] = Fraction(1)
            cols.append(self.mul(a, tuple(e)))
        return [[cols[j][i] for j in range(self.deg)] for i in range(self.deg)]


# ---------------------------------------------------------------- algebra


class Algebra:
    """K via structure constants, alpha as a matrix, f via lambda_1..lambda_n."""

    def __init__(self, field, dimk, mult, alpha, n, lambdas):
        self.F = field
        self.dk = dimk
        self.mult = mult  # mult[i][j] -> K vector
        self.alpha = alpha  # alpha[col j] -> K vector (image of basis j)
        self.n = n
        self.lam = lambdas  # lam[i] for i = 0..n, lam[0] = unit
        self._apow = {}

    def kzero(self):
        return [self.F.zero()] * self.dk

    def kadd(self, a, b):
        return [self.F.add(x, y) for x, y in zip(a, b)]

    def kscale(self, c, a):
        return [self.F.mul(c, x) for x in a]

    def kmul(self, a, b):
        out = self.kzero()
        for i, x in enumerate(a):
            if self.F.is_zero(x):
                continue
            for j, y in enumerate(b):
                if self.F.is_zero(y):
                    continue
                c = self.F.mul(x, y)
                for t, z in enumerate(self.mult[i][j]):
                    if not self.F.is_zero(z):
                        out[t] = self.F.add(out[t], self.F.mul(c, z))
        return out

    def kalpha(self, a, power):
        for _ in range(power):
            out = self.kzero()
            for j, x in enumerate(a):
                if self.F.is_zero(x):
                    continue
                for t, z in enumerate(self.alpha[j]):
                    if not self.F.is_zero(z):
                        out[t] = self.F.add(out[t], self.F.mul(x, z))
            a = out
        return a

    # A elements: list of n K-vectors (coefficient of x^i on the left).
    def azero(self):
        return [self.kzero() for _ in range(self.n)]

    def xpow(self, k):
        """Normal form of x^k."""
        poly = [self.kzero() for _ in range(max(k + 1, self.n))]
        unit = self.lam[0]
        poly[k] = list(unit)
        return self.reduce_poly(poly)

    def reduce_poly(self, poly):
        poly = [list(c) for c in poly]
        n = self.n
        for k in range(len(poly) - 1, n - 1, -1):
            c = poly[k]
            if all(self.F.is_zero(z) for z in c):
                continue
            # c x^k = c x^{k-n} x^n, x^n = -sum lam_i x^{n-i}; lam_i is alpha-fixed
            for i in range(1, n + 1):
                term = self.kmul(c, self.lam[i])
                poly[k - i] = self.kadd(poly[k - i], [self.F.neg(z) for z in term])
            poly[k] = self.kzero()
        return poly[:n]

    def amul(self, a, b):
        poly = [self.kzero() for _ in range(2 * self.n - 1)]
        for i, ci in enumerate(a):
            if all(self.F.is_zero(z) for z in ci):
                continue
            for j, cj in enumerate(b):
                if all(self.F.is_zero(z) for z in cj):
                    continue
                poly[i + j] = self.kadd(poly[i + j], self.kmul(ci, self.kalpha(cj, i)))
        return self.reduce_poly(poly)

    def ak(self, lam_vec, i=0):
        a = self.azero()
        a[i] = list(lam_vec)
        return a

    def kbasis(self, t):
        v = self.kzero()
        v[t] = self.F.one()
        return v


# ---------------------------------------------------------------- bar complex


class Bar:
    """Normalized relative bar complex of A with coefficients in A.

    Basis of V_r: (i0, b, tuple) meaning basis_b x^{i0} (x) x^{i1} ... x^{ir}.
    """

    def __init__(self, alg):
        self.A = alg
        self.tuples = {}
        self.index = {}

    def basis(self, r):
        if r not in self.tuples:
            tl = list(itertools.product(range(1, self.A.n), repeat=r))
            keys = []
            for t in tl:
                for i0 in range(self.A.n):
                    for b in range(self.A.dk):
                        keys.append((i0, b, t))
            self.tuples[r] = keys
            self.index[r] = {k: p for p, k in enumerate(keys)}
        return self.tuples[r]

    def dim(self, r):
        return len(self.basis(r))

    def add_elem(self, out, r, head, tup, coeff):
        """Add coeff * [head (x) x^tup] where head is an A element."""
        self.basis(r)
        F = self.A.F
        for i0, kc in enumerate(head):
            for b, z in enumerate(kc):
                if F.is_zero(z):
                    continue
                key = self.index[r][(i0, b, tup)]
                out[key] = F.add(out.get(key, F.zero()), F.mul(coeff, z))

    def head_times_k(self, head, lam):
        """head * lam (right multiplication of an A element by a K element)."""
        return self.A.amul(head, self.A.ak(lam))

    def b(self, r, key):
        A, F = self.A, self.A.F
        i0, bb, t = key
        head = A.ak(A.kbasis(bb), i0)
        out = {}
        one = F.one()
        if r == 0:
            return out
        # a0 a1
        self.add_elem(out, r - 1, A.amul(head, A.xpow(t[0])), t[1:], one)
        # middle products
        for j in range(1, r):
            prod = A.xpow(t[j - 1] + t[j])
            shift = sum(t[: j - 1])
            sign = F.const(-1 if j % 2 else 1)
            for k, c in enumerate(prod):
                if k == 0 or all(F.is_zero(z) for z in c):
                    continue
                newhead = self.head_times_k(head, A.kalpha(c, shift))
                self.add_elem(out, r - 1, newhead, t[: j - 1] + (k,) + t[j + 1:], sign)
        # last wraps around
        sign = F.const(-1 if r % 2 else 1)
        self.add_elem(out, r - 1, A.amul(A.xpow(t[-1]), head), t[:-1], sign)
        return out

    def B(self, r, key):
        A, F = self.A, self.A.F
        i0, bb, t = key
        out = {}
        if i0 == 0:
            return out
        full = (i0,) + t
        mu = A.kbasis(bb)
        for i in range(r + 1):
            rot = full[i:] + full[:i]
            shift = sum(full[i:]) if i > 0 else 0
            headk = A.kalpha(mu, shift)
            sign = F.const(-1 if (i * r) % 2 else 1)
            self.add_elem(out, r + 1, A.ak(headk, 0), rot, sign)
        return out

    def commutators(self, r):
        """Spanning set of W_r: lam . t - t . lam."""
        A, F = self.A, self.A.F
        vecs = []
        for t in itertools.product(range(1, A.n), repeat=r):
            s = sum(t)
            for i0 in range(A.n):
                for bb in range(A.dk):
                    head = A.ak(A.kbasis(bb), i0)
                    for lt in range(A.dk):
                        lam = A.kbasis(lt)
                        left = A.amul(A.ak(lam), head)
                        right = self.head_times_k(head, A.kalpha(lam, s))
                        out = {}
                        self.add_elem(out, r, left, t, F.one())
                        self.add_elem(out, r, right, t, F.const(-1))
                        vecs.append(out)
        return vecs


# ---------------------------------------------------------------- exact rank


class Echelon:
    """Incremental sparse echelon form over Q (realified rows)."""

    def __init__(self):
        self.piv = {}

    def add(self, vec):
        v = {k: x for k, x in vec.items() if x != 0}
        while v:
            p = min(v)
            if p in self.piv:
                w = self.piv[p]
                c = v[p]
                for k, x in w.items():
                    nv = v.get(k, 0) - c * x
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
            else:
                c = v[p]
                self.piv[p] = {k: x / c for k, x in v.items()}
                return True
        return False

    def rank(self):
        return len(self.piv)


def realify_vectors(F, vecs):
    """Each field-valued sparse vector becomes deg(F) rational vectors."""
    out = []
    deg = F.deg
    for v in vecs:
        mats = {k: F.realify(x) for k, x in v.items()}
        for col in range(deg):
            rv = {}
            for k, m in mats.items():
                for row in range(deg):
                    if m[row][col] != 0:
                        rv[k * deg + row] = m[row][col]
            out.append(rv)
    return out


def span_rank(F, vecs):
    e = Echelon()
    for v in realify_vectors(F, vecs):
        e.add(v)
    return e.rank() // F.deg


# ---------------------------------------------------------------- homology


def quotient_homology(F, dims, sub, bnd, top):
    """Homology of V/W given dims of V, spanning sets of W, and boundary images.

    bnd[r] is the list of images of the basis of V_r (in V_{r-1} coordinates).
    Returns dims of H_r for r < top.
    """
    wrank = {r: span_rank(F, sub[r]) for r in range(top + 1)}
    brank = {}
    for r in range(1, top + 1):
        brank[r] = span_rank(F, bnd[r] + sub[r - 1]) - wrank[r - 1]
    out = []
    for r in range(top):
        q = dims[r] - wrank[r]
        out.append(q - (brank[r] if r > 0 else 0) - brank[r + 1])
    return out


def hh_dims(alg, top):
    bar = Bar(alg)
    F = alg.F
    dims = {r: bar.dim(r) for r in range(top + 1)}
    sub = {r: bar.commutators(r) for r in range(top + 1)}
    bnd = {r: [bar.b(r, k) for k in bar.basis(r)] for r in range(1, top + 1)}
    return quotient_homology(F, dims, sub, bnd, top)


def hc_dims(alg, top):
    """Homology of the BC total complex Tot_N = sum_p V_{N-2p} modulo W."""
    bar = Bar(alg)
    F = alg.F

    def layout(N):
        blocks = []
        off = 0
        for p in range(N // 2 + 1):
            r = N - 2 * p
            blocks.append((p, r, off))
            off += bar.dim(r)
        return blocks, off

    def embed(vec, off):
        return {k + off: x for k, x in vec.items()}

    dims, sub, bnd = {}, {}, {}
    for N in range(top + 1):
        blocks, total = layout(N)
        dims[N] = total
        s = []
        for p, r, off in blocks:
            s.extend(embed(v, off) for v in bar.commutators(r))
        sub[N] = s
    for N in range(1, top + 1):
        blocks, _ = layout(N)
        tblocks, _ = layout(N - 1)
        toff = {p: off for p, r, off in tblocks}
        imgs = []
        for p, r, off in blocks:
            for key in bar.basis(r):
                img = {}
                if r >= 1:
                    img.update(embed(bar.b(r, key), toff[p]))
                if p >= 1:
                    for k, x in embed(bar.B(r, key), toff[p - 1]).items():
                        img[k] = F.add(img.get(k, F.zero()), x)
                imgs.append(img)
        bnd[N] = imgs
    return quotient_homology(F, dims, sub, bnd, top)


# ---------------------------------------------------------------- fixtures


def group_algebra(F, elems, mul, chi, n, lambdas_fn):
    idx = {g: i for i, g in enumerate(elems)}
    dk = len(elems)
    mult = []
    for g in elems:
        row = []
        for h in elems:
            v = [F.zero()] * dk
            v[idx[mul(g, h)]] = F.one()
            row.append(v)
        mult.append(row)
    alpha = []
    for g in elems:
        v = [F.zero()] * dk
        v[idx[g]] = chi(g)
        alpha.append(v)
    lam = lambdas_fn(idx, dk)
    return Algebra(F, dk, mult, alpha, n, lam)


def unit_vec(F, idx, dk, g):
    v = [F.zero()] * dk
    v[idx[g]] = F.one()
    return v


def trunc(n):
    F = Field(1)
    mult = [[[F.one()]]]
    alpha = [[F.one()]]
    lam = [[F.one()]] + [[F.zero()] for _ in range(n)]
    return Algebra(F, 1, mult, alpha, n, lam)


def taft(n):
    F = Field(n)
    elems = list(range(n))
    return group_algebra(
        F, elems, lambda a, b: (a + b) % n, lambda a: F.zeta_pow(a), n,
        lambda idx, dk: [unit_vec(F, idx, dk, 0)] + [[F.zero()] * dk for _ in range(n)])


def rank1_c4():
    F = Field(1)
    elems = list(range(4))

    def lam(idx, dk):
        l2 = [F.zero()] * dk
        l2[idx[0]] = F.one()
        l2[idx[2]] = F.const(-1)
        return [unit_vec(F, idx, dk, 0), [F.zero()] * dk, l2]

    return group_algebra(F, elems, lambda a, b: (a + b) % 4,
                         lambda a: F.const(-1 if a % 2 else 1), 2, lam)


def dihedral(u):
    F = Field(1)
    elems = [(j, l) for l in range(2) for j in range(u)]

    def mul(p, q):
        j1, l1 = p
        j2, l2 = q
        # g^j1 h^l1 g^j2 h^l2 = g^{j1 + (-1)^l1 j2} h^{l1+l2}
        return ((j1 + (j2 if l1 == 0 else -j2)) % u, (l1 + l2) % 2)

    return group_algebra(
        F, elems, mul, lambda p: F.const(-1 if p[1] else 1), 2,
        lambda idx, dk: [unit_vec(F, idx, dk, (0, 0)), [F.zero()] * dk, [F.zero()] * dk])


def rank1nc_c2xc4():
    # a of order 4 with chi(a) = zeta_4, b of order 2 with chi(b) = -1, g1 = b.
    # g1^2 = 1 so the quotient is trivial and f = x^2.
    F = Field(4)
    elems = [(i, j) for j in range(2) for i in range(4)]
    return group_algebra(
        F, elems, lambda p, q: ((p[0] + q[0]) % 4, (p[1] + q[1]) % 2),
        lambda p: F.mul(F.zeta_pow(p[0]), F.const(-1 if p[1] else 1)), 2,
        lambda idx, dk: [unit_vec(F, idx, dk, (0, 0)), [F.zero()] * dk, [F.zero()] * dk])


def rank1nc_c8():
    # G = C_8 = <a>, chi(a) = zeta_4, g1 = a^2, n = 2: rewritten over C_8/<a^4> = C_4.
    F = Field(4)
    elems = list(range(4))
    return group_algebra(
        F, elems, lambda a, b: (a + b) % 4, lambda a: F.zeta_pow(a), 2,
        lambda idx, dk: [unit_vec(F, idx, dk, 0), [F.zero()] * dk, [F.zero()] * dk])


FIXTURES = {
    "trunc2": lambda: trunc(2),
    "trunc3": lambda: trunc(3),
    "trunc4": lambda: trunc(4),
    "sweedler": lambda: taft(2),
    "taft3": lambda: taft(3),
    "rank1c4": rank1_c4,
    "dihedral3": lambda: dihedral(3),
    "dihedral4": lambda: dihedral(4),
    "rank1nc_c2xc4": rank1nc_c2xc4,
    "rank1nc_c8": rank1nc_c8,
}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("fixtures", nargs="*")
    ap.add_argument("--max-hh", type=int, default=5)
    ap.add_argument("--max-hc", type=int, default=4)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    names = args.fixtures or list(FIXTURES)
    result = {}
    for name in names:
        alg = FIXTURES[name]()
        hh = hh_dims(alg, args.max_hh + 1)
        hc = hc_dims(alg, args.max_hc + 1)
        result[name] = {"hh": hh, "hc": hc}
        if not args.json:
            print(f"{name:16s} HH {hh}  HC {hc}", flush=True)
    if args.json:
        json.dump(result, sys.stdout, indent=1)
        print()


if __name__ == "__main__":
    main()
