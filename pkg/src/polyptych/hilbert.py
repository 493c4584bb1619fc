"""Hilbert bases of semigroups ``{v in Z^n : A v >= 0}``.

The kernel lattice ``L = {v : A v = 0}`` is split off with an integer column
echelon form.  The rest is the pointed semigroup ``A Z^n`` intersected with
the nonnegative orthant, whose irreducible elements are its minimal nonzero
members under the componentwise order.  They are found by enumerating a box
bounded by the sum of the extreme rays, then lifted back to ``Z^n`` and
reduced modulo ``L``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

IntVec = Tuple[int, ...]


@dataclass(frozen=True)
class IneqSystem:
    n: int
    rows: Tuple[IntVec, ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        for r in rows:
            if len(r) != self.n:
                raise ValueError(f"row {r} has length {len(r)}, expected {self.n}")
            if not any(r):
                raise ValueError("rows must be nonzero")
        object.__setattr__(self, "rows", rows)

    def image(self, v) -> IntVec:
        return tuple(sum(a * x for a, x in zip(r, v)) for r in self.rows)

    def contains(self, v) -> bool:
        return all(u >= 0 for u in self.image(v))


# --- integer linear algebra ----------------------------------------------

def column_echelon(A: Sequence[Sequence[int]], n: int):
    """Return ``(H, U, rank)`` with ``A U = H``, ``U`` unimodular.

    ``H`` is in column echelon form: its first ``rank`` columns are nonzero
    with strictly increasing pivot rows and its remaining columns are zero.
    Matrices are lists of rows.
    """
    m = len(A)
    H = [list(r) for r in A]
    U = [[int(i == j) for j in range(n)] for i in range(n)]

    def colop_swap(i, j):
        for M in (H, U):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def colop_add(dst, src, k):  # col_dst += k * col_src
        for M in (H, U):
            for row in M:
                row[dst] += k * row[src]

    def colop_neg(i):
        for M in (H, U):
            for row in M:
                row[i] = -row[i]

    col = 0
    for r in range(m):
        if col >= n:
            break
        while True:
            nz = [j for j in range(col, n) if H[r][j] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda j: abs(H[r][j]))
            if piv != col:
                colop_swap(piv, col)
            done = True
            for j in range(col + 1, n):
                if H[r][j] != 0:
                    colop_add(j, col, -(H[r][j] // H[r][col]))
                    if H[r][j] != 0:
                        done = False
            if done:
                break
        if any(H[r][j] != 0 for j in range(col, n)):
            if H[r][col] < 0:
                colop_neg(col)
            col += 1
    return H, U, col


def kernel_basis(A, n: int) -> List[IntVec]:
    """A basis of the integer kernel of ``A``, in row Hermite normal form."""
    if not A:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    _, U, rank = column_echelon(A, n)
    basis = [[U[i][j] for i in range(n)] for j in range(rank, n)]
    return [tuple(b) for b in hermite_rows(basis)]


def hermite_rows(B: List[List[int]]) -> List[List[int]]:
    """Row Hermite normal form (positive pivots, entries above pivots reduced)."""
    B = [list(r) for r in B]
    if not B:
        return B
    n = len(B[0])
    row = 0
    for c in range(n):
        while True:
            nz = [i for i in range(row, len(B)) if B[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(B[i][c]))
            B[row], B[piv] = B[piv], B[row]
            done = True
            for i in range(row + 1, len(B)):
                if B[i][c] != 0:
                    k = B[i][c] // B[row][c]
                    B[i] = [x - k * y for x, y in zip(B[i], B[row])]
                    if B[i][c] != 0:
                        done = False
            if done:
                break
        if row < len(B) and B[row][c] != 0:
            if B[row][c] < 0:
                B[row] = [-x for x in B[row]]
            for i in range(row):
                k = B[i][c] // B[row][c]
                B[i] = [x - k * y for x, y in zip(B[i], B[row])]
            row += 1
    return [r for r in B if any(r)]


def reduce_mod_lattice(v, hnf: List[IntVec]) -> IntVec:
    """Representative of ``v + L`` with pivot coordinates in ``[0, pivot)``."""
    v = list(v)
    for b in hnf:
        c = next(i for i, x in enumerate(b) if x != 0)
        k = v[c] // b[c]
        v = [x - k * y for x, y in zip(v, b)]
    return tuple(v)


def _solve_lower(H, rank, u) -> Optional[List[int]]:
    """Integer ``lam`` with ``H[:, :rank] lam = u``, or ``None``."""
    lam = [0] * rank
    m = len(H)
    col = 0
    for r in range(m):
        acc = u[r] - sum(H[r][j] * lam[j] for j in range(min(col, rank)))
        if col < rank and H[r][col] != 0:
            if acc % H[r][col]:
                return None
            lam[col] = acc // H[r][col]
            col += 1
        elif acc != 0:
            return None
    return lam


def _rank(M) -> int:
    M = [[Fraction(x) for x in r] for r in M]
    rank = 0
    cols = len(M[0]) if M else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for i in range(len(M)):
            if i != rank and M[i][c] != 0:
                f = M[i][c] / M[rank][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


def _nullvector(M, k) -> Optional[List[Fraction]]:
    """A nonzero vector spanning the (assumed 1-dim) right kernel of ``M`` (k columns)."""
    M = [[Fraction(x) for x in r] for r in M]
    pivots = []
    rank = 0
    for c in range(k):
        piv = next((i for i in range(rank, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        M[rank] = [x / M[rank][c] for x in M[rank]]
        for i in range(len(M)):
            if i != rank and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        pivots.append(c)
        rank += 1
    free = [c for c in range(k) if c not in pivots]
    if len(free) != 1:
        return None
    f = free[0]
    x = [Fraction(0)] * k
    x[f] = Fraction(1)
    for i, c in enumerate(pivots):
        x[c] = -M[i][f]
    return x


def _primitive_int(v) -> IntVec:
    from math import gcd
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


# --- Hilbert basis -------------------------------------------------------

@dataclass
class HilbertResult:
    pointed: List[IntVec]      # lifts of the irreducibles of the pointed part
    lineality: List[IntVec]    # HNF basis of the kernel lattice (emitted with both signs)

    @property
    def basis(self) -> List[IntVec]:
        out = list(self.pointed)
        for b in self.lineality:
            out.append(b)
            out.append(tuple(-x for x in b))
        return out


def _extreme_rays_u(Hcols: List[List[int]], m: int, rank: int) -> List[IntVec]:
    """Extreme rays of ``{u = B lam : u >= 0}`` where ``B`` has the given columns."""
    B = [[Hcols[j][i] for j in range(rank)] for i in range(m)]  # m x rank
    rays = []
    for Z in itertools.combinations(range(m), rank - 1):
        sub = [B[i] for i in Z]
        if rank > 1 and _rank(sub) != rank - 1:
            continue
        lam = _nullvector(sub, rank) if rank > 1 else [Fraction(1)]
        if lam is None:
            continue
        u = [sum(B[i][j] * lam[j] for j in range(rank)) for i in range(m)]
        for sign in (1, -1):
            us = [sign * x for x in u]
            if all(x >= 0 for x in us) and any(us):
                p = _primitive_int(us)
                if p not in rays:
                    rays.append(p)
    return rays


def hilbert(sys: IneqSystem) -> HilbertResult:
    A = [list(r) for r in sys.rows]
    n, m = sys.n, len(A)
    H, U, rank = column_echelon(A, n)
    lin = kernel_basis(A, n)
    if rank == 0:
        return HilbertResult([], lin)
    Hcols = [[H[i][j] for i in range(m)] for j in range(rank)]

    def in_lattice(u):
        return _solve_lower(H, rank, u) is not None

    rays = _extreme_rays_u(Hcols, m, rank)
    lat_rays = []
    for r in rays:
        k = 1
        while not in_lattice(tuple(k * x for x in r)):
            k += 1
        lat_rays.append(tuple(k * x for x in r))
    bound = [sum(r[i] for r in lat_rays) for i in range(m)]

    cands = []
    for u in itertools.product(*(range(b + 1) for b in bound)):
        if any(u) and in_lattice(u):
            cands.append(u)
    cands.sort(key=sum)
    minimal: List[IntVec] = []
    for u in cands:
        if not any(all(a <= b for a, b in zip(w, u)) for w in minimal):
            minimal.append(u)

    lifts = []
    for u in minimal:
        lam = _solve_lower(H, rank, u)
        v = [sum(U[i][j] * lam[j] for j in range(rank)) for i in range(n)]
        lifts.append(reduce_mod_lattice(v, lin))
    lifts.sort(reverse=True)
    return HilbertResult(lifts, lin)


def hilbert_basis(sys: IneqSystem) -> List[IntVec]:
    return hilbert(sys).basis


# --- brute-force oracle ----------------------------------------------------

def box_oracle(sys: IneqSystem, basis: Sequence[IntVec], box: int = 6) -> Dict[str, bool]:
    """Independent check of a claimed Hilbert basis on the box ``|v|_inf <= box``.

    Checks (a) membership of every generator, (b) that every semigroup point
    in the box is a nonnegative combination of the generators (with integer
    coefficients on opposite pairs), and (c) that no generator outside the
    kernel splits as a sum of two semigroup points with nonzero image.
    """
    basis = [tuple(b) for b in basis]
    kernel = [b for b in basis if not any(sys.image(b))]
    pointed = [b for b in basis if any(sys.image(b))]
    a = all(sys.contains(b) for b in basis)

    imgs = [sys.image(b) for b in pointed]

    @lru_cache(maxsize=None)
    def decompose(u) -> Optional[Tuple[int, ...]]:
        if not any(u):
            return (0,) * len(imgs)
        for i, w in enumerate(imgs):
            rest = tuple(x - y for x, y in zip(u, w))
            if all(x >= 0 for x in rest):
                sub = decompose(rest)
                if sub is not None:
                    return tuple(c + (j == i) for j, c in enumerate(sub))
        return None

    # kernel generators, solved over Q for the residual check
    def in_kernel_span(r) -> bool:
        if not any(r):
            return True
        if not kernel:
            return False
        cols = kernel
        M = [[cols[j][i] for j in range(len(cols))] + [r[i]] for i in range(sys.n)]
        # Gaussian elimination over Q, then integrality of the solution
        k = len(cols)
        M = [[Fraction(x) for x in row] for row in M]
        piv_cols, row = [], 0
        for c in range(k):
            p = next((i for i in range(row, len(M)) if M[i][c] != 0), None)
            if p is None:
                continue
            M[row], M[p] = M[p], M[row]
            M[row] = [x / M[row][c] for x in M[row]]
            for i in range(len(M)):
                if i != row and M[i][c] != 0:
                    f = M[i][c]
                    M[i] = [x - f * y for x, y in zip(M[i], M[row])]
            piv_cols.append(c)
            row += 1
        if any(M[i][k] != 0 for i in range(row, len(M))):
            return False
        return all(M[i][k].denominator == 1 for i in range(row))

    b = True
    points = []
    for v in itertools.product(range(-box, box + 1), repeat=sys.n):
        u = sys.image(v)
        if all(x >= 0 for x in u):
            points.append((v, u))
            coeffs = decompose(u)
            if coeffs is None:
                b = False
                continue
            resid = list(v)
            for c, h in zip(coeffs, pointed):
                resid = [x - c * y for x, y in zip(resid, h)]
            if not in_kernel_span(resid):
                b = False

    images = {u for _, u in points if any(u)}
    c = True
    for h, uh in zip(pointed, imgs):
        for u1 in images:
            u2 = tuple(x - y for x, y in zip(uh, u1))
            if any(u2) and u2 in images:
                c = False
    return {"members": a, "generates": b, "minimal": c}
