"""Exact linear algebra over the rationals and the integers.

Everything in this package that touches cones or certificates must be
bit-exact, so matrices are lists of Python ints or Fractions and all
eliminations are done symbolically.  The sizes involved are modest (a few
hundred rows/columns), which keeps dense exact elimination practical.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

# Prime used for the fast modular rank bound in adjacency tests.  A modular
# rank never exceeds the rational rank, so a modular hit at the target rank
# is an exact certificate; misses fall back to exact elimination.
_RANK_PRIME = (1 << 31) - 1


def int_dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def primitive(vec):
    """Scale an integer vector by a positive rational so its entries are
    coprime integers.  Returns a tuple; the zero vector maps to itself."""
    g = 0
    for x in vec:
        g = gcd(g, x)
        if g == 1:
            return tuple(vec)
    if g == 0:
        return tuple(vec)
    return tuple(x // g for x in vec)


def primitive_ray(vec):
    """Like :func:`primitive` but also flips the sign so the first nonzero
    entry is positive (canonical representative of a line through 0)."""
    v = primitive(vec)
    for x in v:
        if x > 0:
            return v
        if x < 0:
            return tuple(-y for y in v)
    return v


def fraction_vector_to_integers(vec):
    """Clear denominators of a Fraction vector: returns (int tuple, lcm)."""
    lcm = 1
    for x in vec:
        q = Fraction(x).denominator
        lcm = lcm // gcd(lcm, q) * q
    return tuple(int(Fraction(x) * lcm) for x in vec), lcm


def rref(rows, ncols):
    """Reduced row echelon form over Q.

    ``rows`` is a list of sequences (ints or Fractions).  Returns
    ``(reduced, pivots)`` where ``reduced`` holds the nonzero rows as
    Fraction tuples and ``pivots`` the pivot column of each row.
    """
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for k in range(r, len(mat)):
            if mat[k][c]:
                pivot = k
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for k in range(len(mat)):
            if k != r and mat[k][c]:
                f = mat[k][c]
                mat[k] = [a - f * b for a, b in zip(mat[k], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [tuple(row) for row in mat[:r]], pivots


def kernel_basis(rows, ncols):
    """Integer basis of the right kernel of an integer matrix.

    The basis is the canonical RREF kernel basis (one vector per free
    column, identity on the free coordinates), scaled to integers.
    """
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            vec[p] = -row[f]
        ivec, _ = fraction_vector_to_integers(vec)
        basis.append(primitive(ivec))
    return basis


def rank_mod_p(rows, ncols, p=_RANK_PRIME):
    """Rank of an integer matrix over GF(p).  Lower bound on the Q-rank."""
    mat = [[x % p for x in row] for row in rows]
    rank = 0
    for c in range(ncols):
        pivot = None
        for k in range(rank, len(mat)):
            if mat[k][c]:
                pivot = k
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][c], p - 2, p)
        prow = mat[rank]
        for k in range(len(mat)):
            if k != rank and mat[k][c]:
                f = mat[k][c] * inv % p
                mat[k] = [(a - f * b) % p for a, b in zip(mat[k], prow)]
        rank += 1
        if rank == len(mat):
            break
    return rank


def rank_exact(rows, ncols):
    """Rank over Q via fraction-free (Bareiss-style) elimination."""
    mat = [list(row) for row in rows]
    rank = 0
    for c in range(ncols):
        pivot = None
        for k in range(rank, len(mat)):
            if mat[k][c]:
                pivot = k
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        prow = mat[rank]
        pv = prow[c]
        for k in range(rank + 1, len(mat)):
            if mat[k][c]:
                f = mat[k][c]
                row = [pv * a - f * b for a, b in zip(mat[k], prow)]
                g = 0
                for x in row:
                    g = gcd(g, x)
                    if g == 1:
                        break
                if g > 1:
                    row = [x // g for x in row]
                mat[k] = row
        rank += 1
        if rank == len(mat):
            break
    return rank


def rank_at_least(rows, ncols, target):
    """True iff the integer matrix has rank >= target (exact).

    The modular rank is a certified lower bound, so a modular hit avoids
    the exact elimination entirely.
    """
    if target <= 0:
        return True
    if len(rows) < target:
        return False
    if rank_mod_p(rows, ncols) >= target:
        return True
    return rank_exact(rows, ncols) >= target
