"""Small exact linear algebra over the rationals.

Everything here works on lists/tuples of ``fractions.Fraction`` and stays
exact; no floats.  Matrices are lists of row tuples.  Sizes are tiny (the
ambient dimensions in this package are 1-4), so plain Gaussian elimination
with first-nonzero pivoting is all we need.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def frac(x) -> Fraction:
    """Coerce ints, strings like '3/4', and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not allowed in exact data: %r" % (x,))
    return Fraction(x)


def qvec(seq) -> tuple[Fraction, ...]:
    return tuple(frac(x) for x in seq)


def dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(a, c):
    c = frac(c)
    return tuple(c * x for x in a)


def mat_vec(rows, v):
    return tuple(dot(r, v) for r in rows)


def _eliminate(rows):
    """Row-reduce a copy of `rows`; returns (echelon rows, pivot columns)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows) -> int:
    if not rows:
        return 0
    return len(_eliminate(rows)[1])


def nullspace(rows) -> list[tuple[Fraction, ...]]:
    """Basis of {x : rows @ x = 0}, one tuple per basis vector."""
    if not rows:
        return []
    ncols = len(rows[0])
    m, pivots = _eliminate(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(tuple(v))
    return basis


def solve(rows, rhs):
    """Solve the square system rows @ x = rhs; None if singular."""
    n = len(rows)
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = _eliminate(aug)
    if pivots != list(range(n)):
        return None
    return tuple(m[i][n] for i in range(n))


def solve_rect(rows, rhs):
    """Any solution of a consistent (possibly rectangular) system, else None."""
    if not rows:
        return ()
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = _eliminate(aug)
    if ncols in pivots:
        return None  # inconsistent: pivot in the rhs column
    x = [Fraction(0)] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = m[i][ncols]
    return tuple(x)


def det(rows) -> Fraction:
    n = len(rows)
    m = [list(r) for r in rows]
    d = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            d = -d
        d *= m[c][c]
        inv = Fraction(1) / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


def primitive_int_vector(v):
    """Scale a nonzero rational vector to a primitive integer vector.

    Keeps direction (positive scaling only) so inequality senses survive.
    Returns (int tuple, multiplier) with multiplier > 0 rational such that
    multiplier * v = int tuple.
    """
    denoms = [x.denominator for x in v]
    lcm = 1
    for d in denoms:
        lcm = lcm // gcd(lcm, d) * d
    ints = [int(x * lcm) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    ints = [x // g for x in ints]
    return tuple(ints), Fraction(lcm, g)


def clear_denominators_columns(points):
    """Scale each coordinate axis of a point set to integers.

    Per-axis positive scaling is an invertible diagonal map, so convexity
    data (extreme points, face lattice) is unchanged.  Returns (int point
    tuples, per-axis multipliers).
    """
    if not points:
        return [], ()
    dim = len(points[0])
    mults = []
    for c in range(dim):
        lcm = 1
        for p in points:
            d = p[c].denominator
            lcm = lcm // gcd(lcm, d) * d
        mults.append(lcm)
    ints = [tuple(int(p[c] * mults[c]) for c in range(dim)) for p in points]
    return ints, tuple(Fraction(m) for m in mults)


def signature(sym_rows) -> tuple[int, int, int]:
    """(n_pos, n_neg, n_zero) eigenvalue signs of a symmetric rational matrix.

    Computed exactly by congruence diagonalization (Sylvester's law of
    inertia), so no tolerance is involved.
    """
    n = len(sym_rows)
    m = [[frac(x) for x in row] for row in sym_rows]
    pos = neg = zero = 0
    k = 0
    while k < n:
        # find a nonzero diagonal pivot at or after k
        p = next((i for i in range(k, n) if m[i][i] != 0), None)
        if p is None:
            # all remaining diagonal entries vanish; look for off-diagonal
            off = None
            for i in range(k, n):
                for j in range(i + 1, n):
                    if m[i][j] != 0:
                        off = (i, j)
                        break
                if off:
                    break
            if off is None:
                zero += n - k
                break
            i, j = off
            # row/col addition makes a nonzero diagonal entry at i
            for c in range(n):
                m[i][c] += m[j][c]
            for r in range(n):
                m[r][i] += m[r][j]
            continue
        if p != k:
            m[k], m[p] = m[p], m[k]
            for r in range(n):
                m[r][k], m[r][p] = m[r][p], m[r][k]
        d = m[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if m[i][k] != 0:
                f = m[i][k] / d
                for c in range(n):
                    m[i][c] -= f * m[k][c]
        for j in range(k + 1, n):
            if m[k][j] != 0:
                f = m[k][j] / d
                for r in range(n):
                    m[r][j] -= f * m[r][k]
        k += 1
    return pos, neg, zero
