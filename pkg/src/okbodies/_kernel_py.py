"""Pure-Python kernels for exact integer geometry.

These are the hot inner loops of the package: orientation predicates, the
2D monotone chain, the pivot pass of 3D gift wrapping, the interior-point
prefilter, and lattice-point enumeration.  `okbodies._speedups` is a
compiled twin with the same signatures; `okbodies.kernel` picks a lane at
import time and falls back here whenever coordinates could overflow C
integers.

All inputs are plain Python ints, so results are exact for any magnitude.
"""

from __future__ import annotations

LANE = "python"


def orient2d(a, b, c) -> int:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def orient3d(a, b, c, d) -> int:
    ux, uy, uz = b[0] - a[0], b[1] - a[1], b[2] - a[2]
    vx, vy, vz = c[0] - a[0], c[1] - a[1], c[2] - a[2]
    wx, wy, wz = d[0] - a[0], d[1] - a[1], d[2] - a[2]
    return (ux * (vy * wz - vz * wy)
            - uy * (vx * wz - vz * wx)
            + uz * (vx * wy - vy * wx))


def hull2d_indices(pts):
    """Indices of the convex hull of distinct integer pairs, CCW from lex-min.

    Collinear non-extreme points are dropped.
    """
    idx = sorted(range(len(pts)), key=lambda i: pts[i])
    if len(idx) <= 2:
        return idx
    lower = []
    for i in idx:
        while len(lower) >= 2 and orient2d(pts[lower[-2]], pts[lower[-1]], pts[i]) <= 0:
            lower.pop()
        lower.append(i)
    upper = []
    for i in reversed(idx):
        while len(upper) >= 2 and orient2d(pts[upper[-2]], pts[upper[-1]], pts[i]) <= 0:
            upper.pop()
        upper.append(i)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 1:  # all points collinear collapses both chains
        hull = [idx[0], idx[-1]]
    return hull


def prepare3(pts):
    """Lane-specific handle for repeated 3D predicate passes."""
    return pts


def pivot3d(handle, a, b):
    """Gift-wrap pivot around the directed edge (a, b) of a 3D hull.

    Returns c with orient3d(pts[a], pts[b], pts[c], p) <= 0 for every point
    p, i.e. (a, b, c) spans a supporting plane with outward normal
    cross(pb - pa, pc - pa).  Requires a full-dimensional point set.
    """
    pts = handle
    pa, pb = pts[a], pts[b]
    c = -1
    pc = None
    for i in range(len(pts)):
        if i == a or i == b:
            continue
        if c < 0:
            if _collinear(pa, pb, pts[i]):
                continue
            c = i
            pc = pts[i]
            continue
        if orient3d(pa, pb, pc, pts[i]) > 0:
            c = i
            pc = pts[i]
    return c


def _collinear(a, b, p) -> bool:
    ux, uy, uz = b[0] - a[0], b[1] - a[1], b[2] - a[2]
    vx, vy, vz = p[0] - a[0], p[1] - a[1], p[2] - a[2]
    return (uy * vz - uz * vy == 0
            and uz * vx - ux * vz == 0
            and ux * vy - uy * vx == 0)


def coplanar3d(handle, a, b, c):
    """All indices whose points lie on the plane through pts[a,b,c]."""
    pts = handle
    pa, pb, pc = pts[a], pts[b], pts[c]
    return [i for i in range(len(pts)) if orient3d(pa, pb, pc, pts[i]) == 0]


def prune_interior(pts, dirs):
    """Indices of points that are not obvious midpoints of neighbours.

    A point with both p+d and p-d present (d from `dirs`) is their midpoint,
    hence not extreme; dropping it is always safe.  This is a prefilter for
    hulls of dense lattice-point clouds.
    """
    pset = set(pts)
    keep = []
    for i, p in enumerate(pts):
        interior = False
        for d in dirs:
            plus = tuple(p[k] + d[k] for k in range(len(p)))
            if plus not in pset:
                continue
            minus = tuple(p[k] - d[k] for k in range(len(p)))
            if minus in pset:
                interior = True
                break
        if not interior:
            keep.append(i)
    return keep


def lattice_points(normals, offsets, lo, hi):
    """Integer points u in the box [lo, hi] with normals[j].u >= offsets[j].

    Output is in lexicographic order.  Prunes a coordinate prefix when no
    completion inside the box can satisfy some constraint.
    """
    dim = len(lo)
    m = len(normals)
    # max contribution of coordinates >= level k, per constraint
    maxrest = [[0] * (dim + 1) for _ in range(m)]
    for j in range(m):
        for k in range(dim - 1, -1, -1):
            nj = normals[j][k]
            best = nj * (hi[k] if nj > 0 else lo[k])
            maxrest[j][k] = maxrest[j][k + 1] + best
    out = []
    u = [0] * dim
    partial = [[0] * m for _ in range(dim + 1)]

    def rec(k):
        if k == dim:
            out.append(tuple(u))
            return
        base = partial[k]
        for v in range(lo[k], hi[k] + 1):
            u[k] = v
            nxt = partial[k + 1]
            ok = True
            for j in range(m):
                s = base[j] + normals[j][k] * v
                if s + maxrest[j][k + 1] < offsets[j]:
                    ok = False
                    break
                nxt[j] = s
            if ok:
                rec(k + 1)
        u[k] = lo[k]

    rec(0)
    return out
