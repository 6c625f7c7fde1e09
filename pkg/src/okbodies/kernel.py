"""Kernel lane selection and the 3D hull driver.

The compiled extension (`okbodies._speedups`, built from Cython) and the
pure-Python module (`okbodies._kernel_py`) implement identical primitives
on integer coordinates.  The compiled lane runs on C int64, so every entry
point here guards coordinate magnitudes and falls back to the pure lane
when a computation could overflow; results are identical either way.

Set OKBODIES_KERNEL=python (or =compiled) to force a lane.
"""

from __future__ import annotations

import os
from collections import deque
from math import gcd

from . import _kernel_py as _py

try:
    from . import _speedups as _fast
except ImportError:  # extension not built
    _fast = None

_FORCED = os.environ.get("OKBODIES_KERNEL", "auto")
if _FORCED == "compiled" and _fast is None:
    raise ImportError("OKBODIES_KERNEL=compiled but okbodies._speedups is not built")

# int64 safety bounds (orient3d grows like 48*M^3, orient2d like 8*M^2)
MAX3 = 200_000
MAX2 = 100_000_000


def _lane(use_fast: bool):
    if _FORCED == "python":
        return _py
    if _fast is None:
        return _py
    return _fast if use_fast else _py


def active_lane() -> str:
    return _lane(True).LANE


def hull2d_indices(pts):
    m = max((max(abs(x), abs(y)) for x, y in pts), default=0)
    return _lane(m <= MAX2).hull2d_indices(pts)


def prune_interior(pts, dirs):
    m = max((max(abs(c) for c in p) for p in pts), default=0)
    return _lane(m < 2**62).prune_interior(pts, dirs)


def lattice_points(normals, offsets, lo, hi):
    box = max([abs(v) for v in list(lo) + list(hi)], default=0)
    norm = max((sum(abs(c) for c in n) for n in normals), default=0)
    off = max((abs(o) for o in offsets), default=0)
    ok = norm * box < 10**17 and off < 10**17
    return _lane(ok).lattice_points(
        [tuple(n) for n in normals], list(offsets), list(lo), list(hi)
    )


def plus_minus_directions(dim):
    """Nonzero {-1,0,1} vectors up to sign, for the interior-point prefilter."""
    dirs = []

    def rec(prefix):
        if len(prefix) == dim:
            if any(prefix):
                dirs.append(tuple(prefix))
            return
        first = next((x for x in prefix if x), 0)
        for v in ((0, 1) if first == 0 else (-1, 0, 1)):
            rec(prefix + [v])

    rec([])
    return dirs


_DIRS3 = plus_minus_directions(3)


def _primitive(vec):
    g = 0
    for x in vec:
        g = gcd(g, abs(x))
    return tuple(x // g for x in vec) if g else tuple(vec)


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def _initial_edge(pts, lane, handle):
    """An edge of the 3D hull: wrap the xy-shadow, then wrap inside the
    vertical support plane it determines."""
    i0 = min(range(len(pts)), key=lambda i: pts[i])
    p0 = pts[i0]
    c = -1
    for i, p in enumerate(pts):
        if (p[0], p[1]) == (p0[0], p0[1]):
            continue
        if c < 0:
            c = i
        elif _py.orient2d(p0, pts[c], p) < 0:
            c = i
    if c < 0:
        raise ValueError("point set is vertical; not full-dimensional")
    d2 = (pts[c][0] - p0[0], pts[c][1] - p0[1])
    in_plane = [i for i, p in enumerate(pts)
                if _py.orient2d(p0, pts[c], p) == 0]
    # 2D hull inside the vertical plane; coordinates (along-line, z)
    coords = [((pts[i][0] - p0[0]) * d2[0] + (pts[i][1] - p0[1]) * d2[1],
               pts[i][2]) for i in in_plane]
    sub = _py.hull2d_indices(coords)
    return in_plane[sub[0]], in_plane[sub[1]]


def hull3d_facets(pts):
    """Facets of the hull of a full-dimensional set of distinct int triples.

    Returns (extreme_indices, facets); each facet is (outward primitive
    integer normal, integer offset, vertex indices CCW seen from outside).
    Gift wrapping with exact predicates; the O(n) pivot passes run in the
    selected kernel lane.
    """
    maxc = max(max(abs(c) for c in p) for p in pts)
    lane = _lane(maxc <= MAX3)
    handle = lane.prepare3(pts)

    e0 = _initial_edge(pts, lane, handle)
    queue = deque([e0, (e0[1], e0[0])])
    edge_facet = {}
    facet_key_to_id = {}
    facets = []

    while queue:
        a, b = queue.popleft()
        if (a, b) in edge_facet:
            continue
        c = lane.pivot3d(handle, a, b)
        pa, pb, pc = pts[a], pts[b], pts[c]
        n = _cross((pb[0] - pa[0], pb[1] - pa[1], pb[2] - pa[2]),
                   (pc[0] - pa[0], pc[1] - pa[1], pc[2] - pa[2]))
        n = _primitive(n)
        off = n[0] * pa[0] + n[1] * pa[1] + n[2] * pa[2]
        key = (n, off)
        if key in facet_key_to_id:
            poly = facets[facet_key_to_id[key]][2]
        else:
            cop = lane.coplanar3d(handle, a, b, c)
            poly = _facet_polygon(pts, cop, n)
            facet_key_to_id[key] = len(facets)
            facets.append((n, off, poly))
        k = len(poly)
        directed = {(poly[i], poly[(i + 1) % k]) for i in range(k)}
        if (a, b) not in directed:
            raise AssertionError("wrap invariant broken: edge not on facet")
        for i in range(k):
            u, v = poly[i], poly[(i + 1) % k]
            edge_facet[(u, v)] = facet_key_to_id[key]
            if (v, u) not in edge_facet:
                queue.append((v, u))

    extreme = sorted({v for _, _, poly in facets for v in poly})
    return extreme, facets


def _facet_polygon(pts, cop, n):
    """Order the coplanar points of one facet CCW w.r.t. the outward normal
    n, dropping non-corners.  Returns original indices."""
    k = max(range(3), key=lambda i: abs(n[i]))
    i1, j1 = [(1, 2), (2, 0), (0, 1)][k]  # (i1, j1, k) is an even permutation
    proj = [(pts[i][i1], pts[i][j1]) for i in cop]
    sub = _py.hull2d_indices(proj)
    poly = [cop[s] for s in sub]
    if n[k] < 0:
        poly.reverse()
    return poly
