# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled twin of okbodies._kernel_py (same signatures, int64 arithmetic).

Callers guarantee coordinate magnitudes small enough that no intermediate
overflows int64 (see okbodies.kernel for the bounds); under that contract
the two lanes return identical results.
"""

import array

from cpython cimport array

LANE = "compiled"


cdef inline long long _or2(long long ax, long long ay,
                           long long bx, long long by,
                           long long cx, long long cy) nogil:
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


cdef inline long long _or3(const long long* p, int a, int b, int c, int d) nogil:
    cdef long long ux = p[3*b] - p[3*a], uy = p[3*b+1] - p[3*a+1], uz = p[3*b+2] - p[3*a+2]
    cdef long long vx = p[3*c] - p[3*a], vy = p[3*c+1] - p[3*a+1], vz = p[3*c+2] - p[3*a+2]
    cdef long long wx = p[3*d] - p[3*a], wy = p[3*d+1] - p[3*a+1], wz = p[3*d+2] - p[3*a+2]
    return (ux * (vy * wz - vz * wy)
            - uy * (vx * wz - vz * wx)
            + uz * (vx * wy - vy * wx))


def orient2d(a, b, c):
    return _or2(a[0], a[1], b[0], b[1], c[0], c[1])


def orient3d(a, b, c, d):
    cdef array.array buf = array.array('q')
    for p in (a, b, c, d):
        buf.append(p[0]); buf.append(p[1]); buf.append(p[2])
    return _or3(buf.data.as_longlongs, 0, 1, 2, 3)


def hull2d_indices(pts):
    cdef int n = len(pts)
    idx = sorted(range(n), key=lambda i: pts[i])
    if n <= 2:
        return idx
    cdef array.array xs = array.array('q')
    cdef array.array ys = array.array('q')
    for p in pts:
        xs.append(p[0]); ys.append(p[1])
    cdef long long* X = xs.data.as_longlongs
    cdef long long* Y = ys.data.as_longlongs
    cdef list lower = []
    cdef list upper = []
    cdef int i, a, b
    cdef Py_ssize_t k
    for i in idx:
        k = len(lower)
        while k >= 2:
            a = lower[k - 2]; b = lower[k - 1]
            if _or2(X[a], Y[a], X[b], Y[b], X[i], Y[i]) <= 0:
                lower.pop()
                k -= 1
            else:
                break
        lower.append(i)
    for i in reversed(idx):
        k = len(upper)
        while k >= 2:
            a = upper[k - 2]; b = upper[k - 1]
            if _or2(X[a], Y[a], X[b], Y[b], X[i], Y[i]) <= 0:
                upper.pop()
                k -= 1
            else:
                break
        upper.append(i)
    hull = lower[:len(lower) - 1] + upper[:len(upper) - 1]
    if len(hull) == 1:
        hull = [idx[0], idx[len(idx) - 1]]
    return hull


def prepare3(pts):
    cdef array.array buf = array.array('q')
    for p in pts:
        buf.append(p[0]); buf.append(p[1]); buf.append(p[2])
    return buf


def pivot3d(handle, int a, int b):
    cdef array.array buf = handle
    cdef const long long* p = buf.data.as_longlongs
    cdef int n = len(buf) // 3
    cdef int c = -1
    cdef int i
    cdef long long cx, cy, cz
    for i in range(n):
        if i == a or i == b:
            continue
        if c < 0:
            cx = (p[3*b+1]-p[3*a+1])*(p[3*i+2]-p[3*a+2]) - (p[3*b+2]-p[3*a+2])*(p[3*i+1]-p[3*a+1])
            cy = (p[3*b+2]-p[3*a+2])*(p[3*i]-p[3*a]) - (p[3*b]-p[3*a])*(p[3*i+2]-p[3*a+2])
            cz = (p[3*b]-p[3*a])*(p[3*i+1]-p[3*a+1]) - (p[3*b+1]-p[3*a+1])*(p[3*i]-p[3*a])
            if cx == 0 and cy == 0 and cz == 0:
                continue
            c = i
            continue
        if _or3(p, a, b, c, i) > 0:
            c = i
    return c


def coplanar3d(handle, int a, int b, int c):
    cdef array.array buf = handle
    cdef const long long* p = buf.data.as_longlongs
    cdef int n = len(buf) // 3
    cdef list out = []
    cdef int i
    for i in range(n):
        if _or3(p, a, b, c, i) == 0:
            out.append(i)
    return out


def prune_interior(pts, dirs):
    cdef set pset = set(pts)
    cdef list keep = []
    cdef int i, k, dim
    cdef bint interior
    dim = len(pts[0]) if pts else 0
    for i in range(len(pts)):
        p = pts[i]
        interior = False
        for d in dirs:
            plus = tuple([p[k] + d[k] for k in range(dim)])
            if plus not in pset:
                continue
            minus = tuple([p[k] - d[k] for k in range(dim)])
            if minus in pset:
                interior = True
                break
        if not interior:
            keep.append(i)
    return keep


def lattice_points(normals, offsets, lo, hi):
    cdef int dim = len(lo)
    cdef int m = len(normals)
    cdef array.array narr = array.array('q')
    for nv in normals:
        for x in nv:
            narr.append(x)
    cdef array.array oarr = array.array('q', list(offsets))
    cdef array.array loarr = array.array('q', list(lo))
    cdef array.array hiarr = array.array('q', list(hi))
    cdef const long long* N = narr.data.as_longlongs
    cdef const long long* O = oarr.data.as_longlongs
    cdef const long long* L = loarr.data.as_longlongs
    cdef const long long* H = hiarr.data.as_longlongs

    # max contribution of coordinates >= level k, per constraint
    cdef array.array mrarr = array.array('q', [0] * (m * (dim + 1)))
    cdef long long* MR = mrarr.data.as_longlongs
    cdef int j, k
    cdef long long nj
    for j in range(m):
        MR[j * (dim + 1) + dim] = 0
        for k in range(dim - 1, -1, -1):
            nj = N[j * dim + k]
            MR[j * (dim + 1) + k] = MR[j * (dim + 1) + k + 1] + (
                nj * H[k] if nj > 0 else nj * L[k])

    cdef array.array uarr = array.array('q', [0] * dim)
    cdef long long* U = uarr.data.as_longlongs
    cdef array.array parr = array.array('q', [0] * ((dim + 1) * m))
    cdef long long* P = parr.data.as_longlongs
    cdef list out = []

    cdef int level = 0
    cdef bint descend = True
    cdef long long v, s
    cdef bint ok
    for k in range(dim):
        U[k] = L[k] - 1
    while level >= 0:
        if level == dim:
            out.append(tuple([U[k] for k in range(dim)]))
            level -= 1
            continue
        U[level] += 1
        if U[level] > H[level]:
            U[level] = L[level] - 1
            level -= 1
            continue
        v = U[level]
        ok = True
        for j in range(m):
            s = P[level * m + j] + N[j * dim + level] * v
            if s + MR[j * (dim + 1) + level + 1] < O[j]:
                ok = False
                break
            P[(level + 1) * m + j] = s
        if ok:
            level += 1
    return out
