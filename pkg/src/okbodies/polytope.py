"""Exact rational convex polytopes with dual V/H descriptions.

The vertex description is canonical (sorted tuple of coordinate tuples of
``Fraction``); the half-space description is a normalized cache computed on
demand (primitive integer normals, lexicographically sorted).  All
operations are pure and exact; floats never appear.

Empty polytopes (from infeasible half-space systems or empty slices) are
first-class values with an explicit flag rather than a sentinel.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import kernel
from .linalg import (clear_denominators_columns, dot, frac,
                     nullspace, primitive_int_vector, qvec, rank, solve,
                     vec_sub)
from .lp import recession_is_trivial

QVec = tuple[Fraction, ...]


@dataclass(frozen=True)
class HalfSpace:
    """The set {x : normal . x <= offset}."""

    normal: QVec
    offset: Fraction

    def __post_init__(self):
        if all(c == 0 for c in self.normal):
            raise ValueError("half-space normal must be nonzero")

    def violation(self, point) -> Fraction:
        return dot(self.normal, point) - self.offset

    def normalized(self) -> "HalfSpace":
        ints, mult = primitive_int_vector(self.normal)
        return HalfSpace(qvec(ints), self.offset * mult)


class Polytope:
    """Bounded rational polytope, canonically the hull of its vertices."""

    __slots__ = ("ambient_dim", "vertices", "_dim", "_hrep")

    def __init__(self, ambient_dim: int, vertices, _dim=None, _trusted=False):
        if ambient_dim < 1:
            raise ValueError("ambient dimension must be >= 1")
        if not _trusted:
            raise ValueError("use Polytope.hull / from_halfspaces / empty")
        self.ambient_dim = ambient_dim
        self.vertices = tuple(vertices)
        self._dim = _dim
        self._hrep = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def hull(points) -> "Polytope":
        """Convex hull; removes redundant points, idempotent."""
        pts = [qvec(p) for p in points]
        if not pts:
            raise ValueError("empty point set")
        n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise ValueError("points of mixed ambient dimension")
        pts = sorted(set(pts))
        extreme, d = _extreme_points(pts)
        return Polytope(n, [pts[i] for i in sorted(extreme)], _dim=d,
                        _trusted=True)

    @staticmethod
    def empty(ambient_dim: int) -> "Polytope":
        return Polytope(ambient_dim, (), _dim=None, _trusted=True)

    @staticmethod
    def point(coords) -> "Polytope":
        v = qvec(coords)
        return Polytope(len(v), (v,), _dim=0, _trusted=True)

    @staticmethod
    def from_halfspaces(halfspaces, ambient_dim: int) -> "Polytope":
        """Vertex enumeration of an intersection of half-spaces.

        The system must be bounded (raises otherwise); an infeasible system
        yields the empty polytope.
        """
        hs = list(halfspaces)
        verts = _vertex_enum(hs, ambient_dim)
        if not verts:
            return Polytope.empty(ambient_dim)
        return Polytope.hull(verts)

    # -- basic structure ---------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def dim(self) -> int:
        """Dimension of the affine hull; 0 for a point, -1 for empty."""
        if self._dim is None:
            if self.is_empty:
                self._dim = -1
            else:
                diffs = [vec_sub(v, self.vertices[0]) for v in self.vertices[1:]]
                self._dim = rank(diffs) if diffs else 0
        return self._dim

    def __eq__(self, other):
        return (isinstance(other, Polytope)
                and self.ambient_dim == other.ambient_dim
                and self.vertices == other.vertices)

    def __hash__(self):
        return hash((self.ambient_dim, self.vertices))

    def __repr__(self):
        if self.is_empty:
            return f"Polytope.empty({self.ambient_dim})"
        return (f"<Polytope dim {self.dim()} in R^{self.ambient_dim}, "
                f"{len(self.vertices)} vertices>")

    # -- H-description -----------------------------------------------------

    def to_hrep(self) -> tuple[HalfSpace, ...]:
        """Minimal normalized half-space description.

        Lower-dimensional bodies carry their affine hull as equality pairs;
        the empty polytope is encoded by a canonical contradictory pair.
        """
        if self._hrep is None:
            self._hrep = self._compute_hrep()
        return self._hrep

    def _compute_hrep(self):
        n = self.ambient_dim
        if self.is_empty:
            e1 = qvec([1] + [0] * (n - 1))
            me1 = qvec([-1] + [0] * (n - 1))
            return tuple(sorted(
                [HalfSpace(e1, Fraction(-1)), HalfSpace(me1, Fraction(0))],
                key=_hs_key))
        out = list(_facet_halfspaces(list(self.vertices)))
        return tuple(sorted((h.normalized() for h in out), key=_hs_key))

    # -- spec operations ---------------------------------------------------

    def minkowski_sum(self, other: "Polytope") -> "Polytope":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch in Minkowski sum")
        if self.is_empty or other.is_empty:
            return Polytope.empty(self.ambient_dim)
        sums = [tuple(a + b for a, b in zip(p, q))
                for p in self.vertices for q in other.vertices]
        return Polytope.hull(sums)

    __add__ = minkowski_sum

    def contains(self, other: "Polytope") -> tuple[bool, Fraction]:
        """(containment verdict, worst constraint violation).

        Margin is 0 exactly when every vertex of `other` satisfies every
        half-space of `self`.
        """
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch in containment test")
        if other.is_empty:
            return True, Fraction(0)
        margin = Fraction(0)
        for h in self.to_hrep():
            for v in other.vertices:
                viol = h.violation(v)
                if viol > margin:
                    margin = viol
        return margin == 0, margin

    def volume_in_dim(self, k: int) -> Fraction:
        """Exact k-dimensional Lebesgue volume.

        Requires k >= dim; returns 0 when dim < k.  For k == dim <
        ambient_dim the affine hull must be an axis-aligned (coordinate)
        subspace, possibly translated; skew lower-dimensional bodies are
        rejected.
        """
        if self.is_empty:
            return Fraction(0)
        d = self.dim()
        if k < d:
            raise ValueError("body exceeds requested dimension")
        if k > d:
            return Fraction(0)
        if d == 0:
            return Fraction(1)
        pts = list(self.vertices)
        if d < self.ambient_dim:
            keep = [c for c in range(self.ambient_dim)
                    if any(p[c] != pts[0][c] for p in pts)]
            if len(keep) != d:
                raise ValueError(
                    "volume_in_dim needs an axis-aligned affine hull; "
                    "got a skew %d-dimensional body in R^%d" % (d, self.ambient_dim))
            pts = [tuple(p[c] for c in keep) for p in pts]
        return _volume_full(pts, d)

    def scale(self, lam) -> "Polytope":
        """Dilation {lam * x : x in P} about the origin, lam >= 0."""
        lam = frac(lam)
        if lam < 0:
            raise ValueError("scale factor must be >= 0")
        if self.is_empty:
            return self
        if lam == 0:
            return Polytope.point([0] * self.ambient_dim)
        return Polytope(self.ambient_dim,
                        sorted(tuple(lam * c for c in v) for v in self.vertices),
                        _dim=self._dim, _trusted=True)

    def translate(self, vec) -> "Polytope":
        v = qvec(vec)
        if self.is_empty:
            return self
        return Polytope(self.ambient_dim,
                        sorted(tuple(a + b for a, b in zip(p, v))
                               for p in self.vertices),
                        _dim=self._dim, _trusted=True)

    def embed(self, zeros_before: int, zeros_after: int) -> "Polytope":
        """Pad vertices with zero coordinates before/after."""
        if zeros_before < 0 or zeros_after < 0:
            raise ValueError("padding counts must be >= 0")
        zb = (Fraction(0),) * zeros_before
        za = (Fraction(0),) * zeros_after
        n = self.ambient_dim + zeros_before + zeros_after
        if self.is_empty:
            return Polytope.empty(n)
        return Polytope(n, sorted(zb + v + za for v in self.vertices),
                        _dim=self._dim, _trusted=True)

    def slice_prefix_zero(self, k: int) -> "Polytope":
        """Intersection with {x_1 = ... = x_k = 0}, in the same ambient space."""
        if not 0 <= k <= self.ambient_dim:
            raise ValueError("slice count out of range")
        if k == 0 or self.is_empty:
            return self
        hs = list(self.to_hrep())
        for i in range(k):
            e = [Fraction(0)] * self.ambient_dim
            e[i] = Fraction(1)
            hs.append(HalfSpace(tuple(e), Fraction(0)))
            hs.append(HalfSpace(tuple(-c for c in e), Fraction(0)))
        return Polytope.from_halfspaces(hs, self.ambient_dim)

    # -- serialization -----------------------------------------------------

    def to_obj(self):
        return {"ambient_dim": self.ambient_dim,
                "vertices": [[str(c) for c in v] for v in self.vertices]}

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_obj(obj) -> "Polytope":
        n = int(obj["ambient_dim"])
        verts = obj["vertices"]
        if not verts:
            return Polytope.empty(n)
        pts = [qvec(v) for v in verts]
        if any(len(p) != n for p in pts):
            raise ValueError("vertex length does not match ambient_dim")
        return Polytope.hull(pts)

    @staticmethod
    def from_json(s: str) -> "Polytope":
        return Polytope.from_obj(json.loads(s))


def hull(points) -> Polytope:
    return Polytope.hull(points)


def _hs_key(h: HalfSpace):
    return (tuple(h.normal), h.offset)


# -- extreme points ---------------------------------------------------------


def _affine_frame(pts):
    """(d, basis row vectors, pivot columns) for the affine hull of pts."""
    p0 = pts[0]
    n = len(p0)
    basis = []
    echelon = []
    for p in pts[1:]:
        if len(basis) == n:
            break
        v = list(vec_sub(p, p0))
        w = list(v)
        for row, piv in echelon:
            if w[piv] != 0:
                f = w[piv]
                w = [a - f * b for a, b in zip(w, row)]
        piv = next((i for i, a in enumerate(w) if a != 0), None)
        if piv is not None:
            inv = Fraction(1) / w[piv]
            echelon.append(([a * inv for a in w], piv))
            basis.append(tuple(v))
    pivcols = [piv for _, piv in echelon]
    return len(basis), basis, pivcols


def _coords_map(pts, basis, pivcols):
    """Affine coordinates y(p) with y(p) . basis = p - p0, as rational tuples."""
    p0 = pts[0]
    d = len(basis)
    bjt = [[basis[i][c] for i in range(d)] for c in pivcols]  # rows indexed by pivcols
    out = []
    for p in pts:
        rhs = [p[c] - p0[c] for c in pivcols]
        y = solve(bjt, rhs)
        out.append(tuple(y))
    return out


def _extreme_points(pts):
    """Indices of extreme points among distinct rational points, plus dim."""
    if len(pts) == 1:
        return [0], 0
    d, basis, pivcols = _affine_frame(pts)
    if d == 0:
        return [0], 0
    if d == len(pts[0]):
        coords = pts  # full-dimensional: the points are their own coordinates
    else:
        coords = _coords_map(pts, basis, pivcols)
    ints, _ = clear_denominators_columns(coords)
    if d == 1:
        lo = min(range(len(ints)), key=lambda i: ints[i])
        hi = max(range(len(ints)), key=lambda i: ints[i])
        return sorted({lo, hi}), 1
    if d == 2:
        return sorted(kernel.hull2d_indices(ints)), 2
    if d == 3:
        idxmap = list(range(len(ints)))
        if len(ints) > 64:
            idxmap = kernel.prune_interior(ints, kernel.plus_minus_directions(3))
            ints = [ints[i] for i in idxmap]
        extreme, _facets = kernel.hull3d_facets(ints)
        return sorted(idxmap[i] for i in extreme), 3
    extreme = _extreme_generic(ints, d)
    return sorted(extreme), d


def _extreme_generic(ints, d):
    """Vertices in dimension >= 4 via brute-force facet enumeration."""
    if len(ints) > 48:
        raise NotImplementedError(
            "hulls of more than 48 points are only supported up to dimension 3")
    facets = _brute_facets(ints, d)
    on = {i: [] for i in range(len(ints))}
    for nrm, off, members in facets:
        for i in members:
            on[i].append(nrm)
    out = []
    for i, nrms in on.items():
        if nrms and rank(nrms) == d:
            out.append(i)
    return out


def _brute_facets(ints, d):
    """All facets of a full-dimensional integer point set in R^d.

    Returns (primitive outward normal, offset, member indices) triples.
    Exponential in the input: reserved for small sets in dimension >= 4.
    """
    facets = {}
    npts = len(ints)
    for sub in combinations(range(npts), d):
        diffs = [vec_sub(qvec(ints[i]), qvec(ints[sub[0]])) for i in sub[1:]]
        if rank(diffs) != d - 1:
            continue
        ns = nullspace(diffs)
        if len(ns) != 1:
            continue
        nrm, _ = primitive_int_vector(ns[0])
        off = sum(a * b for a, b in zip(nrm, ints[sub[0]]))
        sides = [sum(a * b for a, b in zip(nrm, p)) - off for p in ints]
        if all(s <= 0 for s in sides):
            pass
        elif all(s >= 0 for s in sides):
            nrm = tuple(-a for a in nrm)
            off = -off
            sides = [-s for s in sides]
        else:
            continue
        members = tuple(i for i, s in enumerate(sides) if s == 0)
        facets[(nrm, off)] = members
    return [(n, o, m) for (n, o), m in sorted(facets.items())]


# -- facet enumeration (H-description) --------------------------------------


def _facet_halfspaces(pts):
    """Half-spaces of conv(pts): facet inequalities plus affine-hull
    equality pairs for lower-dimensional bodies."""
    n = len(pts[0])
    p0 = pts[0]
    if len(pts) == 1:
        d, basis, pivcols = 0, [], []
    else:
        d, basis, pivcols = _affine_frame(pts)
    out = []
    # equalities cutting out the affine hull
    if d < n:
        if basis:
            hullspace = nullspace(basis)
        else:
            hullspace = [tuple(Fraction(1) if j == i else Fraction(0)
                               for j in range(n)) for i in range(n)]
        for w in hullspace:
            c = dot(w, p0)
            out.append(HalfSpace(qvec(w), c))
            out.append(HalfSpace(tuple(-x for x in w), -c))
    if d == 0:
        return out
    if d == n:
        coords = [vec_sub(p, p0) for p in pts]
        mrows = [tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))
                 for i in range(n)]
    else:
        coords = _coords_map(pts, basis, pivcols)
        # inverse coordinate map: y = M (x - p0), rows of M in ambient space
        dd = len(basis)
        bjt = [[basis[i][c] for i in range(dd)] for c in pivcols]
        minv = _invert_small(bjt)
        mrows = []
        for i in range(dd):
            row = [Fraction(0)] * n
            for k, c in enumerate(pivcols):
                row[c] = minv[i][k]
            mrows.append(tuple(row))
    ints, mults = clear_denominators_columns(coords)

    for g, c in _coord_facets(ints, d):
        gy = [frac(g[i]) * mults[i] for i in range(d)]
        normal = tuple(sum(gy[i] * mrows[i][col] for i in range(d))
                       for col in range(n))
        offset = frac(c) + dot(normal, p0)
        out.append(HalfSpace(normal, offset))
    return out


def _invert_small(rows):
    """Inverse of a small square rational matrix (rows independent)."""
    d = len(rows)
    cols = []
    for i in range(d):
        rhs = [Fraction(1) if j == i else Fraction(0) for j in range(d)]
        cols.append(solve(rows, rhs))
    # cols[i] is the i-th column of the inverse
    return [[cols[j][i] for j in range(d)] for i in range(d)]


def _coord_facets(ints, d):
    """Facet inequalities g . y <= c of a full-dimensional int point set."""
    if d == 1:
        vals = [p[0] for p in ints]
        return [((1,), max(vals)), ((-1,), -min(vals))]
    if d == 2:
        cyc = kernel.hull2d_indices(ints)
        out = []
        for i in range(len(cyc)):
            a = ints[cyc[i]]
            b = ints[cyc[(i + 1) % len(cyc)]]
            e = (b[0] - a[0], b[1] - a[1])
            nrm = (e[1], -e[0])  # outward for a CCW polygon
            out.append((nrm, nrm[0] * a[0] + nrm[1] * a[1]))
        return out
    if d == 3:
        idxmap = list(range(len(ints)))
        if len(ints) > 64:
            idxmap = kernel.prune_interior(ints, kernel.plus_minus_directions(3))
            ints = [ints[i] for i in idxmap]
        _, facets = kernel.hull3d_facets(ints)
        return [(nrm, off) for nrm, off, _poly in facets]
    return [(nrm, off) for nrm, off, _m in _brute_facets(ints, d)]


# -- vertex enumeration (H -> V) ---------------------------------------------


def _vertex_enum(halfspaces, n):
    """Vertices of the intersection of half-spaces (must be bounded)."""
    rows = [list(h.normal) for h in halfspaces]
    offs = [h.offset for h in halfspaces]
    if not recession_is_trivial(rows, n):
        raise ValueError("half-space system is unbounded")
    verts = set()
    m = len(rows)
    for sub in combinations(range(m), n):
        mat = [rows[i] for i in sub]
        rhs = [offs[i] for i in sub]
        x = solve(mat, rhs)
        if x is None:
            continue
        if all(dot(rows[i], x) <= offs[i] for i in range(m)):
            verts.add(tuple(x))
    return sorted(verts)


# -- exact volume ------------------------------------------------------------


def _volume_full(pts, d):
    """Volume of a full-dimensional rational point set in R^d."""
    ints, mults = clear_denominators_columns(pts)
    denom = Fraction(1)
    for mx in mults:
        denom *= mx
    return _int_volume(ints, d) / denom


def _int_volume(ints, d):
    if d == 1:
        vals = [p[0] for p in ints]
        return Fraction(max(vals) - min(vals))
    if d == 2:
        cyc = kernel.hull2d_indices(ints)
        s = 0
        for i in range(len(cyc)):
            a = ints[cyc[i]]
            b = ints[cyc[(i + 1) % len(cyc)]]
            s += a[0] * b[1] - a[1] * b[0]
        return Fraction(abs(s), 2)
    if d == 3:
        idxmap = list(range(len(ints)))
        if len(ints) > 64:
            idxmap = kernel.prune_interior(ints, kernel.plus_minus_directions(3))
            ints = [ints[i] for i in idxmap]
        _, facets = kernel.hull3d_facets(ints)
        v0 = min(range(len(ints)), key=lambda i: ints[i])
        p0 = ints[v0]
        total = 0
        for _nrm, _off, poly in facets:
            if v0 in poly:
                continue
            for i in range(1, len(poly) - 1):
                a, b, c = ints[poly[0]], ints[poly[i]], ints[poly[i + 1]]
                total += -_orient3(a, b, c, p0)
        if total < 0:
            raise AssertionError("inconsistent facet orientation in volume")
        return Fraction(total, 6)
    raise NotImplementedError("exact volume is implemented up to dimension 3")


def _orient3(a, b, c, d):
    ux, uy, uz = b[0] - a[0], b[1] - a[1], b[2] - a[2]
    vx, vy, vz = c[0] - a[0], c[1] - a[1], c[2] - a[2]
    wx, wy, wz = d[0] - a[0], d[1] - a[1], d[2] - a[2]
    return (ux * (vy * wz - vz * wy) - uy * (vx * wz - vz * wx)
            + uz * (vx * wy - vy * wx))
