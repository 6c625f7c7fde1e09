"""Abstract smooth projective surfaces given by Neron-Severi data.

A model declares its intersection form, finitely many generators of the
pseudoeffective and nef cones, its negative curves, and the canonical
class; the engine validates internal consistency (Hodge index sign
pattern, nef/effective pairings) but cannot certify the declarations
against actual geometry.

Bodies for a flag (C, x) with x general on C come out of the Zariski
decomposition of D - tC: the lower boundary is 0 (general point), the
upper boundary is the piecewise-linear t -> P(D - tC).C, and t ranges
from the multiplicity of C in the negative part of D up to the boundary
of the pseudoeffective cone.  The chamber sweep is exact: a fixed
negative-part support is certified on a whole interval by checking its
finitely many affine validity conditions at the endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import lp
from .linalg import frac, qvec, signature, solve
from .polytope import Polytope

_MAX_SWEEP = 256
_MAX_RETRY = 10


class ConeDataError(ValueError):
    """Declared cone data cannot support the requested computation."""


def class_key(cls) -> str:
    return ",".join(str(frac(c)) for c in cls)


@dataclass(frozen=True)
class SurfaceLattice:
    rank: int
    gram: tuple[tuple[int, ...], ...]
    effective_generators: tuple[tuple[Fraction, ...], ...]
    nef_generators: tuple[tuple[Fraction, ...], ...]
    negative_curves: tuple[int, ...]  # indices into effective_generators
    canonical_class: tuple[Fraction, ...]
    abundance: dict | None = None      # {"iitaka_degree_on": {gen index: int}}
    declared_kappa: dict | None = None  # {class_key: int}
    declared_kappa_sigma: dict | None = None

    def __post_init__(self):
        r = self.rank
        if len(self.gram) != r or any(len(row) != r for row in self.gram):
            raise ValueError("gram must be rank x rank")
        for i in range(r):
            for j in range(r):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("gram must be symmetric")
        pos, neg, zero = signature(self.gram)
        if (pos, neg, zero) != (1, r - 1, 0):
            raise ValueError("intersection form must have signature (1, rank-1)")
        for v in (*self.effective_generators, *self.nef_generators,
                  self.canonical_class):
            if len(v) != r:
                raise ValueError("class vectors must have length rank")
        for nf in self.nef_generators:
            for g in self.effective_generators:
                if self.pair(nf, g) < 0:
                    raise ValueError("a nef generator pairs negatively with "
                                     "an effective generator")
        for i in self.negative_curves:
            if not 0 <= i < len(self.effective_generators):
                raise ValueError("negative curve index out of range")
            c = self.effective_generators[i]
            if self.pair(c, c) >= 0:
                raise ValueError("declared negative curve has self-intersection >= 0")

    def pair(self, a, b) -> Fraction:
        a = qvec(a)
        b = qvec(b)
        return sum((a[i] * self.gram[i][j] * b[j]
                    for i in range(self.rank) for j in range(self.rank)),
                   Fraction(0))

    def kappa_declared(self, cls):
        if self.declared_kappa is None:
            return None
        return self.declared_kappa.get(class_key(cls))

    def kappa_sigma_declared(self, cls):
        if self.declared_kappa_sigma is None:
            return None
        return self.declared_kappa_sigma.get(class_key(cls))

    def to_obj(self):
        obj = {
            "kind": "surface",
            "rank": self.rank,
            "gram": [list(row) for row in self.gram],
            "effective_generators": [[str(c) for c in g]
                                     for g in self.effective_generators],
            "nef_generators": [[str(c) for c in g] for g in self.nef_generators],
            "negative_curves": list(self.negative_curves),
            "canonical_class": [str(c) for c in self.canonical_class],
        }
        if self.abundance is not None:
            deg = self.abundance.get("iitaka_degree_on", {})
            obj["abundance"] = {"iitaka_degree_on":
                                {str(k): v for k, v in sorted(deg.items())}}
        if self.declared_kappa is not None:
            obj["declared_kappa"] = dict(sorted(self.declared_kappa.items()))
        if self.declared_kappa_sigma is not None:
            obj["declared_kappa_sigma"] = dict(
                sorted(self.declared_kappa_sigma.items()))
        return obj


def intersect(S: SurfaceLattice, a, b) -> Fraction:
    if len(a) != S.rank or len(b) != S.rank:
        raise ValueError("class vectors must have length rank")
    return S.pair(a, b)


@dataclass(frozen=True)
class ZariskiPair:
    positive: tuple[Fraction, ...]
    negative: tuple[Fraction, ...]
    support: tuple[int, ...]            # indices into effective_generators
    coefficients: tuple[Fraction, ...]  # of the support curves in N

    def coefficient_of(self, gen_index: int) -> Fraction:
        for i, c in zip(self.support, self.coefficients):
            if i == gen_index:
                return c
        return Fraction(0)


# -- cone membership ----------------------------------------------------------


def is_psef(S: SurfaceLattice, D) -> bool:
    return lp.nonneg_combination(S.effective_generators, qvec(D)) is not None


def is_nef(S: SurfaceLattice, D) -> bool:
    return all(S.pair(D, g) >= 0 for g in S.effective_generators)


def is_ample(S: SurfaceLattice, D) -> bool:
    return (all(S.pair(D, g) > 0 for g in S.effective_generators)
            and S.pair(D, D) > 0)


def cone_tests(S: SurfaceLattice, D) -> dict:
    D = qvec(D)
    psef = is_psef(S, D)
    big = False
    if psef:
        zp = zariski_decompose(S, D)
        big = S.pair(zp.positive, zp.positive) > 0
    return {"is_psef": psef, "is_nef": is_nef(S, D), "is_big": big,
            "is_ample": is_ample(S, D)}


def some_ample(S: SurfaceLattice):
    """A convenient ample class; declared cones always admit one here."""
    candidates = []
    if S.nef_generators:
        candidates.append(tuple(sum(col, Fraction(0))
                                for col in zip(*S.nef_generators)))
    candidates.append(tuple(sum(col, Fraction(0))
                            for col in zip(*S.effective_generators)))
    for cand in candidates:
        if is_ample(S, cand):
            return qvec(cand)
    raise ConeDataError("declared cones admit no visible ample class")


# -- Zariski decomposition ----------------------------------------------------


def zariski_decompose(S: SurfaceLattice, D) -> ZariskiPair:
    """Iterative negative-part construction.

    Start from the negative curves D meets negatively, solve the exact
    linear system N.C_i = D.C_i on the support, and enlarge the support
    with any negative curve the residual still meets negatively.
    """
    D = qvec(D)
    if not is_psef(S, D):
        raise ValueError("divisor is not pseudoeffective")
    support = sorted(i for i in S.negative_curves
                     if S.pair(D, S.effective_generators[i]) < 0)
    while True:
        coeffs = _support_solve(S, D, support)
        N = _combo(S, support, coeffs)
        P = tuple(d - n for d, n in zip(D, N))
        extra = [i for i in S.negative_curves
                 if i not in support and S.pair(P, S.effective_generators[i]) < 0]
        if not extra:
            break
        support = sorted(support + extra)
    if any(c < 0 for c in coeffs):
        raise ConeDataError("cone data incomplete: negative part has a "
                            "negative coefficient")
    if not is_nef(S, P):
        raise ConeDataError("cone data incomplete: residual part is not nef")
    return ZariskiPair(P, N, tuple(support), tuple(coeffs))


def _support_solve(S, D, support):
    if not support:
        return []
    curves = [S.effective_generators[i] for i in support]
    gram = [[S.pair(a, b) for b in curves] for a in curves]
    pos, neg, zero = signature(gram)
    if (pos, zero) != (0, 0):
        raise ConeDataError("cone data incomplete: support curves are not "
                            "negative definite")
    rhs = [S.pair(D, c) for c in curves]
    return list(solve(gram, rhs))


def _combo(S, indices, coeffs):
    out = [Fraction(0)] * S.rank
    for i, c in zip(indices, coeffs):
        g = S.effective_generators[i]
        for k in range(S.rank):
            out[k] += c * g[k]
    return tuple(out)


def volume_surface(S: SurfaceLattice, D) -> Fraction:
    """Self-intersection of the Zariski positive part (0 off the cone)."""
    D = qvec(D)
    if not is_psef(S, D):
        return Fraction(0)
    zp = zariski_decompose(S, D)
    return S.pair(zp.positive, zp.positive)


# -- bodies -------------------------------------------------------------------


def psef_threshold(S: SurfaceLattice, D, C) -> Fraction:
    """sup{t >= 0 : D - tC pseudoeffective}, exact."""
    status, t = lp.max_cone_shift(S.effective_generators, qvec(C), qvec(D))
    if status == lp.INFEASIBLE:
        raise ValueError("divisor is not pseudoeffective")
    if status == lp.UNBOUNDED:
        raise ConeDataError("D - tC never leaves the declared cone")
    return t


def _fixed_support_affine(S, D, C, support):
    """beta and validity data for a fixed negative-part support.

    Returns (beta, conds): beta(t) = P(D - tC).C as (const, slope); conds
    is a list of affine (const, slope) functions whose nonnegativity on an
    interval certifies that `support` is the true Zariski support there.
    """
    D = qvec(D)
    C = qvec(C)
    curves = [S.effective_generators[i] for i in support]
    if support:
        gram = [[S.pair(a, b) for b in curves] for a in curves]
        x0 = solve(gram, [S.pair(D, c) for c in curves])
        x1 = solve(gram, [-S.pair(C, c) for c in curves])
    else:
        x0 = x1 = []
    n0 = _combo(S, support, x0)
    n1 = _combo(S, support, x1)
    p0 = tuple(d - n for d, n in zip(D, n0))  # P(t) = p0 + t*p1
    p1 = tuple(-c - n for c, n in zip(C, n1))
    conds = []
    for a, b in zip(x0, x1):
        conds.append((a, b))  # support coefficients stay >= 0
    for g in S.effective_generators:
        conds.append((S.pair(p0, g), S.pair(p1, g)))  # P stays nef
    beta = (S.pair(p0, C), S.pair(p1, C))
    return beta, conds


def _cond_window(conds, probe):
    """Largest interval [lo, hi] around `probe` where all conditions hold."""
    lo, hi = None, None
    for a, b in conds:
        if b == 0:
            if a < 0:
                return None
            continue
        root = Fraction(-a, b)
        if b > 0:  # holds for t >= root
            lo = root if lo is None or root > lo else lo
        else:      # holds for t <= root
            hi = root if hi is None or root < hi else hi
    if (lo is not None and lo > probe) or (hi is not None and hi < probe):
        return None
    return lo, hi


def _beta_breakpoints(S, D, C, lo, hi):
    """[(t, beta(t))] at every chamber breakpoint of [lo, hi], exact."""
    pts = []
    t = lo
    for _ in range(_MAX_SWEEP):
        sup = zariski_decompose(S, _shift(D, C, t)).support
        beta, conds = _fixed_support_affine(S, D, C, sup)
        win = _cond_window(conds, t)
        t_end = hi if win is None or win[1] is None else min(win[1], hi)
        if win is None or t_end <= t:
            t_end, beta = _probe_forward(S, D, C, t, hi)
        pts.append((t, beta[0] + beta[1] * t))
        pts.append((t_end, beta[0] + beta[1] * t_end))
        if t_end >= hi:
            return pts
        t = t_end
    raise ConeDataError("chamber sweep did not terminate")


def _probe_forward(S, D, C, t, hi):
    """First chamber strictly after t: (its end, its beta)."""
    probe = (t + hi) / 2
    for _ in range(_MAX_SWEEP):
        sup = zariski_decompose(S, _shift(D, C, probe)).support
        beta, conds = _fixed_support_affine(S, D, C, sup)
        win = _cond_window(conds, probe)
        if win is not None and (win[0] is None or win[0] <= t):
            t_end = hi if win[1] is None else min(win[1], hi)
            if t_end > t:
                return t_end, beta
        probe = (t + probe) / 2
    raise ConeDataError("chamber sweep did not terminate near t=%s" % t)


def _shift(D, C, t):
    return tuple(d - t * c for d, c in zip(qvec(D), qvec(C)))


def okounkov_body_surface(S: SurfaceLattice, D, flag_curve: int) -> Polytope:
    """Body of a pseudoeffective class for the flag (C, general x on C).

    Coordinates: t = order along C, y = order at x of the restriction.
    The lower boundary is 0 since x is general; t starts at the
    multiplicity of C in the negative part of D (smaller orders along C
    are not attained by effective classes) and ends at the cone boundary.
    For big D this is the body of the honest sections; for psef non-big D
    it is the limiting body.
    """
    D = qvec(D)
    if not is_psef(S, D):
        raise ValueError("divisor is not pseudoeffective")
    C = S.effective_generators[flag_curve]
    zp = zariski_decompose(S, D)
    a = zp.coefficient_of(flag_curve)
    mu = psef_threshold(S, D, C)
    if a == mu:
        beta, _ = _fixed_support_affine(
            S, D, C, zariski_decompose(S, _shift(D, C, mu)).support)
        top = beta[0] + beta[1] * mu
        return Polytope.hull([(mu, Fraction(0)), (mu, top)])
    pts = _beta_breakpoints(S, D, C, a, mu)
    verts = [(a, Fraction(0)), (mu, Fraction(0))] + [(t, y) for t, y in pts]
    return Polytope.hull(verts)


def limiting_body_surface(S: SurfaceLattice, D, flag_curve: int, A,
                          eps0=Fraction(1, 64)) -> Polytope:
    """Common limit of the bodies of D + eps*A as eps -> 0.

    Two small eps give a vertexwise linear extrapolation to 0; a third eps
    and the direct body of D must reproduce it exactly, otherwise the body
    may straddle a chamber wall and all eps are halved (up to 10 times).
    """
    D = qvec(D)
    A = qvec(A)
    if not is_psef(S, D):
        raise ValueError("divisor is not pseudoeffective")
    if not is_ample(S, A):
        raise ValueError("perturbation class must be ample")
    direct = okounkov_body_surface(S, D, flag_curve)
    eps = frac(eps0)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    for _ in range(_MAX_RETRY):
        bodies = [okounkov_body_surface(S, tuple(d + e * a for d, a in zip(D, A)),
                                        flag_curve)
                  for e in (eps, eps / 2, eps / 4)]
        e01 = _extrapolate(bodies[0], bodies[1], eps, eps / 2)
        e12 = _extrapolate(bodies[1], bodies[2], eps / 2, eps / 4)
        if e01 is not None and e01 == e12 and e01 == direct:
            return e01
        eps /= 2
    raise ValueError("chamber crossing: decrease epsilon")


def _extrapolate(body1, body2, e1, e2):
    if len(body1.vertices) != len(body2.vertices):
        return None
    f = e2 / (e1 - e2)
    verts = []
    for v1, v2 in zip(body1.vertices, body2.vertices):
        verts.append(tuple(b + (b - a) * f for a, b in zip(v1, v2)))
    return Polytope.hull(verts)


# -- numerical dimensions -----------------------------------------------------


def numerical_dims_surface(S: SurfaceLattice, D, A) -> dict:
    """nu and kappa_vol of a pseudoeffective class.

    Classified by the Zariski positive part and cross-checked against the
    exact growth of vol(D + eps*A) in eps (quadratic fit through three
    samples inside one chamber).
    """
    D = qvec(D)
    A = qvec(A)
    if not is_psef(S, D):
        raise ValueError("divisor is not pseudoeffective")
    if not is_ample(S, A):
        raise ValueError("perturbation class must be ample")
    zp = zariski_decompose(S, D)
    p2 = S.pair(zp.positive, zp.positive)
    if p2 > 0:
        k = 2
    elif any(c != 0 for c in zp.positive):
        k = 1
    else:
        k = 0
    base = Fraction(1, 8)
    for _ in range(_MAX_RETRY):
        eps = (base, base / 2, base / 4)
        vols = [volume_surface(S, tuple(d + e * a for d, a in zip(D, A)))
                for e in eps]
        a0, a1, a2 = _quadratic_fit(eps, vols)
        if a0 == p2:
            fitted = 2 if a0 > 0 else (1 if a1 > 0 else 0)
            if fitted != k:
                raise ConeDataError("volume growth contradicts the Zariski "
                                    "classification")
            return {"nu_bdpp": k, "kappa_vol": k}
        base /= 2
    raise ConeDataError("volume samples never stabilized in one chamber")


def _quadratic_fit(xs, ys):
    rows = [[Fraction(1), x, x * x] for x in xs]
    return solve(rows, list(ys))


def valuative_body_abundant(S: SurfaceLattice, D, flag_curve: int) -> Polytope:
    """Body of honest sections of a canonical-type class, via the declared
    degree of the Iitaka map on the flag curve: (1/deg) * limiting body."""
    D = qvec(D)
    if S.abundance is None:
        raise ValueError("valuative body undeterminable from numerical data")
    degrees = S.abundance.get("iitaka_degree_on", {})
    if flag_curve not in degrees:
        raise ValueError("valuative body undeterminable from numerical data")
    alpha = degrees[flag_curve]
    if alpha < 1:
        raise ValueError("Iitaka-map degree must be a positive integer")
    if not _proportional(D, S.canonical_class):
        raise ValueError("abundance declaration only covers canonical-type "
                         "classes")
    body = limiting_body_surface(S, D, flag_curve, some_ample(S))
    return body.scale(Fraction(1, alpha))


def _proportional(D, K):
    if all(c == 0 for c in D) or all(c == 0 for c in K):
        return all(c == 0 for c in D)
    ratio = None
    for d, k in zip(D, K):
        if k == 0:
            if d != 0:
                return False
            continue
        r = frac(d) / frac(k)
        if ratio is None:
            ratio = r
        elif r != ratio:
            return False
    return ratio is not None and ratio > 0


# -- augmented restricted volumes --------------------------------------------


def restricted_volume_plus(S: SurfaceLattice, D, stratum_dim: int,
                           flag_curve: int | None = None) -> Fraction:
    """vol+ of D along a flag stratum (the surface, the flag curve, or the
    flag point), via Zariski continuity."""
    D = qvec(D)
    if not is_psef(S, D):
        raise ValueError("divisor is not pseudoeffective")
    if stratum_dim == 2:
        return volume_surface(S, D)
    if stratum_dim == 1:
        if flag_curve is None:
            raise ValueError("curve stratum needs the flag curve index")
        zp = zariski_decompose(S, D)
        return S.pair(zp.positive, S.effective_generators[flag_curve])
    if stratum_dim == 0:
        return Fraction(1)
    raise ValueError("stratum dimension out of range")
