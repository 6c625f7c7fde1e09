"""Model-agnostic layer: bodies, Iitaka-type dimensions, restricted
volumes, and the subvariety predicates, dispatching to the toric, surface,
or curve backend.

A backend wraps one variety model and exposes the capabilities the
fiber-space checks need; flags and strata are backend-specific (an ordered
invariant flag for toric models, a flag-curve index for surfaces, nothing
for curves, where the flag is always (curve, general point)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import curve as curvemod
from . import surface as surfmod
from . import toric as toricmod
from .linalg import frac, qvec, solve
from .polytope import Polytope
from .toric import NEG_INF

UNDECLARED = "undeclared"


@dataclass(frozen=True)
class DimsReport:
    """kappa / nu / kappa_vol / kappa_sigma of one divisor class.

    kappa and kappa_sigma may be undeclared (None): they are not numerical
    invariants and are never guessed on abstract surfaces.
    """

    kappa: object   # int, NEG_INF, or None for undeclared
    nu_bdpp: int
    kappa_vol: int
    kappa_sigma: object  # int or None

    def __post_init__(self):
        chain = []
        if self.kappa is not None:
            chain.append(self.kappa)
        chain.append(self.nu_bdpp)
        chain.append(self.kappa_vol)
        for lo, hi in zip(chain, chain[1:]):
            if lo > hi:
                raise ValueError("dimension chain violated: %r" % (self,))
        if self.kappa_sigma is not None and self.nu_bdpp > self.kappa_sigma:
            raise ValueError("nu exceeds declared kappa_sigma: %r" % (self,))

    def to_obj(self):
        def enc(v):
            if v is None:
                return UNDECLARED
            if v == NEG_INF:
                return "-infinity"
            return v

        return {"kappa": enc(self.kappa), "nu_bdpp": self.nu_bdpp,
                "kappa_vol": self.kappa_vol,
                "kappa_sigma": enc(self.kappa_sigma)}


# -- toric backend ------------------------------------------------------------


class ToricBackend:
    kind = "toric"

    def __init__(self, X: toricmod.ToricVariety):
        self.X = X

    @property
    def dim(self):
        return self.X.dim

    def _div(self, cls) -> toricmod.ToricDivisor:
        return toricmod.ToricDivisor(self.X, qvec(cls))

    def is_effective(self, cls):
        return toricmod.is_effective(self.X, self._div(cls))

    is_psef = is_effective  # invariant classes: effective iff psef

    def is_big(self, cls):
        return toricmod.is_big(self.X, self._div(cls))

    def is_ample(self, cls):
        return toricmod.is_ample(self.X, self._div(cls))

    def body_val(self, cls, flag) -> Polytope:
        return toricmod.okounkov_body_toric(self.X, self._div(cls), flag)

    def body_lim(self, cls, flag, A=None) -> Polytope:
        """Equals the valuative body: section polytopes of invariant
        classes vary continuously under ample perturbation, so the
        intersection over eps > 0 is the body of the class itself."""
        return self.body_val(cls, flag)

    def volume(self, cls) -> Fraction:
        P = toricmod.section_polytope(self.X, self._div(cls))
        if P.is_empty or P.dim() < self.X.dim:
            return Fraction(0)
        return Fraction(math.factorial(self.X.dim)) * P.volume_in_dim(self.X.dim)

    def kappa(self, cls):
        return toricmod.kappa(self.X, self._div(cls))

    def restricted_volume(self, cls, stratum) -> Fraction:
        return toricmod.restricted_volume_toric(self.X, self._div(cls), stratum)

    def restricted_volume_plus(self, cls, stratum, A) -> Fraction:
        """eps-limit of restricted volumes under ample perturbation,
        evaluated exactly by polynomial fit inside one chamber."""
        if not self.is_ample(A):
            raise ValueError("perturbation class must be ample")
        v = self.X.dim - len(tuple(stratum))
        cls = qvec(cls)
        A = qvec(A)

        def rv(eps):
            shifted = tuple(c + eps * a for c, a in zip(cls, A))
            return self.restricted_volume(shifted, stratum)

        base = Fraction(1, 8)
        for _ in range(12):
            xs = [base / (2 ** i) for i in range(v + 2)]
            ys = [rv(x) for x in xs]
            coeffs = _poly_fit(xs[: v + 1], ys[: v + 1])
            check = sum(c * xs[-1] ** k for k, c in enumerate(coeffs))
            if check == ys[-1]:
                return coeffs[0]
            base /= 2
        raise ValueError("restricted volumes never stabilized in one chamber")

    def dims(self, cls, A=None) -> DimsReport:
        k = self.kappa(cls)
        if k == NEG_INF:
            raise ValueError("class has no sections; dimensions undefined")
        if A is None:
            A = self.some_ample()
        kv = self._kappa_vol(cls, A)
        return DimsReport(kappa=k, nu_bdpp=k, kappa_vol=kv, kappa_sigma=None)

    def some_ample(self):
        ones = [Fraction(1)] * len(self.X.rays)
        if toricmod.is_ample(self.X, toricmod.ToricDivisor(self.X, tuple(ones))):
            return tuple(ones)
        for k in range(2, 6):  # fattening eventually wins for our fans
            cand = [Fraction(k if any(r[c] < 0 for c in range(self.X.dim)) else 1)
                    for r in self.X.rays]
            if toricmod.is_ample(self.X, toricmod.ToricDivisor(self.X, tuple(cand))):
                return tuple(cand)
        raise ValueError("no obvious ample class on this fan")

    def _kappa_vol(self, cls, A):
        """Growth exponent of vol(D + eps A): exact polynomial fit."""
        n = self.X.dim
        cls = qvec(cls)
        A = qvec(A)

        def vol(eps):
            return self.volume(tuple(c + eps * a for c, a in zip(cls, A)))

        base = Fraction(1, 8)
        for _ in range(12):
            xs = [base / (2 ** i) for i in range(n + 2)]
            ys = [vol(x) for x in xs]
            coeffs = _poly_fit(xs[: n + 1], ys[: n + 1])
            check = sum(c * xs[-1] ** k for k, c in enumerate(coeffs))
            if check == ys[-1]:
                low = next((k for k, c in enumerate(coeffs) if c != 0), n)
                return n - low
            base /= 2
        raise ValueError("volumes never stabilized in one chamber")

    def nakayama(self, cls, stratum, m_max=10):
        return toricmod.nakayama_verdict(self.X, self._div(cls), stratum, m_max)

    def is_pvs(self, cls, stratum, A) -> bool:
        nu = self.dims(cls, A).nu_bdpp
        if self.X.dim - len(tuple(stratum)) != nu:
            return False
        return self.restricted_volume_plus(cls, stratum, A) > 0


def _poly_fit(xs, ys):
    rows = [[x ** k for k in range(len(xs))] for x in xs]
    return solve(rows, list(ys))


# -- surface backend ----------------------------------------------------------


class SurfaceBackend:
    kind = "surface"

    def __init__(self, S: surfmod.SurfaceLattice):
        self.S = S

    @property
    def dim(self):
        return 2

    def is_psef(self, cls):
        return surfmod.is_psef(self.S, cls)

    def is_effective(self, cls):
        # numerical data cannot separate effective from psef; psef stands in
        return surfmod.is_psef(self.S, cls)

    def is_big(self, cls):
        return surfmod.cone_tests(self.S, cls)["is_big"]

    def is_ample(self, cls):
        return surfmod.is_ample(self.S, cls)

    def body_val(self, cls, flag_curve) -> Polytope:
        """Body of honest sections: direct for big classes, declared
        Iitaka-degree rescaling of the limiting body otherwise."""
        if self.is_big(cls):
            return surfmod.okounkov_body_surface(self.S, cls, flag_curve)
        return surfmod.valuative_body_abundant(self.S, cls, flag_curve)

    def body_lim(self, cls, flag_curve, A=None, eps0=Fraction(1, 64)) -> Polytope:
        if A is None:
            A = surfmod.some_ample(self.S)
        return surfmod.limiting_body_surface(self.S, cls, flag_curve, A, eps0)

    def volume(self, cls) -> Fraction:
        return surfmod.volume_surface(self.S, cls)

    def kappa(self, cls):
        return self.S.kappa_declared(cls)  # None = undeclared, never guessed

    def dims(self, cls, A=None) -> DimsReport:
        if A is None:
            A = surfmod.some_ample(self.S)
        nd = surfmod.numerical_dims_surface(self.S, cls, A)
        return DimsReport(kappa=self.kappa(cls), nu_bdpp=nd["nu_bdpp"],
                          kappa_vol=nd["kappa_vol"],
                          kappa_sigma=self.S.kappa_sigma_declared(cls))

    def restricted_volume_plus(self, cls, stratum_dim, A=None,
                               flag_curve=None) -> Fraction:
        return surfmod.restricted_volume_plus(self.S, cls, stratum_dim,
                                              flag_curve)

    def nakayama(self, cls, stratum_dim, m_max=10, flag_curve=None):
        """Surfaces cannot enumerate sections; only the trivial cases are
        certified, the rest stay bounded-level declarations."""
        k = self.kappa(cls)
        if k is not None and stratum_dim != k:
            return "false", None
        if stratum_dim == 2:
            return "certified", None  # restriction to X is the identity
        return "checked_up_to", 0

    def is_pvs(self, cls, stratum_dim, A=None, flag_curve=None) -> bool:
        if A is None:
            A = surfmod.some_ample(self.S)
        nu = surfmod.numerical_dims_surface(self.S, cls, A)["nu_bdpp"]
        if stratum_dim != nu:
            return False
        return self.restricted_volume_plus(cls, stratum_dim, A, flag_curve) > 0


# -- curve backend ------------------------------------------------------------


class CurveBackend:
    kind = "curve"

    def __init__(self, C: curvemod.CurveModel):
        self.C = C

    @property
    def dim(self):
        return 1

    @staticmethod
    def _deg(cls):
        return curvemod.degree_of(cls)

    def is_effective(self, cls):
        return self._deg(cls) >= 0

    is_psef = is_effective

    def is_big(self, cls):
        return self._deg(cls) > 0

    def is_ample(self, cls):
        return self._deg(cls) > 0

    def body_val(self, cls, flag=None) -> Polytope:
        return curvemod.body_val(self.C, self._deg(cls))

    def body_lim(self, cls, flag=None, A=None) -> Polytope:
        return curvemod.body_lim(self.C, self._deg(cls))

    def volume(self, cls) -> Fraction:
        return curvemod.volume(self.C, self._deg(cls))

    def kappa(self, cls):
        return curvemod.kappa(self.C, self._deg(cls))

    def dims(self, cls, A=None) -> DimsReport:
        k, nu, kv = curvemod.dims(self.C, self._deg(cls))
        return DimsReport(kappa=k, nu_bdpp=nu, kappa_vol=kv, kappa_sigma=kv)

    def restricted_volume_plus(self, cls, stratum_dim, A=None) -> Fraction:
        deg = self._deg(cls)
        if stratum_dim == 1:
            return deg if deg > 0 else Fraction(0)
        if stratum_dim == 0:
            return Fraction(1)
        raise ValueError("stratum dimension out of range")

    def nakayama(self, cls, stratum_dim, m_max=10):
        return curvemod.nakayama_verdict(self.C, self._deg(cls), stratum_dim)

    def is_pvs(self, cls, stratum_dim, A=None) -> bool:
        return curvemod.is_positive_volume_subvariety(self.C, self._deg(cls),
                                                      stratum_dim)


def backend_for(model):
    if isinstance(model, toricmod.ToricVariety):
        return ToricBackend(model)
    if isinstance(model, surfmod.SurfaceLattice):
        return SurfaceBackend(model)
    if isinstance(model, curvemod.CurveModel):
        return CurveBackend(model)
    raise TypeError("unsupported model type: %r" % type(model))


# -- flag-level operations ----------------------------------------------------


def kappa_via_body(backend, cls, flag):
    """dim of the body of honest sections (= the Iitaka dimension when the
    flag contains a Nakayama subvariety at a general point)."""
    try:
        body = backend.body_val(cls, flag)
    except ValueError as exc:
        if "no sections" in str(exc):
            return NEG_INF
        raise
    return body.dim()


def nu_via_body(backend, cls, flag, A=None):
    """dim of the limiting body (= nu when the flag contains a positive
    volume subvariety)."""
    return backend.body_lim(cls, flag, A).dim()


def restricted_volume_plus_via_body(backend, cls, flag, A=None) -> Fraction:
    """nu! times the Euclidean volume of the limiting body."""
    body = backend.body_lim(cls, flag, A)
    nu = body.dim()
    return Fraction(math.factorial(nu)) * body.volume_in_dim(nu)
