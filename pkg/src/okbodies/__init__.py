"""Exact rational Newton-Okounkov body computations on desk-scale models.

Modules by layer: `polytope` (exact convex bodies), `toric` / `surface` /
`curve` (variety models), `invariants` (bodies, volumes and numerical
dimensions), `fiberspace` (fiber-space subadditivity checks), `cli`
(command-line front end).  `kernel` selects the compiled integer-geometry
lane when the extension is built, the pure-Python twin otherwise.
"""

from .curve import CurveModel
from .polytope import HalfSpace, Polytope, hull
from .surface import SurfaceLattice
from .toric import ToricDivisor, ToricFlag, ToricVariety

__all__ = ["CurveModel", "HalfSpace", "Polytope", "SurfaceLattice",
           "ToricDivisor", "ToricFlag", "ToricVariety", "hull"]

__version__ = "0.1.0"
