"""Exact moment-polytope toolkit for Hamiltonian torus actions.

Fixed-point data, Morse-theoretic Betti numbers, Weyl-group hulls and
Kirwan-polytope classification in exact rational arithmetic, with a
seeded Monte-Carlo cross-check in :mod:`momentkit.numeric`.
"""
from .builders import (blowup_cut, coadjoint_orbit_model, cpn_model, product_model, so5_example,
                       so5_kirwan, su3_natural, su3_natural_kirwan, su3_skew, su3_skew_kirwan)
from .geometry import GeometryError, Halfspace, Polytope, contains, convex_hull, cut, vector
from .kirwan import classify_vertices, kirwan_from_images, mu_T_from_kirwan, reflective
from .lie import RootSystem, build_root_system, parse_group, to_dominant, weyl_group
from .model import (FixedPointDatum, Generator, HamiltonianModel, deformation_report, morse_report,
                    validate_model)

__version__ = "0.1.0"

__all__ = [
    "FixedPointDatum", "GeometryError", "Generator", "Halfspace", "HamiltonianModel", "Polytope",
    "RootSystem", "blowup_cut", "build_root_system", "classify_vertices", "coadjoint_orbit_model",
    "contains", "convex_hull", "cpn_model", "cut", "deformation_report", "kirwan_from_images",
    "morse_report", "mu_T_from_kirwan", "parse_group", "product_model", "reflective", "so5_example",
    "so5_kirwan", "su3_natural", "su3_natural_kirwan", "su3_skew", "su3_skew_kirwan", "to_dominant",
    "validate_model", "vector", "weyl_group",
]
