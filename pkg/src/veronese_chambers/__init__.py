"""Exact chamber geometry of Veronese hyperplane arrangements.

The package is organized bottom-up:

* scalars      -- exact rationals, Q(sqrt 3), matrices, polynomials
* projective   -- canonical coordinates, transformations, duality
* curves       -- rational normal curves, osculation, dual curves
* arrangement  -- arrangements, the six-plane model, file format
* chambers     -- feasibility, enumeration, face structure, censuses
* polytopes    -- abstract polytopes, the combinatorial catalog
* symmetry     -- shift action, central chambers, the six-plane group
* topology     -- CW complexes, surfaces, vertex links, pi_1
* pile         -- the prism-collapse reconstruction of central chambers
* cli          -- the command-line verification pipelines
"""

from .arrangement import Arrangement, six_planes, veronese
from .chambers import (Chamber, census, count_formula, enumerate_chambers,
                       feasible)
from .polytopes import AbstractPolytope, classify
from .symmetry import central_chamber, chamber_orbits, shift

__all__ = [
    "Arrangement", "six_planes", "veronese",
    "Chamber", "census", "count_formula", "enumerate_chambers", "feasible",
    "AbstractPolytope", "classify",
    "central_chamber", "chamber_orbits", "shift",
]
