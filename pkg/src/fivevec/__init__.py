"""Exact calculus on a five-dimensional tangent space over Minkowski charts.

Subpackages by layer: ``poly`` (rational polynomial scalars), ``exactnum``
(sqrt/complex extensions), ``clifford``, ``core5`` (the vector algebra),
``frames``, ``connection``, ``bivder``, ``curvature``, ``noether``,
``gauge``, and the ``cli`` verification runner.
"""

from .poly import (
    DegreeCapError,
    Poly4,
    PolyParseError,
    RatPoly,
    parse_poly,
    set_degree_cap,
)

__all__ = [
    "DegreeCapError",
    "Poly4",
    "PolyParseError",
    "RatPoly",
    "parse_poly",
    "set_degree_cap",
]

__version__ = "0.1.0"
