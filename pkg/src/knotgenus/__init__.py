"""Seifert matrices and Alexander polynomials of knot diagrams."""

from .diagram import PlanarDiagram, parse_pd_line
from .laurent import LaurentPoly

__version__ = "0.1.0"
__all__ = ["PlanarDiagram", "parse_pd_line", "LaurentPoly", "__version__"]
