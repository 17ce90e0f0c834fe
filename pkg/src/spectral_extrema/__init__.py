"""Spectral extremal problems for graphs with a fixed number of edges."""
__version__ = "0.1.0"

from .graph import Graph
from .graph6 import decode, encode
from .canon import canonical_form, is_isomorphic
from .spectral import spectral_radius

__all__ = ["Graph", "decode", "encode", "canonical_form", "is_isomorphic", "spectral_radius",
           "__version__"]
