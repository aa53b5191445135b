"""Large K_s-free vertex sets in Hamming distance graphs on the Boolean cube.

Constructions (BCH-style fiber coloring, layer fingerprint coloring,
random-translate boosting), exhaustive oracles for tiny instances and an
evaluator for the explicit bounds, all driven from a small CLI.
"""

from .cube import CubeParams
from .sets import CertifiedSet, Coloring

__version__ = "0.1.0"

__all__ = ["CubeParams", "CertifiedSet", "Coloring", "__version__"]
