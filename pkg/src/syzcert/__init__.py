"""Property N_p certification for ruled varieties over curves.

``syzcert.slopes`` and ``syzcert.certifier`` decide N_p from numerical
invariants; ``syzcert.koszul`` recomputes graded Betti numbers of Veronese and
scroll coordinate rings from their Koszul complexes.
"""

from .certifier import Certificate, EmbeddingSpec, best_certificate, quadratic_p_max
from .knowledge import INFINITE, Status, veronese_status
from .slopes import CurveContext, FormalBundle, LineBundleClass

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "Certificate",
    "CurveContext",
    "EmbeddingSpec",
    "FormalBundle",
    "LineBundleClass",
    "Status",
    "best_certificate",
    "quadratic_p_max",
    "veronese_status",
]
