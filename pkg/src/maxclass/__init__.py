"""Exact cohomology of N-graded Lie algebras of maximal class.

Betti numbers come from exact ranks of the Chevalley-Eilenberg
differential; every closed-form route (partition counts, generating
functions, explicit cocycles, the codimension-one long exact sequence,
sl(2) primitive vectors, the Hodge Laplacian) is implemented
independently and cross-checked against it.
"""

from .algebra import preset, load_custom, load_custom_file, validate
from .cochain import Cochain, basis, differential, differential_matrix, wedge
from .cohomology import betti, betti_table, is_exact, representatives
from .fields import QQ, PrimeField, parse_field
from .linalg import BACKEND

__version__ = "0.1.0"

__all__ = [
    "preset", "load_custom", "load_custom_file", "validate",
    "Cochain", "basis", "differential", "differential_matrix", "wedge",
    "betti", "betti_table", "is_exact", "representatives",
    "QQ", "PrimeField", "parse_field", "BACKEND", "__version__",
]
