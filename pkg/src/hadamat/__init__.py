"""Exact verification of complex Hadamard matrices, MUBs and Hadamard equivalence."""
from hadamat.cyclotomic import CycloNum, embed, root_of_unity, sqrt_int

__version__ = "0.1.0"

__all__ = ["CycloNum", "embed", "root_of_unity", "sqrt_int", "__version__"]
