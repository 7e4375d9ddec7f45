"""Exact classification of minimal admissible homogeneous Lorentzian manifolds."""

from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
