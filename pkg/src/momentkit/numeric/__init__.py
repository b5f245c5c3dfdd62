"""Floating-point oracle: sampling the moment maps on CP^2 x CP^2.

The batch kernel comes from the compiled ``_jacobi`` extension when it is
built, otherwise from the numpy fallback.  ``BACKEND`` names the choice.
"""
from __future__ import annotations

from . import _pykernels

try:
    from . import _jacobi  # type: ignore[attr-defined]
    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on the build
    _jacobi = None
    BACKEND = "numpy"

from .sampling import (DegenerateSampleError, FloatPolytope, MomentSample, approx_hull_2d,
                       hausdorff, hausdorff_to, membership_fraction, moment_batch, moment_sample,
                       project_2d, run_sampling, sample_projective)

__all__ = [
    "BACKEND", "DegenerateSampleError", "FloatPolytope", "MomentSample", "approx_hull_2d",
    "hausdorff", "hausdorff_to", "membership_fraction", "moment_batch", "moment_sample",
    "project_2d", "run_sampling", "sample_projective",
]
