"""Wavelet-manifold diffusion for stochastic human motion prediction."""

from .errors import (
    ConfigError,
    DivergenceError,
    FormatError,
    MotionWaveletError,
    ShapeError,
    UnsupportedBasisError,
)
from .manifold import MotionSequence, WaveletManifold, decode, encode, pad_history
from .wavelet import ALL_BASES, APPROXIMATE_BASES, SUPPORTED_BASES, make_basis

__version__ = "0.1.0"

__all__ = [
    "ALL_BASES",
    "APPROXIMATE_BASES",
    "ConfigError",
    "DivergenceError",
    "FormatError",
    "MotionSequence",
    "MotionWaveletError",
    "SUPPORTED_BASES",
    "ShapeError",
    "UnsupportedBasisError",
    "WaveletManifold",
    "decode",
    "encode",
    "make_basis",
    "pad_history",
]
