"""Zero-padded discrete wavelet transform in one and two dimensions.

All transforms act on the trailing axis (1-D) or the two trailing axes (2-D)
of float64 arrays, so leading axes act as a batch. A single decomposition
level is computed; each band has ``(n + l - 1) // 2`` coefficients for a
length-``n`` axis and a length-``l`` filter.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from ._filters import FILTERS
from .errors import ShapeError, UnsupportedBasisError

# Bases whose published coefficients form an exact perfect-reconstruction pair.
SUPPORTED_BASES = (
    "bior2.8",
    "rbio2.8",
    "bior6.8",
    "sym9",
    "sym10",
    "coif3",
    "db9",
    "coif5",
    "haar",
)
# Truncated FIR approximations; usable for comparison but not invertible to
# machine precision.
APPROXIMATE_BASES = ("dmey",)
ALL_BASES = SUPPORTED_BASES + APPROXIMATE_BASES

ORTHOGONAL_FAMILIES = ("haar", "db", "sym", "coif", "dmey")


@dataclass(frozen=True)
class WaveletBasis:
    name: str
    dec_lo: np.ndarray = field(repr=False)
    dec_hi: np.ndarray = field(repr=False)
    rec_lo: np.ndarray = field(repr=False)
    rec_hi: np.ndarray = field(repr=False)

    @property
    def length(self) -> int:
        return max(len(self.dec_lo), len(self.dec_hi), len(self.rec_lo), len(self.rec_hi))

    @property
    def orthogonal(self) -> bool:
        return self.name.startswith(ORTHOGONAL_FAMILIES)

    @property
    def exact(self) -> bool:
        """True when the filter bank reconstructs to machine precision."""
        return self.name in SUPPORTED_BASES


def make_basis(name: str) -> WaveletBasis:
    """Load a named filter bank from the built-in coefficient tables.

    Raises:
        UnsupportedBasisError: if ``name`` is not a known basis.
    """
    key = name.strip().lower()
    if key not in FILTERS:
        raise UnsupportedBasisError(
            f"unsupported basis {name!r}; supported: {', '.join(ALL_BASES)}"
        )
    bank = FILTERS[key]
    arrays = {k: np.asarray(v, dtype=np.float64) for k, v in bank.items()}
    for arr in arrays.values():
        arr.setflags(write=False)
    return WaveletBasis(name=key, **arrays)


def band_length(n: int, basis: WaveletBasis) -> int:
    return _kernels.band_length(n, basis.length)


def _as_rows(x: np.ndarray) -> tuple[np.ndarray, tuple[int, ...]]:
    lead = x.shape[:-1]
    return np.ascontiguousarray(x.reshape(-1, x.shape[-1]), dtype=np.float64), lead


def dwt1d(signal, basis: WaveletBasis, padding: str = "zero") -> tuple[np.ndarray, np.ndarray]:
    """Single-level analysis along the last axis.

    Returns the approximation and detail bands, each of length
    ``(N + l - 1) // 2``.
    """
    if padding != "zero":
        raise ShapeError(f"padding mode {padding!r} not supported; only 'zero'")
    x = np.asarray(signal, dtype=np.float64)
    if x.ndim == 0 or x.shape[-1] == 0 or x.size == 0:
        raise ShapeError("dwt1d: empty signal")
    rows, lead = _as_rows(x)
    a, d = _kernels.analysis(rows, basis.dec_lo, basis.dec_hi)
    k = a.shape[-1]
    return a.reshape(lead + (k,)), d.reshape(lead + (k,))


def idwt1d(a, d, basis: WaveletBasis, target_len: int) -> np.ndarray:
    """Inverse of :func:`dwt1d`, trimmed to ``target_len`` samples."""
    a = np.asarray(a, dtype=np.float64)
    d = np.asarray(d, dtype=np.float64)
    if a.shape != d.shape:
        raise ShapeError(f"idwt1d: band shapes differ, {a.shape} vs {d.shape}")
    if a.ndim == 0 or a.shape[-1] == 0:
        raise ShapeError("idwt1d: empty bands")
    k = a.shape[-1]
    if target_len < 1 or target_len > 2 * k:
        raise ShapeError(f"idwt1d: target_len {target_len} incompatible with band length {k}")
    ra, lead = _as_rows(a)
    rd, _ = _as_rows(d)
    out = _kernels.synthesis(ra, rd, basis.rec_lo, basis.rec_hi, int(target_len))
    return out.reshape(lead + (int(target_len),))


@dataclass
class Subbands2D:
    """Four single-level 2-D subbands.

    The first letter names the filter applied along the row (frame) axis, the
    second the filter along the column (channel) axis.
    """

    ll: np.ndarray
    lh: np.ndarray
    hl: np.ndarray
    hh: np.ndarray
    original_shape: tuple[int, int]

    def __post_init__(self):
        shapes = {self.ll.shape, self.lh.shape, self.hl.shape, self.hh.shape}
        if len(shapes) != 1:
            raise ShapeError(f"subband shapes differ: {sorted(shapes)}")

    @property
    def shape(self) -> tuple[int, ...]:
        return self.ll.shape


def dwt2d(matrix, basis: WaveletBasis) -> Subbands2D:
    """Separable 2-D transform over the two trailing axes (rows, then columns)."""
    x = np.asarray(matrix, dtype=np.float64)
    if x.ndim < 2 or x.shape[-1] == 0 or x.shape[-2] == 0:
        raise ShapeError(f"dwt2d: need a non-empty matrix, got shape {x.shape}")
    r, c = x.shape[-2:]
    # along each row (column axis)
    lo_c, hi_c = dwt1d(x, basis)
    # then along the frame axis
    ll, hl = (np.swapaxes(b, -1, -2) for b in dwt1d(np.swapaxes(lo_c, -1, -2), basis))
    lh, hh = (np.swapaxes(b, -1, -2) for b in dwt1d(np.swapaxes(hi_c, -1, -2), basis))
    return Subbands2D(
        ll=np.ascontiguousarray(ll),
        lh=np.ascontiguousarray(lh),
        hl=np.ascontiguousarray(hl),
        hh=np.ascontiguousarray(hh),
        original_shape=(r, c),
    )


def idwt2d(subbands: Subbands2D, basis: WaveletBasis) -> np.ndarray:
    rows, cols = subbands.original_shape
    k, dcols = subbands.shape[-2:]
    if band_length(rows, basis) != k or band_length(cols, basis) != dcols:
        raise ShapeError(
            f"idwt2d: subbands {k}x{dcols} inconsistent with original shape "
            f"{rows}x{cols} for {basis.name} (l={basis.length})"
        )

    def _frames(lo, hi):
        out = idwt1d(np.swapaxes(lo, -1, -2), np.swapaxes(hi, -1, -2), basis, rows)
        return np.swapaxes(out, -1, -2)

    lo_c = _frames(subbands.ll, subbands.hl)
    hi_c = _frames(subbands.lh, subbands.hh)
    return idwt1d(lo_c, hi_c, basis, cols)
