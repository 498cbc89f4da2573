"""Exception types.

Every error carries a short machine-greppable ``code`` that the CLI prints as
``error[<code>]: <message>`` on a single line.
"""

from __future__ import annotations


class MotionWaveletError(ValueError):
    code = "E_GENERIC"

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class UnsupportedBasisError(MotionWaveletError):
    code = "E_BASIS"


class ShapeError(MotionWaveletError):
    code = "E_SHAPE"


class ConfigError(MotionWaveletError):
    code = "E_CONFIG"


class FormatError(MotionWaveletError):
    code = "E_FORMAT"


class DivergenceError(MotionWaveletError):
    code = "E_NAN"
