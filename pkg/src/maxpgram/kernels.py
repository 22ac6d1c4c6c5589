"""Numeric kernels.

Two coordinate kernels are supported:

* ``rational`` -- exact rational arithmetic (gmpy2.mpq when available,
  fractions.Fraction otherwise).  Every predicate is decided exactly; this
  is the kernel used by the verification suites.
* ``double`` -- IEEE doubles with an absolute tolerance for sign decisions.
  Used for large-n performance runs.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

try:
    from gmpy2 import mpq as RAT
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    RAT = Fraction


def rational(value: Any) -> Any:
    """Convert *value* to an exact rational.

    Accepts ints, rationals, floats (converted exactly) and strings of the
    form ``"p/q"`` or a plain decimal.
    """
    if isinstance(value, str):
        value = value.strip()
        if "/" in value:
            num, den = value.split("/", 1)
            return RAT(int(num), int(den))
        return RAT(Fraction(value))
    if isinstance(value, float):
        return RAT(Fraction(value))
    return RAT(value)


def format_scalar(value: Any) -> str:
    """Serialize a kernel scalar; rationals as ``p/q``, floats as repr."""
    if isinstance(value, float):
        return repr(value)
    return str(value)


@dataclass(frozen=True)
class Kernel:
    name: str
    eps: float  # absolute sign tolerance; 0.0 means exact
    snap: float  # coincidence snap for event points

    def scalar(self, value: Any) -> Any:
        if self.eps == 0.0:
            return rational(value)
        if isinstance(value, str) and "/" in value:
            num, den = value.split("/", 1)
            return int(num) / int(den)
        return float(Fraction(value) if isinstance(value, str) else value)

    def sign(self, x: Any) -> int:
        if self.eps and -self.eps < x < self.eps:
            return 0
        if x > 0:
            return 1
        if x < 0:
            return -1
        return 0

    def eq(self, a: Any, b: Any) -> bool:
        return self.sign(a - b) == 0

    def point_eq(self, p: tuple, q: tuple) -> bool:
        return self.eq(p[0], q[0]) and self.eq(p[1], q[1])

    def coincide(self, p: tuple, q: tuple) -> bool:
        """Event-point coincidence (tighter snap than generic sign eps)."""
        if self.eps == 0.0:
            return p == q
        return abs(p[0] - q[0]) <= self.snap and abs(p[1] - q[1]) <= self.snap


RATIONAL = Kernel("rational", 0.0, 0.0)
DOUBLE = Kernel("double", 1e-9, 1e-12)

KERNELS = {"rational": RATIONAL, "double": DOUBLE}
