"""
Dual numbers for forward-mode differentiation.

A Dual carries (primal, tangent); both fields may themselves be Duals, which gives
exact second derivatives ("tangent of tangent") without a tape.
"""
from __future__ import annotations

import math
from typing import Union

Scalar = Union[float, "Dual"]


class Dual:
    """Forward-mode dual number; nests to depth 2 for second derivatives."""

    __slots__ = ("primal", "tangent")

    def __init__(self, primal: Scalar, tangent: Scalar = 0.0):
        self.primal = primal
        self.tangent = tangent

    @staticmethod
    def _coerce(x: Union["Dual", float, int]) -> "Dual":
        return x if isinstance(x, Dual) else Dual(float(x), 0.0)

    # ---------- arithmetic ----------
    def __add__(self, other):
        o = Dual._coerce(other)
        return Dual(self.primal + o.primal, self.tangent + o.tangent)

    __radd__ = __add__

    def __sub__(self, other):
        o = Dual._coerce(other)
        return Dual(self.primal - o.primal, self.tangent - o.tangent)

    def __rsub__(self, other):
        o = Dual._coerce(other)
        return Dual(o.primal - self.primal, o.tangent - self.tangent)

    def __mul__(self, other):
        o = Dual._coerce(other)
        return Dual(self.primal * o.primal, self.tangent * o.primal + self.primal * o.tangent)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Dual._coerce(other)
        if primal_value(o) == 0.0:
            raise ZeroDivisionError("Dual division by zero")
        q = self.primal / o.primal
        return Dual(q, (self.tangent - q * o.tangent) / o.primal)

    def __rtruediv__(self, other):
        return Dual._coerce(other).__truediv__(self)

    def __neg__(self):
        return Dual(-self.primal, -self.tangent)

    def __pos__(self):
        return self

    def __pow__(self, power: int):
        if not isinstance(power, int) or power < 0:
            raise TypeError("Dual only supports non-negative integer powers")
        out: Scalar = 1.0
        for _ in range(power):
            out = self * out
        return out

    # ---------- comparisons act on the innermost primal ----------
    def __lt__(self, other):
        return primal_value(self) < primal_value(other)

    def __le__(self, other):
        return primal_value(self) <= primal_value(other)

    def __gt__(self, other):
        return primal_value(self) > primal_value(other)

    def __ge__(self, other):
        return primal_value(self) >= primal_value(other)

    def __float__(self):
        return primal_value(self)

    def __repr__(self):
        return f"Dual({self.primal!r}, {self.tangent!r})"


def primal_value(x: Scalar) -> float:
    """Innermost real value of a (possibly nested) dual."""
    while isinstance(x, Dual):
        x = x.primal
    return float(x)


def tangent_of(x: Scalar) -> Scalar:
    """First-order tangent; constants have zero tangent."""
    return x.tangent if isinstance(x, Dual) else 0.0


# ---------- elementary functions (dispatch on Dual / float) ----------
def exp(x: Scalar) -> Scalar:
    if isinstance(x, Dual):
        e = exp(x.primal)
        return Dual(e, e * x.tangent)
    return math.exp(x)


def log(x: Scalar) -> Scalar:
    if isinstance(x, Dual):
        return Dual(log(x.primal), x.tangent / x.primal)
    if x <= 0.0:
        raise ValueError(f"log domain error: input must be > 0, got {x}")
    return math.log(x)


def logistic(x: Scalar) -> Scalar:
    if isinstance(x, Dual):
        s = logistic(x.primal)
        return Dual(s, s * (1.0 - s) * x.tangent)
    if x >= 0.0:
        return 1.0 / (1.0 + math.exp(-x))
    e = math.exp(x)
    return e / (1.0 + e)
