"""Truncated Taylor jets: exact series arithmetic for higher derivatives.

A :class:`Jet` holds the Taylor coefficients c_0..c_order of an analytic
function at a base point (so the k-th derivative is k! * c_k).  Addition,
multiplication, division, real powers, log(1+.) and composition are all exact
truncated-series operations; no finite differencing anywhere.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from math import factorial

__all__ = ["Jet", "JetDomainError"]

MAX_JET_ORDER = 12


class JetDomainError(ArithmeticError):
    """Division by a zero constant term, or a power/log branch violation."""


@dataclass(frozen=True)
class Jet:
    """Taylor coefficients (c_0, ..., c_order) of an analytic map at ``base``."""

    coeffs: tuple[complex, ...]
    base: complex | None = None

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a jet needs at least the constant coefficient")
        if len(self.coeffs) - 1 > MAX_JET_ORDER:
            raise ValueError(f"jet order is capped at {MAX_JET_ORDER}")
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    @staticmethod
    def variable(z: complex, order: int) -> "Jet":
        """The identity map z + h as a jet of the given order."""
        coeffs = [complex(z)] + [0j] * order
        if order >= 1:
            coeffs[1] = 1.0 + 0j
        return Jet(tuple(coeffs), base=complex(z))

    @staticmethod
    def constant(value: complex, order: int, base: complex | None = None) -> "Jet":
        return Jet((complex(value),) + (0j,) * order, base=base)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def value(self) -> complex:
        return self.coeffs[0]

    def derivative(self, k: int) -> complex:
        """The k-th derivative value k! * c_k."""
        if not 0 <= k <= self.order:
            raise ValueError("derivative order exceeds the jet order")
        return factorial(k) * self.coeffs[k]

    def _match(self, other) -> "Jet":
        if not isinstance(other, Jet):
            other = Jet.constant(other, self.order, base=self.base)
        if other.order != self.order:
            raise ValueError("jet orders must match")
        return other

    def _base_with(self, other: "Jet") -> complex | None:
        return self.base if self.base is not None else other.base

    def __add__(self, other):
        b = self._match(other)
        return Jet(tuple(x + y for x, y in zip(self.coeffs, b.coeffs)), self._base_with(b))

    __radd__ = __add__

    def __neg__(self):
        return Jet(tuple(-x for x in self.coeffs), self.base)

    def __sub__(self, other):
        b = self._match(other)
        return Jet(tuple(x - y for x, y in zip(self.coeffs, b.coeffs)), self._base_with(b))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        b = self._match(other)
        n = self.order
        out = [0j] * (n + 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] += x * b.coeffs[j]
        return Jet(tuple(out), self._base_with(b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._match(other)
        if b.coeffs[0] == 0:
            raise JetDomainError("division by a jet with zero constant term")
        n = self.order
        out = [0j] * (n + 1)
        for k in range(n + 1):
            acc = self.coeffs[k]
            for j in range(1, k + 1):
                acc -= b.coeffs[j] * out[k - j]
            out[k] = acc / b.coeffs[0]
        return Jet(tuple(out), self._base_with(b))

    def __rtruediv__(self, other):
        return Jet.constant(other, self.order, base=self.base).__truediv__(self)

    def power(self, alpha: float) -> "Jet":
        """Principal-branch real power g^alpha via p' g = alpha g' p."""
        g0 = self.coeffs[0]
        if g0 == 0 or (g0.real <= 0 and g0.imag == 0):
            raise JetDomainError("power base touches the principal branch cut")
        n = self.order
        out = [0j] * (n + 1)
        out[0] = g0**alpha
        for k in range(1, n + 1):
            acc = 0j
            for j in range(1, k + 1):
                acc += ((alpha + 1) * j - k) * self.coeffs[j] * out[k - j]
            out[k] = acc / (k * g0)
        return Jet(tuple(out), self.base)

    def log1p(self) -> "Jet":
        """log(1 + g) with the principal branch, via L' (1+g) = g'."""
        q0 = 1.0 + self.coeffs[0]
        if q0 == 0 or (q0.real <= 0 and q0.imag == 0):
            raise JetDomainError("log1p argument touches the principal branch cut")
        n = self.order
        out = [0j] * (n + 1)
        out[0] = cmath.log(q0)
        for k in range(1, n + 1):
            acc = k * self.coeffs[k]
            for j in range(1, k):
                acc -= j * out[j] * self.coeffs[k - j]
            out[k] = acc / (k * q0)
        return Jet(tuple(out), self.base)

    def compose(self, inner: "Jet") -> "Jet":
        """The jet of self o inner; self must be based at inner's value.

        Substitutes the zero-constant part of ``inner`` into the series of
        ``self`` by Horner evaluation in truncated arithmetic.
        """
        if inner.order != self.order:
            raise ValueError("jet orders must match")
        if self.base is not None and abs(self.base - inner.value) > 1e-9 * (1.0 + abs(self.base)):
            raise ValueError("outer jet is not based at the inner jet's value")
        n = self.order
        shifted = Jet((0j,) + inner.coeffs[1:], inner.base)
        result = Jet.constant(self.coeffs[n], n, base=inner.base)
        for k in range(n - 1, -1, -1):
            result = result * shifted + Jet.constant(self.coeffs[k], n, base=inner.base)
        return result
