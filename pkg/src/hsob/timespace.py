"""The weighted time-domain space: repeated integration, Hardy constants, and
the kernel-generating family g_{w,n}.

W^-n integrates n times from t to infinity,

    (W^-n f)(t) = 1/(n-1)! * int_t^inf (s-t)^(n-1) f(s) ds,

and inverts n-fold differentiation up to sign: (-1)^n (W^-n f)^(n) = f.  For
exponential polynomials the integral stays inside the algebra and is computed
exactly.

g_{w,n} = W^-n applied to t^-n * int_0^1 (1-x)^(n-1)/(n-1)! exp(-t x w) dx is
the time-side preimage of the reproducing kernel.  Its weighted derivative has
the stable closed form

    t^n g_{w,n}^(n)(t) = (-1)^n E_n(w t),
    E_n(x) = sum_{m>=0} (-x)^m/(n+m)!  =  (-x)^-n (exp(-x) - sum_{j<n} (-x)^j/j!),

an exponential-series remainder; the series branch is used for small |x| to
dodge the cancellation in the remainder form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import numpy as np

from .expfamily import ExpPoly, norm_n
from .quadrature import DEFAULT_CONFIG, QuadConfig, integrate_halfline

__all__ = [
    "w_minus_exp",
    "w_minus",
    "hardy_constant",
    "exp_series_remainder",
    "GFunction",
    "point_estimate_constant",
    "point_estimate_check",
]


def w_minus_exp(f: ExpPoly, n: int) -> ExpPoly:
    """Exact W^-n f for an exponential polynomial (the result is one too).

    Substituting s = t + u turns each term a t^k exp(-lam t) into a binomial
    sum of moment integrals in u, so the image keeps the same decay rates.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    terms = []
    for a, k, lam in f.terms:
        for r in range(k + 1):
            coeff = a * comb(k, r) * factorial(n - 1 + r) / (factorial(n - 1) * lam ** (n + r))
            terms.append((coeff, k - r, lam))
    return ExpPoly(tuple(terms))


def w_minus(f, n: int, t: float, decay_scale: float | None = None,
            cfg: QuadConfig = DEFAULT_CONFIG) -> complex:
    """Value of (W^-n f)(t): exact for ExpPoly, quadrature for callables.

    Callables must decay at least algebraically of order > 1 on the given
    scale; insufficient decay shows up as quadrature non-convergence.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    if isinstance(f, ExpPoly):
        return complex(w_minus_exp(f, n)(t))
    scale = decay_scale if decay_scale is not None else 1.0

    def integrand(u):
        u = np.asarray(u, dtype=float)
        return u ** (n - 1) * np.asarray(f(t + u), dtype=complex) / factorial(n - 1)

    return complex(integrate_halfline(integrand, scale, cfg).value)


def hardy_constant(m: int) -> float:
    """The constant Gamma(1/2)/Gamma(m+1/2) = 4^m m!/(2m)! of Hardy's inequality.

    Its square bounds int (W^-m phi)^2 by the weighted integral int (t^m phi)^2
    for positive phi.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    return float(Fraction(4**m * factorial(m), factorial(2 * m)))


def exp_series_remainder(n: int, x):
    """E_n(x) = sum_{m>=0} (-x)^m / (n+m)!, vectorised over complex x.

    Equals (-x)^-n (exp(-x) - partial exponential sum); the two forms are
    switched at |x| = 12 for accuracy.
    """
    scalar = np.isscalar(x)
    x = np.atleast_1d(np.asarray(x, dtype=complex))
    out = np.empty(x.shape, dtype=complex)

    small = np.abs(x) <= 12.0
    if np.any(small):
        xs = x[small]
        term = np.ones_like(xs) / factorial(n)
        acc = term.copy()
        m = 0
        while True:
            m += 1
            term = term * (-xs) / (n + m)
            acc += term
            if m > 5 and np.all(np.abs(term) <= 1e-18 * (1.0 + np.abs(acc))):
                break
            if m > 80:  # |x| <= 12 converges far earlier
                break
        out[small] = acc
    if np.any(~small):
        xl = x[~small]
        partial = np.zeros_like(xl)
        for j in range(n):
            partial += (-xl) ** j / factorial(j)
        out[~small] = (np.exp(-xl) - partial) / (-xl) ** n
    return complex(out[0]) if scalar else out


@dataclass(frozen=True)
class GFunction:
    """The kernel-generating time function g_{w,n}, Re w > 0, n >= 1.

    Satisfies ||g_{w,n}||_(n) <= 2 log 2 / sqrt(Re w) and Laplace-transforms to
    the reproducing kernel at conj(w).
    """

    w: complex
    n: int

    def __post_init__(self):
        if not complex(self.w).real > 0:
            raise ValueError("w must lie in the right half-plane")
        if self.n < 1:
            raise ValueError("n must be at least 1")

    def weighted_derivative(self, t):
        """t^n g^(n)(t) from the closed form (-1)^n E_n(w t); stable for n <= 8."""
        return (-1) ** self.n * exp_series_remainder(self.n, self.w * np.asarray(t))

    def __call__(self, t: float, cfg: QuadConfig = DEFAULT_CONFIG) -> complex:
        """g_{w,n}(t) from the defining double integral.

        The inner unit-interval integral is the exact E_n form; the outer
        integral over (t, inf) is quadrature with algebraic decay.
        """
        if t <= 0:
            raise ValueError("t must be positive")
        n, w = self.n, self.w

        def integrand(u):
            u = np.asarray(u, dtype=float)
            s = t + u
            return u ** (n - 1) / s**n * exp_series_remainder(n, s * w) / factorial(n - 1)

        scale = max(t, 1.0, 1.0 / abs(w))
        return complex(integrate_halfline(integrand, scale, cfg).value)

    def norm(self, cfg: QuadConfig = DEFAULT_CONFIG) -> float:
        """||g_{w,n}||_(n) via the single-integral form of the weighted derivative."""

        def integrand(t):
            v = exp_series_remainder(self.n, self.w * np.asarray(t))
            return np.abs(v) ** 2

        scale = 1.0 / self.w.real
        val = integrate_halfline(integrand, scale, cfg).value
        return float(np.sqrt(max(val.real, 0.0)))


def point_estimate_constant(n: int, k: int) -> float:
    """Constant C with |f^(k)(t)| <= C t^(-k-1/2) ||f||_(n), 0 <= k <= n-1.

    Cauchy-Schwarz on the W^-(n-k) representation of f^(k) gives
    C = sqrt(B(2(n-k)-1, 2k+1)) / (n-k-1)!, with B the Beta function at
    integer arguments.
    """
    if not 0 <= k <= n - 1:
        raise ValueError("need 0 <= k <= n-1")
    a, b = 2 * (n - k) - 1, 2 * k + 1
    beta = Fraction(factorial(a - 1) * factorial(b - 1), factorial(a + b - 1))
    return float(np.sqrt(float(beta))) / factorial(n - k - 1)


def point_estimate_check(f: ExpPoly, n: int, k: int, t: float) -> float:
    """Margin C t^(-k-1/2) ||f||_(n) - |f^(k)(t)|, nonnegative when the bound holds."""
    if t <= 0:
        raise ValueError("t must be positive")
    bound = point_estimate_constant(n, k) * t ** (-k - 0.5) * norm_n(f, n)
    return float(bound - abs(f.derivative(k)(t)))
