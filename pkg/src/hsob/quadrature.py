"""Adaptive quadrature for intervals, half-lines and the corner-singular unit square.

Three integrators share one configuration object:

* ``integrate_interval``    -- globally adaptive Gauss-Legendre on a finite interval,
* ``integrate_halfline``    -- decaying integrands on (0, inf), tail mapped to (0, 1),
* ``integrate_square_corner`` -- tensor rule on a mesh graded geometrically toward
  the origin, for integrands with an integrable (1/r type) singularity at (0, 0).

All integrators accept complex-valued integrands and return a :class:`QuadResult`
whose ``error`` field is a best-effort estimate (difference of successive
refinements), not a rigorous bound.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

__all__ = [
    "QuadConfig",
    "QuadResult",
    "QuadratureError",
    "integrate_interval",
    "integrate_halfline",
    "integrate_square_corner",
]


class QuadratureError(Exception):
    """Raised when an integral cannot be resolved within the configured budget."""


@dataclass(frozen=True)
class QuadConfig:
    """Tolerances and mesh parameters shared by all quadrature routines.

    abs_tol, rel_tol
        Convergence targets; a result is accepted once the error estimate
        drops below ``max(abs_tol, rel_tol * |value|)``.
    max_subdiv
        Budget of interval subdivisions (or graded-mesh rebuilds for the
        square rule) before giving up.
    grading_ratio
        Geometric ratio of successive cell sizes toward a singular corner.
    grading_levels
        Number of graded levels in the initial corner mesh.
    halfline_truncation
        The half-line splits at T = halfline_truncation * decay_scale.
    nodes_per_cell
        Gauss-Legendre nodes per cell (per axis for the square rule).
    """

    abs_tol: float = 1e-10
    rel_tol: float = 1e-9
    max_subdiv: int = 4000
    grading_ratio: float = 0.5
    grading_levels: int = 12
    halfline_truncation: float = 30.0
    nodes_per_cell: int = 15

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive")
        if self.max_subdiv < 1:
            raise ValueError("max_subdiv must be at least 1")
        if not 0.0 < self.grading_ratio < 1.0:
            raise ValueError("grading_ratio must lie in (0, 1)")
        if self.grading_levels < 1:
            raise ValueError("grading_levels must be at least 1")
        if self.halfline_truncation <= 0:
            raise ValueError("halfline_truncation must be positive")
        if self.nodes_per_cell < 2:
            raise ValueError("nodes_per_cell must be at least 2")


DEFAULT_CONFIG = QuadConfig()


@dataclass(frozen=True)
class QuadResult:
    """Value of an integral together with a best-effort error estimate."""

    value: complex
    error: float
    subdivisions: int

    def __complex__(self) -> complex:
        return complex(self.value)


def _gl_rule(order: int) -> tuple[np.ndarray, np.ndarray]:
    # nodes/weights on [0, 1]
    x, w = np.polynomial.legendre.leggauss(order)
    return 0.5 * (x + 1.0), 0.5 * w


def _eval_nodes(f, xs: np.ndarray) -> np.ndarray:
    """Evaluate ``f`` on an array of nodes, falling back to a scalar loop.

    Overflow is deliberately silent here: a non-finite value is converted to
    a :class:`QuadratureError`, which is how divergent tails surface.
    """
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        try:
            ys = np.asarray(f(xs), dtype=complex)
            if ys.shape != xs.shape:
                raise TypeError
        except (TypeError, ValueError):
            ys = np.array([f(float(x)) for x in xs], dtype=complex)
    if not np.all(np.isfinite(ys.view(float))):
        raise QuadratureError("integrand returned a non-finite value")
    return ys


def _gl_cell(f, a: float, b: float, nodes: np.ndarray, weights: np.ndarray) -> complex:
    xs = a + (b - a) * nodes
    return complex((b - a) * np.dot(weights, _eval_nodes(f, xs)))


def integrate_interval(f, a: float, b: float, cfg: QuadConfig = DEFAULT_CONFIG) -> QuadResult:
    """Integrate ``f`` over the finite interval (a, b).

    Globally adaptive: the worst cell (by the coarse-vs-bisected difference) is
    bisected until the summed error estimate meets the tolerance.  Raises
    :class:`QuadratureError` after ``cfg.max_subdiv`` bisections, which usually
    signals a singular or highly oscillatory integrand beyond the budget.
    """
    if not b > a:
        raise ValueError("integration bounds must satisfy a < b")
    nodes, weights = _gl_rule(cfg.nodes_per_cell)

    def make_cell(lo: float, hi: float, coarse: complex):
        mid = 0.5 * (lo + hi)
        left = _gl_cell(f, lo, mid, nodes, weights)
        right = _gl_cell(f, mid, hi, nodes, weights)
        fine = left + right
        err = abs(coarse - fine)
        return (-err, lo, hi, fine, left, right)

    heap = [make_cell(a, b, _gl_cell(f, a, b, nodes, weights))]
    nsub = 1
    while True:
        total = sum(c[3] for c in heap)
        total_err = -sum(c[0] for c in heap)
        if total_err <= max(cfg.abs_tol, cfg.rel_tol * abs(total)):
            return QuadResult(total, total_err, nsub)
        if nsub >= cfg.max_subdiv:
            raise QuadratureError(
                f"interval rule did not converge after {nsub} subdivisions "
                f"(error estimate {total_err:.3e})"
            )
        _, lo, hi, _, left, right = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        heapq.heappush(heap, make_cell(lo, mid, left))
        heapq.heappush(heap, make_cell(mid, hi, right))
        nsub += 2


def integrate_halfline(f, decay_scale: float = 1.0, cfg: QuadConfig = DEFAULT_CONFIG) -> QuadResult:
    """Integrate ``f`` over (0, inf) assuming decay on the given scale.

    The line is split at ``T = cfg.halfline_truncation * decay_scale``; the tail
    is pulled back to (0, 1) through ``t = T + u/(1-u)``, which regularises
    exponential decay and algebraic decay of order > 1.  A tail that fails to
    settle (decay slower than assumed) surfaces as a :class:`QuadratureError`.
    """
    if decay_scale <= 0:
        raise ValueError("decay_scale must be positive")
    T = cfg.halfline_truncation * decay_scale
    head = integrate_interval(f, 0.0, T, cfg)

    def tail_integrand(u):
        u = np.asarray(u, dtype=float)
        t = T + u / (1.0 - u)
        return np.asarray(f(t), dtype=complex) / (1.0 - u) ** 2

    tail = integrate_interval(tail_integrand, 0.0, 1.0, cfg)
    return QuadResult(
        head.value + tail.value,
        head.error + tail.error,
        head.subdivisions + tail.subdivisions,
    )


def _graded_breaks(levels: int, ratio: float) -> np.ndarray:
    pts = [0.0] + [ratio**j for j in range(levels, -1, -1)]
    return np.array(pts)


def _tensor_graded(g, levels: int, order: int, ratio: float) -> complex:
    """Tensor Gauss-Legendre over (0,1)^2 on a mesh graded toward (0, 0)."""
    nodes, weights = _gl_rule(order)
    breaks = _graded_breaks(levels, ratio)
    widths = np.diff(breaks)
    # all 1-D nodes/weights, every cell at once
    xs = (breaks[:-1, None] + widths[:, None] * nodes[None, :]).ravel()
    ws = (widths[:, None] * weights[None, :]).ravel()
    vals = np.asarray(g(xs[:, None], xs[None, :]), dtype=complex)
    if vals.shape != (xs.size, xs.size):
        raise QuadratureError("square-corner integrand must broadcast over node grids")
    if not np.all(np.isfinite(vals.view(float))):
        raise QuadratureError("integrand returned a non-finite value")
    return complex(ws @ vals @ ws)


def integrate_square_corner(g, cfg: QuadConfig = DEFAULT_CONFIG) -> QuadResult:
    """Integrate ``g(t, s)`` over the open unit square.

    ``g`` may blow up like 1/r at the origin; the mesh is graded geometrically
    toward (0, 0), deep enough that the corner cell contributes below
    tolerance, and the reported error is the difference between two successive
    refinements (one extra grading sweep and a higher node count).

    The integrand is called with two broadcastable arrays and must return the
    full value grid.
    """
    ratio = cfg.grading_ratio
    # corner cell contributes O(ratio**levels); push it below tolerance
    target = max(cfg.abs_tol, 1e-14) * 1e-2
    levels = max(cfg.grading_levels, int(np.ceil(np.log(target) / np.log(ratio))))
    order = cfg.nodes_per_cell

    coarse = _tensor_graded(g, levels, order, ratio)
    rebuilds = 0
    while True:
        fine = _tensor_graded(g, levels + 8, order + 4, ratio)
        err = abs(fine - coarse)
        rebuilds += 1
        if err <= max(cfg.abs_tol, cfg.rel_tol * abs(fine)):
            return QuadResult(fine, err, rebuilds)
        if rebuilds >= max(2, cfg.max_subdiv // 1000):
            raise QuadratureError(
                f"graded square rule did not converge (error estimate {err:.3e})"
            )
        coarse, levels, order = fine, levels + 8, order + 4
