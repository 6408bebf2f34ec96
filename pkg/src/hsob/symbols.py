"""Analytic self-maps of the right half-plane as composition-operator symbols.

A :class:`SymbolExpr` is an immutable AST (rational operations, real powers,
log(1+.)) evaluable on C+ with principal branches throughout.  The analysis
operations estimate the quantities governing boundedness of the composition
operator f -> f o phi:

* ``angular_derivative`` -- sup of Re z / Re phi(z); finite exactly when the
  operator is bounded on the plain Hardy space, with norm and spectral radius
  sqrt of that supremum,
* ``radial_sup``         -- sup of |z|/|phi(z)|, necessary for boundedness on
  the order-n spaces (n >= 1),
* ``nbc_suprema``        -- sup of |z^k phi^(k)(z)/phi(z)| for k = 1..n, which
  together with a finite angular derivative is sufficient,
* ``jury_min_eig``       -- eigenvalue certificates for the kernel inequality
  M^2 K(x, y) >= conj(psi(x)) psi(y) K(phi(x), phi(y)); the least admissible M
  equals the weighted composition operator's norm.

All suprema are sampled estimates over log-polar grids with refinement toward
the argmax, toward the imaginary axis, and outward along rays: evidence, not
proofs.  Reports carry the grid metadata.
"""

from __future__ import annotations

import cmath
import dataclasses
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .jets import Jet, JetDomainError
from .kernel import KernelPoint, kernel_eval, kernel_norm, min_eigenvalue
from .quadrature import DEFAULT_CONFIG, QuadConfig
from .specfun import bell_partitions

__all__ = [
    "SymbolExpr",
    "Var",
    "Const",
    "Add",
    "Sub",
    "Mul",
    "Div",
    "Pow",
    "Log1p",
    "SymbolSyntaxError",
    "BranchViolation",
    "parse",
    "eval_jet",
    "GridSpec",
    "selfmap_witness",
    "angular_derivative",
    "radial_sup",
    "nbc_suprema",
    "faa_di_bruno",
    "jury_min_eig",
    "jury_min_m",
    "caughran_lower_bound",
    "SymbolReport",
    "classify",
]


class BranchViolation(ArithmeticError):
    """A principal-branch power or logarithm was evaluated on its cut."""


class SymbolSyntaxError(ValueError):
    """Parse failure, annotated with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class SymbolExpr:
    """Base class for symbol AST nodes; subclasses are frozen dataclasses."""

    def __call__(self, z: complex) -> complex:
        return self.eval(complex(z))

    def eval(self, z: complex) -> complex:
        raise NotImplementedError

    def jet(self, z: complex, order: int) -> Jet:
        raise NotImplementedError

    def to_text(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Var(SymbolExpr):
    def eval(self, z):
        return z

    def jet(self, z, order):
        return Jet.variable(z, order)

    def to_text(self):
        return "z"


@dataclass(frozen=True)
class Const(SymbolExpr):
    value: complex

    def eval(self, z):
        return complex(self.value)

    def jet(self, z, order):
        return Jet.constant(self.value, order, base=complex(z))

    def to_text(self):
        v = complex(self.value)
        if v.imag == 0:
            return _fmt_real(v.real)
        if v.real == 0:
            return _fmt_real(v.imag) + "i"
        return f"({_fmt_real(v.real)}+{_fmt_real(v.imag)}i)"


def _fmt_real(x: float) -> str:
    return f"{int(x)}" if x == int(x) else repr(x)


@dataclass(frozen=True)
class _Binary(SymbolExpr):
    left: SymbolExpr
    right: SymbolExpr
    _symbol = "?"

    def to_text(self):
        return f"({self.left.to_text()} {self._symbol} {self.right.to_text()})"


class Add(_Binary):
    _symbol = "+"

    def eval(self, z):
        return self.left.eval(z) + self.right.eval(z)

    def jet(self, z, order):
        return self.left.jet(z, order) + self.right.jet(z, order)


class Sub(_Binary):
    _symbol = "-"

    def eval(self, z):
        return self.left.eval(z) - self.right.eval(z)

    def jet(self, z, order):
        return self.left.jet(z, order) - self.right.jet(z, order)


class Mul(_Binary):
    _symbol = "*"

    def eval(self, z):
        return self.left.eval(z) * self.right.eval(z)

    def jet(self, z, order):
        return self.left.jet(z, order) * self.right.jet(z, order)


class Div(_Binary):
    _symbol = "/"

    def eval(self, z):
        denom = self.right.eval(z)
        if denom == 0:
            raise ZeroDivisionError("symbol denominator vanished")
        return self.left.eval(z) / denom

    def jet(self, z, order):
        try:
            return self.left.jet(z, order) / self.right.jet(z, order)
        except JetDomainError as exc:
            raise ZeroDivisionError(str(exc)) from None


@dataclass(frozen=True)
class Pow(SymbolExpr):
    """Principal-branch real power; alpha = 0.5 is the parsed sqrt."""

    base_expr: SymbolExpr
    alpha: float

    def eval(self, z):
        b = self.base_expr.eval(z)
        if b == 0 or (b.real <= 0 and b.imag == 0):
            raise BranchViolation("power base on the principal branch cut")
        return b**self.alpha

    def jet(self, z, order):
        try:
            return self.base_expr.jet(z, order).power(self.alpha)
        except JetDomainError as exc:
            raise BranchViolation(str(exc)) from None

    def to_text(self):
        if self.alpha == 0.5:
            return f"sqrt({self.base_expr.to_text()})"
        return f"{self.base_expr.to_text()}^{self.alpha}"


@dataclass(frozen=True)
class Log1p(SymbolExpr):
    arg: SymbolExpr

    def eval(self, z):
        a = 1.0 + self.arg.eval(z)
        if a == 0 or (a.real <= 0 and a.imag == 0):
            raise BranchViolation("log1p argument on the principal branch cut")
        return cmath.log(a)

    def jet(self, z, order):
        try:
            return self.arg.jet(z, order).log1p()
        except JetDomainError as exc:
            raise BranchViolation(str(exc)) from None

    def to_text(self):
        return f"log1p({self.arg.to_text()})"


# ---------------------------------------------------------------------------
# Parser:  expr := term (('+'|'-') term)*
#          term := factor (('*'|'/') factor)*
#          factor := atom ['^' real]
#          atom := 'z' | number['i'] | 'i'
#                | 'sqrt(' expr ')' | 'log1p(' expr ')' | '(' expr ')'


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise SymbolSyntaxError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, token: str) -> bool:
        self.skip_ws()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str):
        if not self.accept(token):
            self.error(f"expected '{token}'")

    def parse(self) -> SymbolExpr:
        node = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.error("unexpected trailing input")
        return node

    def expr(self) -> SymbolExpr:
        node = self.term()
        while True:
            if self.accept("+"):
                node = Add(node, self.term())
            elif self.accept("-"):
                node = Sub(node, self.term())
            else:
                return node

    def term(self) -> SymbolExpr:
        node = self.factor()
        while True:
            if self.accept("*"):
                node = Mul(node, self.factor())
            elif self.accept("/"):
                node = Div(node, self.factor())
            else:
                return node

    def factor(self) -> SymbolExpr:
        node = self.atom()
        if self.accept("^"):
            at = self.pos
            alpha = self.signed_real()
            if alpha <= 0:
                self.pos = at
                self.error("power exponent must be positive")
            return Pow(node, alpha)
        return node

    def atom(self) -> SymbolExpr:
        self.skip_ws()
        if self.accept("sqrt("):
            inner = self.expr()
            self.expect(")")
            return Pow(inner, 0.5)
        if self.accept("log1p("):
            inner = self.expr()
            self.expect(")")
            return Log1p(inner)
        if self.accept("("):
            inner = self.expr()
            self.expect(")")
            return inner
        ch = self.peek()
        if ch == "z":
            self.pos += 1
            return Var()
        if ch == "i":
            self.pos += 1
            return Const(1j)
        if ch.isdigit() or ch == ".":
            value = self.number()
            if self.pos < len(self.text) and self.text[self.pos] == "i":
                self.pos += 1
                return Const(value * 1j)
            return Const(complex(value))
        self.error("expected an atom ('z', a number, sqrt(...), log1p(...) or parentheses)")

    def number(self) -> float:
        self.skip_ws()
        start = self.pos
        seen_digit = False
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch.isdigit():
                seen_digit = True
                self.pos += 1
            elif ch == "." or (ch in "eE" and seen_digit) or (
                ch in "+-" and self.pos > start and self.text[self.pos - 1] in "eE"
            ):
                self.pos += 1
            else:
                break
        if not seen_digit:
            self.error("expected a number")
        try:
            return float(self.text[start : self.pos])
        except ValueError:
            self.error("malformed number")

    def signed_real(self) -> float:
        self.skip_ws()
        sign = -1.0 if self.accept("-") else 1.0
        return sign * self.number()


def parse(text: str) -> SymbolExpr:
    """Parse a symbol expression; raises :class:`SymbolSyntaxError` on failure."""
    return _Parser(text).parse()


def eval_jet(e: SymbolExpr, z: complex, order: int) -> Jet:
    """Taylor jet of the symbol at z, by exact series arithmetic node by node."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    return e.jet(complex(z), order)


# ---------------------------------------------------------------------------
# Sampled suprema over log-polar grids


@dataclass(frozen=True)
class GridSpec:
    """Log-polar sampling grid on C+ with refinement and divergence policy.

    Moduli run geometrically over ``10**log10_r_min .. 10**log10_r_max``;
    arguments stay ``theta_margin`` away from +-pi/2.  Estimation refines
    around the running argmax (``refine_passes``), shrinks the margin by
    factors of 100 (``boundary_passes``), and extends outward along the argmax
    ray up to ``10**log10_r_extend``.  A supremum is declared infinite when
    the running maximum exceeds ``diverge_cap`` while still growing.
    """

    log10_r_min: float = -4.0
    log10_r_max: float = 6.0
    num_r: int = 41
    theta_margin: float = 1e-3
    num_theta: int = 33
    refine_passes: int = 2
    boundary_passes: int = 3
    log10_r_extend: float = 18.0
    diverge_cap: float = 1e8

    def radii(self) -> np.ndarray:
        return np.logspace(self.log10_r_min, self.log10_r_max, self.num_r)

    def angles(self, margin: float | None = None) -> np.ndarray:
        m = self.theta_margin if margin is None else margin
        half = math.pi / 2 - m
        return np.linspace(-half, half, self.num_theta)


DEFAULT_GRID = GridSpec()


def _grid_points(radii, angles):
    for r in radii:
        for th in angles:
            yield complex(r * math.cos(th), r * math.sin(th))


def _safe_ratio(fn, z) -> float:
    try:
        val = fn(z)
    except (BranchViolation, ZeroDivisionError, OverflowError):
        return math.nan
    if val is None or isinstance(val, complex):
        return math.nan
    return val


def _supremum_estimate(fn, grid: GridSpec) -> tuple[float, complex]:
    """Running max of ``fn`` (real-valued, nan to skip) with all refinements.

    Returns (estimate, argmax).  The estimate is declared +inf when it exceeds
    the divergence cap *and* refinement pushed it past the base-grid value,
    the signature of a supremum escaping to the boundary or to infinity.
    """
    best, best_z = -math.inf, 0j

    def sweep(points):
        nonlocal best, best_z
        for z in points:
            v = _safe_ratio(fn, z)
            if not math.isnan(v) and v > best:
                best, best_z = v, z

    sweep(_grid_points(grid.radii(), grid.angles()))
    base_estimate = best
    if best == -math.inf:
        return math.nan, 0j

    for _ in range(grid.refine_passes):
        r0, t0 = abs(best_z), math.atan2(best_z.imag, best_z.real)
        half = math.pi / 2 - grid.theta_margin
        radii = r0 * np.logspace(-0.5, 0.5, 9)
        angles = np.clip(np.linspace(t0 - 0.2, t0 + 0.2, 9), -half, half)
        sweep(_grid_points(radii, angles))

    margin = grid.theta_margin
    for _ in range(grid.boundary_passes):
        margin *= 1e-2
        edge = math.pi / 2 - margin
        sweep(_grid_points(grid.radii(), np.array([-edge, edge])))

    t0 = math.atan2(best_z.imag, best_z.real)
    r = max(abs(best_z), 10.0 ** grid.log10_r_max)
    ray = []
    while r < 10.0 ** grid.log10_r_extend:
        r *= 10.0
        ray.append(complex(r * math.cos(t0), r * math.sin(t0)))
    sweep(ray)

    grew = best > base_estimate * (1.0 + 1e-9)
    if best > grid.diverge_cap and grew:
        return math.inf, best_z
    return best, best_z


def selfmap_witness(e: SymbolExpr, grid: GridSpec = DEFAULT_GRID) -> tuple[bool, complex | None]:
    """Check Re phi > 0 over the grid; returns (ok, violating point or None)."""
    for z in _grid_points(grid.radii(), grid.angles()):
        try:
            if e.eval(z).real <= 0:
                return False, z
        except (BranchViolation, ZeroDivisionError):
            return False, z
    return True, None


def angular_derivative(e: SymbolExpr, grid: GridSpec | None = None) -> float:
    """Estimate sup Re z / Re phi(z); +inf when rays diverge past the cap.

    The cap defaults to 1e6 for this quantity (the estimate grows without
    bound exactly when the operator is unbounded on the plain Hardy space).
    """
    g = grid if grid is not None else GridSpec(diverge_cap=1e6)

    def ratio(z):
        denom = e.eval(z).real
        if denom <= 0:
            return math.nan
        return z.real / denom

    return _supremum_estimate(ratio, g)[0]


def radial_sup(e: SymbolExpr, grid: GridSpec = DEFAULT_GRID) -> float:
    """Estimate sup |z| / |phi(z)| with boundary-refinement passes."""

    def ratio(z):
        denom = abs(e.eval(z))
        if denom == 0:
            return math.inf
        return abs(z) / denom

    return _supremum_estimate(ratio, grid)[0]


def nbc_suprema(e: SymbolExpr, n: int, grid: GridSpec = DEFAULT_GRID) -> list[float]:
    """Estimates of sup |z^k phi^(k)(z)/phi(z)| for k = 1..n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out = []
    for k in range(1, n + 1):
        def ratio(z, k=k):
            jet = e.jet(z, k)
            phi = jet.value
            if phi == 0:
                return math.inf
            return abs(z**k * jet.derivative(k) / phi)

        out.append(_supremum_estimate(ratio, grid)[0])
    return out


def faa_di_bruno(fjet: Jet, phijet: Jet, n: int) -> complex:
    """(f o phi)^(n)(z) from the partition table.

    ``fjet`` must be based at phi(z) (= phijet.value) and both jets must carry
    at least order n.
    """
    if fjet.order < n or phijet.order < n:
        raise ValueError("jets must have order at least n")
    if fjet.base is not None and abs(fjet.base - phijet.value) > 1e-9 * (1.0 + abs(phijet.value)):
        raise ValueError("outer jet is not based at the inner jet's value")
    total = 0j
    for coeff, k, multi in bell_partitions(n).entries:
        prod = complex(coeff) * fjet.derivative(k)
        for j, mj in enumerate(multi, start=1):
            if mj:
                prod *= phijet.derivative(j) ** mj
        total += prod
    return total


# ---------------------------------------------------------------------------
# Kernel-inequality certificates


def _as_callable(psi):
    if psi is None:
        return lambda z: 1.0 + 0j
    if isinstance(psi, SymbolExpr):
        return psi.eval
    return psi


def jury_min_eig(e: SymbolExpr, n: int, M: float, points, psi=None,
                 cfg: QuadConfig = DEFAULT_CONFIG, method: str = "auto",
                 theta_margin: float = 1e-6) -> float:
    """Least eigenvalue of [M^2 K_n(z_i,z_j) - conj(psi(z_i)) psi(z_j) K_n(phi(z_i),phi(z_j))].

    Nonnegative (up to rounding) for every point set exactly when M dominates
    the weighted composition operator's norm.  All points and their images
    must stay in C+ with the given argument margin.
    """
    pts = [complex(z) for z in points]
    images = []
    for z in pts:
        u = e.eval(z)
        for val, name in ((z, "point"), (u, "image")):
            if not val.real > 0 or abs(cmath.phase(val)) > math.pi / 2 - theta_margin:
                raise ValueError(f"{name} {val} violates the half-plane margin")
        images.append(u)
    weight = _as_callable(psi)
    m = len(pts)
    A = np.zeros((m, m), dtype=complex)
    for i in range(m):
        for j in range(i + 1):
            base = kernel_eval(KernelPoint(n, pts[i], pts[j], method, cfg))
            moved = kernel_eval(KernelPoint(n, images[i], images[j], method, cfg))
            val = M**2 * base - np.conj(weight(pts[i])) * weight(pts[j]) * moved
            A[i, j] = val
            A[j, i] = val.conjugate()
    return min_eigenvalue(A)


def jury_min_m(e: SymbolExpr, n: int, points, psi=None, tol: float = 1e-10,
               cfg: QuadConfig = DEFAULT_CONFIG) -> float:
    """Least M making the sampled kernel inequality hold on these points.

    A lower bound for the operator norm that grows toward it as the point set
    refines; computed by bisection (the least eigenvalue is monotone in M).
    """

    def feasible(M):
        return jury_min_eig(e, n, M, points, psi, cfg) >= -tol

    lo, hi = 0.0, 1.0
    while not feasible(hi):
        hi *= 2.0
        if hi > 1e12:
            return math.inf
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if feasible(mid):
            hi = mid
        else:
            lo = mid
    return hi


def caughran_lower_bound(e: SymbolExpr, n: int, points, cfg: QuadConfig = DEFAULT_CONFIG) -> float:
    """sup over the sample of ||K_{n,phi(x)}|| / ||K_{n,x}||.

    The adjoint of a bounded composition operator maps the kernel function at
    x to the one at phi(x), so this ratio never exceeds the operator norm; on
    a fixed point set it also never exceeds the sampled jury bound.
    """
    best = 0.0
    for z in points:
        z = complex(z)
        u = e.eval(z)
        best = max(best, kernel_norm(n, u, cfg) / kernel_norm(n, z, cfg))
    return best


# ---------------------------------------------------------------------------
# Classification


@dataclass(frozen=True)
class SymbolReport:
    """Summary of the sampled boundedness evidence for one symbol."""

    text: str
    n: int
    selfmap_witnessed: bool
    phi_prime_infinity: float
    radial_sup: float
    nbc: tuple[float, ...]
    verdict_H2: str
    verdict_Hn: str
    h2_norm: float | None
    grid: GridSpec = field(default_factory=GridSpec)
    disclaimer: str = "sampled grid estimates, not proofs"

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "symbol": self.text,
            "n": self.n,
            "selfmap_witnessed": self.selfmap_witnessed,
            "phi_prime_infinity": self.phi_prime_infinity,
            "radial_sup": self.radial_sup,
            "nbc": list(self.nbc),
            "verdict_H2": self.verdict_H2,
            "verdict_Hn": self.verdict_Hn,
            "h2_norm": self.h2_norm,
            "grid": {
                "log10_r_min": self.grid.log10_r_min,
                "log10_r_max": self.grid.log10_r_max,
                "num_r": self.grid.num_r,
                "theta_margin": self.grid.theta_margin,
                "num_theta": self.grid.num_theta,
            },
            "disclaimer": self.disclaimer,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def classify(e: SymbolExpr, n: int, grid: GridSpec = DEFAULT_GRID) -> SymbolReport:
    """Assemble the sampled estimates and verdicts for a symbol at order n.

    The plain-Hardy verdict is bounded exactly when the angular derivative at
    infinity is finite (then the operator norm is its square root).  At order
    n >= 1: an infinite radial supremum fails the necessary condition; a
    finite angular derivative plus finite k-derivative suprema passes the
    sufficient one; anything else is inconclusive.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    ok, _witness = selfmap_witness(e, grid)
    phi_inf = angular_derivative(
        e, dataclasses.replace(grid, diverge_cap=min(grid.diverge_cap, 1e6))
    )
    rad = radial_sup(e, grid)
    nbc = tuple(nbc_suprema(e, n, grid)) if n >= 1 else ()

    verdict_h2 = "bounded" if math.isfinite(phi_inf) else "unbounded"
    if n >= 1:
        if math.isinf(rad):
            verdict_hn = "necessary-failed"
        elif math.isfinite(phi_inf) and all(math.isfinite(v) for v in nbc):
            verdict_hn = "sufficient-passed"
        else:
            verdict_hn = "inconclusive"
    else:
        # at order 0 the angular-derivative criterion is exact
        verdict_hn = "sufficient-passed" if verdict_h2 == "bounded" else "necessary-failed"

    return SymbolReport(
        text=e.to_text(),
        n=n,
        selfmap_witnessed=ok,
        phi_prime_infinity=phi_inf,
        radial_sup=rad,
        nbc=nbc,
        verdict_H2=verdict_h2,
        verdict_Hn=verdict_hn,
        h2_norm=math.sqrt(phi_inf) if math.isfinite(phi_inf) else None,
        grid=grid,
    )
