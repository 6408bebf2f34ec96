"""The exact algebra: exponential polynomials and their Laplace images.

Functions sum a t^k e^(-lam t) are closed under products, derivatives and the
weighted inner products <f, g>_n = int f^(n) conj(g^(n)) t^(2n) dt, all
computed exactly; their transforms are rational combinations with poles in
the left half-plane.
"""

import math

from hsob import ExpPoly, inner_product_n, integrate_halfline, laplace, norm_n

e1 = ExpPoly.exponential(1.0)           # e^{-t}
f = ExpPoly.monomial(2.0, 1, 1.5)       # 2 t e^{-1.5 t}
g = e1 + f

print("== derivatives stay inside the algebra ==")
print("g      :", g.terms)
print("g'     :", g.derivative().terms)
print("t^2 g  :", g.times_power(2).terms)

print()
print("== exact Laplace transforms ==")
G = laplace(g)
print("G(1)   :", G(1.0), "  (= 1/2 + 2/2.5^2)")
print("G'(1)  :", G.derivative()(1.0))

print()
print("== weighted inner products: exact vs quadrature ==")
for n in range(4):
    exact = inner_product_n(g, g, n).real
    gn = g.derivative(n)
    quad = integrate_halfline(lambda t: abs(gn(t)) ** 2 * t ** (2 * n), 1.0).value.real
    print(f"n={n}:  exact {exact:.15f}   quadrature {quad:.15f}")

print()
print("== the exponential-norm formula ==")
lam = 1 + 1j
for n in range(4):
    formula = (
        math.sqrt(math.factorial(2 * n) / 2 ** (2 * n + 1))
        * abs(lam) ** n / lam.real ** (n + 0.5)
    )
    print(f"||e_lam||_({n}) = {norm_n(ExpPoly.exponential(lam), n):.15f}   formula {formula:.15f}")
