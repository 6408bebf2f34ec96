"""Analytic self-maps of the half-plane as composition-operator symbols.

A symbol phi is parsed to an AST, differentiated by exact jet arithmetic, and
classified: the angular derivative at infinity decides boundedness on the
plain Hardy space (norm = its square root); an infinite radial supremum rules
out boundedness on every order n >= 1; finite derivative suprema certify it.
The kernel inequality M^2 K >= K o phi gives eigenvalue certificates whose
threshold is the operator norm.
"""

from hsob import (
    angular_derivative,
    classify,
    eval_jet,
    jury_min_eig,
    jury_min_m,
    parse,
    radial_sup,
)

print("== jets of a parsed symbol ==")
phi = parse("z + log1p(z)")
jet = eval_jet(phi, 1.0, 3)
print("phi(1), phi'(1), phi''(1), phi'''(1):",
      [complex(round(jet.derivative(k).real, 6), round(jet.derivative(k).imag, 6))
       for k in range(4)])

print()
print("== the classification table ==")
table = [("2*z+1", 2), ("z+i", 1), ("z+sqrt(z)+1", 2),
         ("z+log1p(z)", 2), ("sqrt(z)", 1), ("1/(z+1)", 1)]
for text, n in table:
    r = classify(parse(text), n)
    nbc = ", ".join(f"{v:.3g}" for v in r.nbc)
    print(f"{text:14s} H2: {r.verdict_H2:9s}  order {n}: {r.verdict_Hn:17s} "
          f"phi'(inf)={r.phi_prime_infinity:<8.4g} radial={r.radial_sup:<8.4g} nbc=[{nbc}]")

print()
print("== eigenvalue certificates at the norm threshold ==")
phi = parse("4*z+1")
pts = [0.5 + 0.2j, 1.0, 2.0 - 1.0j, 10.0, 1e3]
print("phi = 4z+1, operator norm on the plain Hardy space = sqrt(phi'(inf)) = 0.5")
for m in (0.5, 0.45):
    eig = jury_min_eig(phi, 0, m, pts)
    print(f"  M = {m}: least Gram eigenvalue {eig:+.3e}")
m_star = jury_min_m(phi, 0, pts)
print(f"  least admissible M on this point set: {m_star:.6f}")

print()
print("== suprema are sampled estimates, not proofs ==")
print("angular_derivative(2z+1) =", angular_derivative(parse("2*z+1")))
print("radial_sup(z+i)          =", radial_sup(parse("z+i")), " (escapes to the boundary)")
