"""Tour of the built-in Laplace exponent catalog.

Prints each catalog entry, evaluates phi and its conjugate psi = lambda/phi,
and shows that conjugation is an involution and that entries round-trip
through their JSON descriptions.
"""

import numpy as np

from sbmpot import conjugate, default_catalog, phi_from_json, phi_to_json

lams = np.array([0.1, 1.0, 10.0, 100.0])

print("catalog entries and phi values")
print(f"{'label':38s}" + "".join(f"phi({lam:g})".rjust(12) for lam in lams))
for phi in default_catalog():
    row = "".join(f"{v:12.5g}" for v in phi(lams))
    print(f"{phi.label():38s}{row}")

phi = default_catalog()[1]          # stable, alpha = 1
psi = conjugate(phi)
back = conjugate(psi)
print()
print("conjugation: psi(lam) = lam / phi(lam), applied twice returns phi")
for lam in lams:
    print(f"  lam={lam:6g}  phi={phi(lam):.6f}  psi={psi(lam):.6f}  "
          f"phi*psi/lam={phi(lam) * psi(lam) / lam:.12f}  "
          f"psi_conj={back(lam):.6f}")

entry = phi_to_json(default_catalog()[3])
print()
print("JSON round trip:", entry)
clone = phi_from_json(entry)
print(f"  phi(2.5) original {default_catalog()[3](2.5):.12f}  clone {clone(2.5):.12f}")
