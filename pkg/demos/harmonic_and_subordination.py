"""Harmonic mappings with bounded dilatation, and subordination families.

A sense-preserving harmonic map f = h + conj(g) with |g'/h'| <= k pays for
its conjugate part: the radius shrinks as k grows.  Writing k = (K-1)/(K+1)
expresses the same thing through the quasiconformality constant K.
"""

from bohrad import (
    ExtremalParams,
    WeightFamily,
    harmonic_extremal,
    harmonic_functional,
    harmonic_radius,
    q_functional,
    subordination_extremal,
    subordination_radius,
)

family = WeightFamily.power()

print("harmonic radius against the dilatation bound (p = 1, gamma = 0):")
for k in (0.0, 0.25, 0.5, 0.75, 1.0):
    value = harmonic_radius(family, 1.0, 0.0, k).value
    print(f"  k = {k:<5} radius = {value:.12f}   formula 1/(3+2k) = {1/(3+2*k):.12f}")
print()

print("the extremal harmonic map saturates the bound as a -> 1 (k = 1):")
radius = harmonic_radius(family, 1.0, 0.0, 1.0).value
for a in (0.9, 0.99, 0.999):
    fmap = harmonic_extremal(ExtremalParams(a, 0.0, k=1.0))
    value = harmonic_functional(fmap, family, 1.0, radius)
    print(f"  a = {a:<6} N(r = 1/5) = {value:.9f}")
print()

print("subordination: radius in terms of K, with the k = (K-1)/(K+1) conversion:")
for K in (1.0, 2.0, 3.0, 5.0, 10.0):
    k = (K - 1.0) / (K + 1.0)
    value = subordination_radius(family, k).value
    print(f"  K = {K:<5} radius = {value:.12f}   (K+1)/(5K+1) = {(K+1)/(5*K+1):.12f}")
print()

print("witness family for the subordination bound, threshold d * phi_0 = 1/2:")
witness = subordination_extremal(0.5)
radius = subordination_radius(family, 0.5).value
for r in (0.9 * radius, radius, min(0.999, radius + 0.01)):
    q = q_functional(witness.fmap, family, r)
    mark = "<=" if q <= witness.distance else "> "
    print(f"  r = {r:.6f}  Q = {q:.9f}  {mark} 0.5")
